#include "qpos/bressoud.hpp"

#include <numeric>
#include <string>

#include "qpos/errors.hpp"
#include "qpos/qfun.hpp"

namespace qpos {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

void check_rationals(const ExactRational& alpha, const ExactRational& beta) {
  if (alpha.sign() < 0 || beta.sign() < 0) {
    throw RangeError("alpha and beta must be non-negative (got " + alpha.to_string() + ", " +
                     beta.to_string() + ")");
  }
}

Exponent certify(const ExactRational& e, std::int64_t j, const char* what) {
  if (!e.is_integer()) {
    throw NonIntegralExponent(std::string(what) + " exponent " + e.to_string() +
                              " at j=" + std::to_string(j) + " is not an integer");
  }
  return e.to_int64();
}

bool integral_nonneg(const ExactRational& x) { return x.is_integer() && x.sign() >= 0; }

}  // namespace

JRange g_j_range(const GParams& p) {
  if (p.K < 1) throw RangeError("K must be positive");
  if (p.M + p.N < 0) return {};
  return {ceil_div(-p.M, p.K), floor_div(p.N, p.K)};
}

DRanges d_j_ranges(const DParams& p) {
  if (p.K < 1) throw RangeError("K must be positive");
  if (p.M + p.N < 0) return {};
  // 0 <= M - Kj <= M + N  and  0 <= M - Kj - i <= M + N
  return {{ceil_div(-p.N, p.K), floor_div(p.M, p.K)},
          {ceil_div(-p.N - p.i, p.K), floor_div(p.M - p.i, p.K)}};
}

Exponent g_exponent(const GParams& p, std::int64_t j) {
  const ExactRational jj(j);
  const ExactRational e =
      ExactRational(p.K) * jj * ((p.alpha + p.beta) * jj + p.alpha - p.beta) / ExactRational(2);
  return certify(e, j, "G");
}

LaurentPoly eval_G(const GParams& p) {
  check_rationals(p.alpha, p.beta);
  const JRange r = g_j_range(p);
  LaurentPoly sum;
  for (std::int64_t j = r.lo; j <= r.hi; ++j) {
    const Exponent e = g_exponent(p, j);
    sum += monomial_mul(q_binomial(p.M + p.N, p.N - p.K * j), j % 2 == 0 ? 1 : -1, e);
  }
  return sum;
}

LaurentPoly eval_D(const DParams& p) {
  check_rationals(p.alpha, p.beta);
  if (!(0 < p.i && p.i < p.K)) throw RangeError("D_{K,i} needs 0 < i < K");
  const DRanges r = d_j_ranges(p);
  const ExactRational K(p.K), i(p.i), s = p.alpha + p.beta;
  LaurentPoly sum;
  for (std::int64_t j = r.first.lo; j <= r.first.hi; ++j) {
    const ExactRational jj(j);
    const Exponent e = certify(jj * (s * K * jj + K * p.beta - s * i), j, "D first-family");
    sum += monomial_mul(q_binomial(p.M + p.N, p.M - p.K * j), 1, e);
  }
  for (std::int64_t j = r.second.lo; j <= r.second.hi; ++j) {
    const ExactRational jj(j);
    const Exponent e = certify((s * jj + p.beta) * (K * jj + i), j, "D second-family");
    sum += monomial_mul(q_binomial(p.M + p.N, p.M - p.K * j - p.i), -1, e);
  }
  return sum;
}

bool check_admissible(Conjecture which, const ConjecturePoint& pt) {
  if (pt.N < 0 || pt.M < 0 || pt.K < 1) return false;
  const ExactRational K(pt.K);
  const ExactRational diff(pt.N - pt.M);
  const ExactRational s = pt.alpha + pt.beta;
  if (!integral_nonneg(pt.alpha * K) || !integral_nonneg(pt.beta * K)) return false;

  if (which == Conjecture::bressoud_g) {
    const ExactRational upper(2 * pt.K - 1);
    const bool strict = pt.K == 2;
    const bool sum_ok = strict ? (ExactRational(1) < s && s < upper)
                               : (ExactRational(1) <= s && s <= upper);
    return sum_ok && pt.beta - K <= diff && diff <= K - pt.alpha;
  }

  if (!(0 < pt.i && pt.i < pt.K)) return false;
  const ExactRational i(pt.i);
  if (!integral_nonneg(pt.alpha * i) || !integral_nonneg(pt.beta * i)) return false;
  const ExactRational upper(pt.K - 1);
  const bool strict = pt.K == 4 && pt.i == 2;
  const bool sum_ok = strict ? (ExactRational(1) < s && s < upper)
                             : (ExactRational(1) <= s && s <= upper);
  return sum_ok && pt.beta - i <= diff && diff <= K - pt.alpha - i;
}

std::vector<ConjecturePoint> window_candidates(const ConjectureWindow& w) {
  std::vector<ConjecturePoint> out;
  if (w.n_max < 0 || w.m_max < 0) return out;
  for (std::int64_t K = std::max<std::int64_t>(w.k_min, 1); K <= w.k_max; ++K) {
    const bool is_g = w.which == Conjecture::bressoud_g;
    const std::int64_t i_lo = is_g ? 0 : 1;
    const std::int64_t i_hi = is_g ? 0 : K - 1;
    for (std::int64_t i = i_lo; i <= i_hi; ++i) {
      const std::int64_t den = is_g ? K : std::gcd(K, i);
      const std::int64_t sum_cap = den * (is_g ? 2 * K - 1 : K - 1);
      for (std::int64_t u = 0; u <= sum_cap; ++u) {
        for (std::int64_t v = 0; u + v <= sum_cap; ++v) {
          const ExactRational alpha{Integer(u), Integer(den)};
          const ExactRational beta{Integer(v), Integer(den)};
          for (std::int64_t N = 0; N <= w.n_max; ++N) {
            for (std::int64_t M = 0; M <= w.m_max; ++M) {
              out.push_back({N, M, alpha, beta, K, i});
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace qpos
