#include "qpos/transforms.hpp"

#include <map>
#include <string>

#include "qpos/errors.hpp"
#include "qpos/qfun.hpp"

namespace qpos {

namespace {

LaurentPoly one_minus_q(Exponent e) { return LaurentPoly(1) - LaurentPoly::monomial(1, e); }

std::int64_t pow3(std::int64_t t) {
  std::int64_t p = 1;
  for (std::int64_t s = 0; s < t; ++s) p *= 3;
  return p;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::string_view to_string(TransformKind k) { return k == TransformKind::even ? "even" : "odd"; }

std::int64_t max_r(TransformKind kind, std::int64_t L) {
  if (L < 0) return -1;
  return kind == TransformKind::even ? L / 3 : floor_div(L - 1, 3);
}

LaurentPoly t_coeff(std::int64_t L, std::int64_t r) {
  if (L < 1 || r < 0 || 3 * r > L) {
    throw RangeError("T[" + std::to_string(L) + "," + std::to_string(r) +
                     "] needs L >= 1 and 0 <= 3r <= L");
  }
  const LaurentPoly num =
      monomial_mul(q_pochhammer(3, 3, L - r - 1) * one_minus_q(2 * L), 1, 3 * r * r);
  return exact_div(num, q_pochhammer(3, 3, 2 * r) * q_pochhammer(1, 1, L - 3 * r));
}

LaurentPoly t_tilde_coeff(std::int64_t L, std::int64_t r) {
  if (L < 1 || r < 0 || L - 3 * r - 1 < 0) {
    throw RangeError("T~[" + std::to_string(L) + "," + std::to_string(r) +
                     "] needs L >= 1, r >= 0 and L - 3r - 1 >= 0");
  }
  const LaurentPoly num =
      monomial_mul(q_pochhammer(3, 3, L - r - 1) * one_minus_q(2 * L + 1), 1, 3 * r * r + 3 * r);
  return exact_div(num, q_pochhammer(3, 3, 2 * r + 1) * q_pochhammer(1, 1, L - 3 * r - 1));
}

LaurentPoly f_coeff(std::int64_t L, std::int64_t r) {
  if (r < 0 || 3 * r > L || (L - r) % 2 != 0 || L - r < 2) {
    throw RangeError("f[" + std::to_string(L) + "," + std::to_string(r) +
                     "] needs 0 <= 3r <= L, r = L mod 2 and L - r >= 2");
  }
  const LaurentPoly num = q_pochhammer(3, 3, (L - r - 2) / 2) * one_minus_q(L);
  return exact_div(num, q_pochhammer(3, 3, r) * q_pochhammer(1, 1, (L - 3 * r) / 2));
}

LaurentPoly transform_coeff(TransformKind kind, std::int64_t L, std::int64_t r) {
  return kind == TransformKind::even ? t_coeff(L, r) : t_tilde_coeff(L, r);
}

JRange base_j_range(TransformKind kind, std::int64_t L) {
  if (kind == TransformKind::even) return {-(L / 3), L / 3};
  const std::int64_t hi = std::max(max_r(kind, L), floor_div(L - 1, 3));
  const std::int64_t lo = std::min(-max_r(kind, L) - 1, -floor_div(L + 2, 3));
  return {lo, hi};
}

BaseCheck verify_base(TransformKind kind, std::int64_t L, std::int64_t j) {
  if (L < 0) throw RangeError("verify_base needs L >= 0");
  BaseCheck out;
  if (kind == TransformKind::even) {
    out.lhs = apply_transform(kind, L, [j](std::int64_t r) {
      return dilate(q_binomial(2 * r, r - j), 3);
    });
    out.rhs = monomial_mul(q_binomial(2 * L, L - 3 * j), 1, 3 * j * j);
  } else {
    out.lhs = apply_transform(kind, L, [j](std::int64_t r) {
      return dilate(q_binomial(2 * r + 1, r - j), 3);
    });
    out.rhs = monomial_mul(q_binomial(2 * L + 1, L - 3 * j - 1), 1, 3 * j * j + 3 * j);
  }
  out.holds = out.lhs == out.rhs;
  return out;
}

LaurentPoly apply_transform(TransformKind kind, std::int64_t L, const RSequence& F) {
  if (L < 0) throw RangeError("apply_transform needs L >= 0");
  if (L == 0) return kind == TransformKind::even ? F(0) : LaurentPoly{};
  LaurentPoly sum;
  for (std::int64_t r = 0; r <= max_r(kind, L); ++r) {
    const LaurentPoly fr = F(r);
    if (fr.is_zero()) continue;
    sum += transform_coeff(kind, L, r) * fr;
  }
  return sum;
}

GParams chain_params(TransformKind kind, const ChainSeed& seed, std::int64_t t, std::int64_t n) {
  if (t < 0) throw RangeError("chain level must be non-negative");
  const std::int64_t p = pow3(t);
  const ExactRational x3(Integer(seed.x), Integer(3));
  const ExactRational y3(Integer(seed.y), Integer(3));
  const std::int64_t a = seed.a;
  if (kind == TransformKind::even) {
    return {.N = n + p * a,
            .M = n - p * a,
            .alpha = x3 + ExactRational(Integer((p - 1) * (3 - 2 * a)), Integer(2)),
            .beta = y3 + ExactRational(Integer((p - 1) * (3 + 2 * a)), Integer(2)),
            .K = 3 * p};
  }
  const std::int64_t shift = p * a + (p - 1) / 2;
  return {.N = n - shift,
          .M = n + shift + 1,
          .alpha = x3 + ExactRational((p - 1) * (a + 2)),
          .beta = y3 + ExactRational((p - 1) * (1 - a)),
          .K = 3 * p};
}

Exponent chain_step_prefactor(TransformKind kind, const ChainSeed& seed, std::int64_t s) {
  const std::int64_t p = pow3(s);
  if (kind == TransformKind::even) return 3 * p * p * seed.a * seed.a;
  const std::int64_t shift = p * seed.a + (p - 1) / 2;
  return 3 * shift * shift + 3 * shift;
}

IterateResult iterate_transform(TransformKind kind, std::int64_t t, std::int64_t n,
                                const ChainSeed& seed) {
  if (t < 0 || n < 0) throw RangeError("iterate_transform needs t >= 0 and n >= 0");
  std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly> memo;
  std::function<LaurentPoly(std::int64_t, std::int64_t)> level =
      [&](std::int64_t s, std::int64_t m) -> LaurentPoly {
    const auto key = std::make_pair(s, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    LaurentPoly v = s == 0 ? eval_G(chain_params(kind, seed, 0, m))
                           : apply_transform(kind, m, [&](std::int64_t r) {
                               return dilate(level(s - 1, r), 3);
                             });
    memo.emplace(key, v);
    return v;
  };

  IterateResult out;
  out.value = level(t, n);
  for (std::int64_t s = 0; s < t; ++s) {
    out.prefactor = 3 * out.prefactor + chain_step_prefactor(kind, seed, s);
  }
  out.target = chain_params(kind, seed, t, n);
  return out;
}

}  // namespace qpos
