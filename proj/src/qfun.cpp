#include "qpos/qfun.hpp"

#include <algorithm>
#include <string>

#include "qpos/errors.hpp"

namespace qpos {

namespace {

// coeffs *= (1 + c q^e), e > 0, in place (coeffs start at q^0 offset).
void mul_binomial_factor(std::vector<Integer>& coeffs, int c, std::size_t e) {
  const std::size_t n = coeffs.size();
  coeffs.resize(n + e);
  for (std::size_t i = n; i-- > 0;) {
    if (coeffs[i] == 0) continue;
    if (c > 0) {
      coeffs[i + e] += coeffs[i];
    } else {
      coeffs[i + e] -= coeffs[i];
    }
  }
}

// coeffs /= (1 - q^e); exact by construction of the caller.
void div_one_minus(std::vector<Integer>& coeffs, std::size_t e) {
  if (coeffs.size() < e) throw NotDivisible("q_binomial: internal division failure");
  const std::size_t nq = coeffs.size() - e;
  for (std::size_t i = e; i < nq; ++i) coeffs[i] += coeffs[i - e];
  for (std::size_t i = nq; i < coeffs.size(); ++i) {
    if (coeffs[i] + coeffs[i - e] != 0) throw NotDivisible("q_binomial: internal division failure");
  }
  coeffs.resize(nq);
}

}  // namespace

LaurentPoly pochhammer(const PochhammerSpec& spec) {
  if (spec.length < 0) {
    throw NegativeLength("Pochhammer product with length " + std::to_string(spec.length));
  }
  if (spec.sign != 1 && spec.sign != -1) throw RangeError("Pochhammer sign must be +1 or -1");
  if (spec.start < 0 || spec.step < 1) {
    throw RangeError("Pochhammer needs start >= 0 and step >= 1");
  }
  std::vector<Integer> coeffs{1};
  Integer constant = 1;
  for (std::int64_t i = 0; i < spec.length; ++i) {
    const Exponent e = spec.start + i * spec.step;
    if (e == 0) {
      // (1 - sign) is a scalar factor
      constant *= (1 - spec.sign);
      continue;
    }
    mul_binomial_factor(coeffs, -spec.sign, static_cast<std::size_t>(e));
  }
  if (constant != 1) {
    for (auto& c : coeffs) c *= constant;
  }
  return LaurentPoly(0, std::move(coeffs));
}

LaurentPoly q_binomial(std::int64_t top, std::int64_t bottom) {
  if (top < 0 || bottom < 0 || bottom > top) return {};
  const std::int64_t k = std::min(bottom, top - bottom);
  std::vector<Integer> coeffs{1};
  for (std::int64_t i = 1; i <= k; ++i) {
    mul_binomial_factor(coeffs, -1, static_cast<std::size_t>(top - k + i));
    div_one_minus(coeffs, static_cast<std::size_t>(i));
  }
  return LaurentPoly(0, std::move(coeffs));
}

LaurentPoly q_binomial_pascal(std::int64_t top, std::int64_t bottom) {
  if (top < 0 || bottom < 0 || bottom > top) return {};
  // row[b] holds [a, b] for the current a.
  std::vector<LaurentPoly> row(static_cast<std::size_t>(bottom) + 1);
  row[0] = 1;
  for (std::int64_t a = 1; a <= top; ++a) {
    const std::int64_t hi = std::min(a, bottom);
    for (std::int64_t b = hi; b >= 1; --b) {
      const auto ub = static_cast<std::size_t>(b);
      row[ub] = row[ub] + monomial_mul(row[ub - 1], 1, a - b);
    }
  }
  return row[static_cast<std::size_t>(bottom)];
}

LaurentPoly rogers_szego(std::int64_t n, int t_sign, Exponent t_exp) {
  if (n < 0) throw RangeError("rogers_szego: n must be non-negative");
  if (t_sign != 1 && t_sign != -1) throw RangeError("rogers_szego: t_sign must be +1 or -1");
  LaurentPoly sum;
  for (std::int64_t j = 0; j <= n; ++j) {
    const int sign = (t_sign < 0 && j % 2 == 1) ? -1 : 1;
    sum += monomial_mul(q_binomial(n, j), sign, j * t_exp);
  }
  return sum;
}

}  // namespace qpos
