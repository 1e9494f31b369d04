#pragma once

#include <cstdint>

#include "qpos/laurent_poly.hpp"

namespace qpos {

/// Describes prod_{i=0}^{length-1} (1 - sign * q^(start + i*step)).
/// sign = +1 gives (q^start; q^step)_length, sign = -1 gives (-q^start; q^step)_length.
struct PochhammerSpec {
  int sign = 1;
  Exponent start = 1;
  Exponent step = 1;
  std::int64_t length = 0;
};

/// Throws NegativeLength for length < 0 and RangeError for an invalid
/// sign, start or step.
LaurentPoly pochhammer(const PochhammerSpec& spec);

/// (q^start; q^step)_length
inline LaurentPoly q_pochhammer(Exponent start, Exponent step, std::int64_t length) {
  return pochhammer({.sign = 1, .start = start, .step = step, .length = length});
}

/// Gaussian binomial [top, bottom]_q; zero when bottom < 0, top < 0 or
/// bottom > top. Built as prod_{i=1}^{k} (1 - q^{top-k+i}) / (1 - q^i) with
/// k = min(bottom, top - bottom), each partial product divided exactly.
LaurentPoly q_binomial(std::int64_t top, std::int64_t bottom);

/// Same contract as q_binomial, via the q-Pascal table
/// [a,b] = [a-1,b] + q^{a-b} [a-1,b-1].
LaurentPoly q_binomial_pascal(std::int64_t top, std::int64_t bottom);

/// Rogers-Szego polynomial H_n(t) = sum_j t^j [n, j]_q at the signed
/// monomial t = t_sign * q^t_exp.
LaurentPoly rogers_szego(std::int64_t n, int t_sign, Exponent t_exp);

}  // namespace qpos
