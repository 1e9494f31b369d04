#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "qpos/bressoud.hpp"
#include "qpos/laurent_poly.hpp"

namespace qpos {

/// Selects the cubic transformation: even uses T_{L,r} and
/// [2r, r-j]_{q^3} -> q^{3j^2} [2L, L-3j]_q; odd uses T~_{L,r} and
/// [2r+1, r-j]_{q^3} -> q^{3j^2+3j} [2L+1, L-3j-1]_q.
enum class TransformKind { even, odd };

std::string_view to_string(TransformKind k);

/// Largest r with a constructible coefficient at this L (-1 if none):
/// floor(L/3) for even, floor((L-1)/3) for odd.
std::int64_t max_r(TransformKind kind, std::int64_t L);

/// T_{L,r} = q^{3r^2} (q^3;q^3)_{L-r-1} (1-q^{2L}) / ((q^3;q^3)_{2r} (q;q)_{L-3r}),
/// for 1 <= L, 0 <= 3r <= L.
LaurentPoly t_coeff(std::int64_t L, std::int64_t r);

/// T~_{L,r} = q^{3r^2+3r} (q^3;q^3)_{L-r-1} (1-q^{2L+1})
///            / ((q^3;q^3)_{2r+1} (q;q)_{L-3r-1}), for 1 <= L, 0 <= r, L-3r-1 >= 0.
LaurentPoly t_tilde_coeff(std::int64_t L, std::int64_t r);

/// f_{L,r} = (q^3;q^3)_{(L-r-2)/2} (1-q^L) / ((q^3;q^3)_r (q;q)_{(L-3r)/2}),
/// for 0 <= 3r <= L, r = L (mod 2), L - r >= 2.
LaurentPoly f_coeff(std::int64_t L, std::int64_t r);

/// t_coeff or t_tilde_coeff by kind.
LaurentPoly transform_coeff(TransformKind kind, std::int64_t L, std::int64_t r);

struct BaseCheck {
  bool holds = false;
  LaurentPoly lhs;
  LaurentPoly rhs;
};

/// Evaluates both sides of the base identity at (L, j):
///   even: sum_r T_{L,r} [2r, r-j]_{q^3}    vs q^{3j^2} [2L, L-3j]_q
///   odd:  sum_r T~_{L,r} [2r+1, r-j]_{q^3} vs q^{3j^2+3j} [2L+1, L-3j-1]_q
/// L = 0 is accepted: the even coefficient T_{0,0} is taken as 1 and the odd
/// sum is empty.
BaseCheck verify_base(TransformKind kind, std::int64_t L, std::int64_t j);

/// j range outside which both sides of the base identity vanish.
JRange base_j_range(TransformKind kind, std::int64_t L);

using RSequence = std::function<LaurentPoly(std::int64_t r)>;

/// sum_r coeff(L, r) * F(r) over every constructible r. L = 0 follows the
/// verify_base convention (even: F(0), odd: 0). If every F(r) is
/// non-negative, so is the result.
LaurentPoly apply_transform(TransformKind kind, std::int64_t L, const RSequence& F);

/// Base polynomial of a transform chain, as a function of n:
///   even: G(n+a, n-a; x/3, y/3, 3)
///   odd:  G(n-a, n+a+1; x/3, y/3, 3)
struct ChainSeed {
  std::int64_t a = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
};

/// Parameters of the level-t G reached after t applications:
///   even: G(n+3^t a, n-3^t a; x/3 + (3^t-1)(3-2a)/2, y/3 + (3^t-1)(3+2a)/2, 3^{t+1})
///   odd:  G(n-A, n+A+1; x/3 + (3^t-1)(a+2), y/3 + (3^t-1)(1-a), 3^{t+1}),
///         A = 3^t a + (3^t-1)/2
GParams chain_params(TransformKind kind, const ChainSeed& seed, std::int64_t t, std::int64_t n);

/// Exponent of the monomial picked up by one application at level s
/// (3 * 9^s a^2 even, 3 A_s^2 + 3 A_s odd).
Exponent chain_step_prefactor(TransformKind kind, const ChainSeed& seed, std::int64_t s);

struct IterateResult {
  LaurentPoly value;         // t-fold transform of the base sequence
  Exponent prefactor = 0;    // value == q^prefactor * eval_G(target)
  GParams target;
};

/// Applies the transform t times, starting from the base G with q -> q^3
/// as the r-sequence and feeding each level's output (again dilated by 3)
/// into the next. The value is computed only through the transform; the
/// claimed closed form is reported in prefactor/target for checking.
IterateResult iterate_transform(TransformKind kind, std::int64_t t, std::int64_t n,
                                const ChainSeed& seed);

}  // namespace qpos
