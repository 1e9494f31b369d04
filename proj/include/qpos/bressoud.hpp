#pragma once

#include <cstdint>
#include <vector>

#include "qpos/laurent_poly.hpp"
#include "qpos/rational.hpp"

namespace qpos {

/// Parameters of G(N, M; alpha, beta, K) =
///   sum_j (-1)^j q^{K j ((alpha+beta) j + alpha - beta) / 2} [M+N, N-Kj]_q.
/// N and M may be negative; every binomial then follows the zero
/// convention.
struct GParams {
  std::int64_t N = 0;
  std::int64_t M = 0;
  ExactRational alpha;
  ExactRational beta;
  std::int64_t K = 1;
};

/// Parameters of the two-family sum D_{K,i}(N, M; alpha, beta).
struct DParams {
  std::int64_t N = 0;
  std::int64_t M = 0;
  std::int64_t K = 2;
  std::int64_t i = 1;
  ExactRational alpha;
  ExactRational beta;
};

/// Inclusive integer interval; empty when lo > hi.
struct JRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool empty() const { return lo > hi; }
  std::int64_t size() const { return empty() ? 0 : hi - lo + 1; }
  friend bool operator==(const JRange&, const JRange&) = default;
};

/// The j for which [M+N, N-Kj] can be nonzero: ceil(-M/K) <= j <= floor(N/K),
/// empty if M+N < 0.
JRange g_j_range(const GParams& p);

struct DRanges {
  JRange first;   // [M+N, M-Kj]
  JRange second;  // [M+N, M-Kj-i]
};
DRanges d_j_ranges(const DParams& p);

/// Exact evaluation. Each in-range exponent is computed as a rational and
/// must be integral, else NonIntegralExponent. RangeError for K < 1 or
/// negative alpha/beta.
LaurentPoly eval_G(const GParams& p);

/// As eval_G; additionally requires 0 < i < K.
LaurentPoly eval_D(const DParams& p);

/// G-exponent K j ((alpha+beta) j + alpha - beta) / 2, certified integral.
Exponent g_exponent(const GParams& p, std::int64_t j);

// ---------------------------------------------------------------------------
// Conjecture admissibility

enum class Conjecture {
  bressoud_g,     // non-negativity of G: Bressoud's conjecture
  generalized_d,  // non-negativity of D_{K,i}
};

struct ConjecturePoint {
  std::int64_t N = 0;
  std::int64_t M = 0;
  ExactRational alpha;
  ExactRational beta;
  std::int64_t K = 1;
  std::int64_t i = 0;  // only read for generalized_d
};

/// A finite scan window. alpha and beta range over the multiples of 1/K
/// (bressoud_g) or 1/gcd(K, i) (generalized_d) allowed by the alpha+beta
/// bound, which is exactly the set where the integrality conditions hold.
struct ConjectureWindow {
  Conjecture which = Conjecture::bressoud_g;
  std::int64_t n_max = 0;
  std::int64_t m_max = 0;
  std::int64_t k_min = 1;
  std::int64_t k_max = 0;
};

/// True iff the point satisfies every hypothesis of the selected conjecture.
///
/// bressoud_g: K >= 1; N, M, alpha*K, beta*K non-negative integers;
///   1 <= alpha+beta <= 2K-1 (both strict when K = 2);
///   beta-K <= N-M <= K-alpha.
/// generalized_d: 0 < i < K; N, M, alpha*K, beta*K, alpha*i, beta*i
///   non-negative integers; 1 <= alpha+beta <= K-1 (both strict when
///   K = 4, i = 2); beta-i <= N-M <= K-alpha-i.
bool check_admissible(Conjecture which, const ConjecturePoint& pt);

/// Every candidate point of the window's grid, admissible or not, in
/// lexicographic (K, i, alpha, beta, N, M) order.
std::vector<ConjecturePoint> window_candidates(const ConjectureWindow& w);

}  // namespace qpos
