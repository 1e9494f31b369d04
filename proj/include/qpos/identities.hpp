#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qpos/bressoud.hpp"
#include "qpos/laurent_poly.hpp"

namespace qpos {

/// Catalog of checkable identities and positivity claims.
enum class IdentityId {
  andrews_a,     // A_n as a sum of Pochhammer ratios
  andrews_b,     // B_n
  andrews_c,     // C_n
  thm16_a0,      // sum (-1)^j ... = sum (-1)^j q^{3j^2} [2n, n-3j]
  thm16_a1,      //   and its odd-length companion
  thm17,         // q^{3j^2-3j} weights vs q^{3j^2+3j}
  thm18,         // q^{3j^2} weights vs q^{6j^2}
  thm19_a0,      // q^{3j^2+3j} weights vs q^{6j^2+3j}
  thm19_a1,
  rs_even,       // H_{2n}(-1) and its alternating binomial form
  rs_odd_q,      // H_n(-q) and the two q^j-weighted forms
  rs_inverted,   // q -> 1/q images of the above
  berkovich_g1,  // G(n, n+1; 8/3, 4/3, 3) as a positive sum
  berkovich_g2,  // G(n, n+1; 4/3, 2/3, 3)
  base_even,     // even cubic transformation
  base_odd,      // odd cubic transformation
  iter_even,     // even transform applied to G(r+a, r-a; x/3, y/3, 3)
  iter_odd,      // odd transform applied to G(r-a, r+a+1; x/3, y/3, 3)
  pos_cor112,    // non-negativity of the even-chain G family
  pos_cor113,    // non-negativity of the odd-chain G family
};

std::span<const IdentityId> all_identities();
std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

/// n (or L) runs over [n_min, n_max]; t_max bounds iteration depth for the
/// chain and positivity entries.
struct VerifyRange {
  std::int64_t n_min = 1;
  std::int64_t n_max = 0;
  std::int64_t t_max = 0;
};

/// Default range for each entry; also the smallest valid n_min.
VerifyRange default_range(IdentityId id);

struct Counterexample {
  nlohmann::json params;  // the failing point
  std::string note;       // which sub-check failed
  LaurentPoly lhs;
  LaurentPoly rhs;
};

/// Non-negativity of the binomial-sum side, tracked separately from the
/// identity verdict for the entries whose right side is claimed to be
/// non-negative. Only the first negative point is kept.
struct RhsNonneg {
  bool holds = true;
  nlohmann::json failed_at;
  LaurentPoly rhs;
};

struct IdentityReport {
  IdentityId id{};
  VerifyRange range;
  std::size_t points = 0;
  bool passed = false;
  std::optional<Counterexample> counterexample;  // present iff !passed
  std::optional<RhsNonneg> rhs_nonneg;           // cubic-shape entries only
  std::chrono::milliseconds elapsed{0};
};

struct RunOptions {
  unsigned threads = 1;
};

/// Builds both sides of every point of the range and compares them
/// exactly. Throws RangeError when range.n_min is below the entry's domain
/// (e.g. n = 0 for the identities stated for n > 0) or when a positivity entry is passed.
IdentityReport verify_identity(IdentityId id, const VerifyRange& range,
                               const RunOptions& opts = {});

/// Non-negativity of the transform-chain G families for 0 <= t <= t_max and
/// 0 <= n <= n_max. Only pos_cor112 / pos_cor113 are accepted.
IdentityReport check_positivity(IdentityId id, std::int64_t t_max, std::int64_t n_max,
                                const RunOptions& opts = {});

/// Dispatches to verify_identity or check_positivity.
IdentityReport run_identity(IdentityId id, const VerifyRange& range, const RunOptions& opts = {});

/// GParams of each positivity family member at (t, n); `entry` indexes the
/// family (0..2 for pos_cor112, 0..1 for pos_cor113).
GParams positivity_params(IdentityId id, int entry, std::int64_t t, std::int64_t n);
int positivity_entry_count(IdentityId id);

/// A numerator/denominator pair whose quotient may or may not be a
/// polynomial on its own.
struct Ratio {
  LaurentPoly num;
  LaurentPoly den;
};

/// Sum of the ratios. Each one is divided exactly when it can be; the rest
/// are accumulated over their common denominator and divided once.
LaurentPoly sum_of_ratios(std::span<const Ratio> terms);

// ---------------------------------------------------------------------------
// Conjecture scanning

struct ScanViolation {
  ConjecturePoint point;
  LaurentPoly value;
};

struct ScanResult {
  ConjectureWindow window;
  std::size_t candidates = 0;  // grid points considered
  std::size_t tested = 0;      // admissible points evaluated
  std::vector<ScanViolation> violations;
  std::chrono::milliseconds elapsed{0};
};

/// Evaluates G or D_{K,i} at every admissible point of the window and
/// records each one with a negative coefficient, in grid order.
ScanResult scan_conjecture(const ConjectureWindow& window, const RunOptions& opts = {});

// ---------------------------------------------------------------------------
// JSON

nlohmann::json range_to_json(IdentityId id, const VerifyRange& range);
nlohmann::json report_to_json(const IdentityReport& r, bool include_timing);
nlohmann::json point_to_json(const ConjecturePoint& p, Conjecture which);
nlohmann::json scan_to_json(const ScanResult& s, bool include_timing);

}  // namespace qpos
