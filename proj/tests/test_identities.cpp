#include <doctest.h>

#include "poly_printer.hpp"

#include "qpos/errors.hpp"
#include "qpos/identities.hpp"
#include "qpos/qfun.hpp"

using namespace qpos;

namespace {

LaurentPoly P(std::vector<Integer> c, Exponent lo = 0) { return LaurentPoly(lo, std::move(c)); }
ExactRational R(long p, long q = 1) { return {Integer(p), Integer(q)}; }

bool is_positivity(IdentityId id) {
  return id == IdentityId::pos_cor112 || id == IdentityId::pos_cor113;
}

}  // namespace

TEST_CASE("catalog names round-trip") {
  CHECK(all_identities().size() == 20);
  for (auto id : all_identities()) {
    const auto parsed = parse_identity(identity_name(id));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == id);
  }
  CHECK(identity_name(IdentityId::andrews_a) == "andrews-A");
  CHECK(identity_name(IdentityId::thm18) == "thm18");
  CHECK_FALSE(parse_identity("no-such-id").has_value());
}

TEST_CASE("single-point examples") {
  auto r = verify_identity(IdentityId::thm18, {1, 1, 0});
  CHECK(r.passed);
  CHECK(r.points == 1);
  CHECK_FALSE(r.counterexample.has_value());
  r = verify_identity(IdentityId::andrews_a, {1, 1, 0});
  CHECK(r.passed);
  CHECK(verify_identity(IdentityId::rs_even, {0, 40, 0}).passed);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(verify_identity(IdentityId::thm18, {0, 3, 0}), RangeError);
  CHECK_THROWS_AS(verify_identity(IdentityId::pos_cor112, {0, 3, 1}), RangeError);
  CHECK_THROWS_AS(check_positivity(IdentityId::thm18, 1, 3), RangeError);
}

TEST_CASE("every entry passes on a short range") {
  for (auto id : all_identities()) {
    auto rng = default_range(id);
    rng.n_max = std::min<std::int64_t>(rng.n_max, rng.n_min + 6);
    rng.t_max = std::min<std::int64_t>(rng.t_max, 1);
    const auto rep = run_identity(id, rng);
    INFO(identity_name(id));
    CHECK(rep.passed);
    CHECK(rep.points > 0);
  }
}

TEST_CASE("sum_of_ratios") {
  const std::vector<Ratio> whole{{P({1, 0, -1}), P({1, -1})}, {P({2}), P({1})}};
  CHECK(sum_of_ratios(whole) == P({3, 1}));
  // Neither 1/(1+q) nor q/(1+q) is a polynomial; their sum is.
  const std::vector<Ratio> split{{P({1}), P({1, 1})}, {P({0, 1}), P({1, 1})}};
  CHECK(sum_of_ratios(split) == P({1}));
  const std::vector<Ratio> bad{{P({1}), P({1, 1})}};
  CHECK_THROWS_AS(sum_of_ratios(bad), NotDivisible);
  CHECK(sum_of_ratios({}).is_zero());
}

TEST_CASE("positivity families") {
  CHECK(positivity_entry_count(IdentityId::pos_cor112) == 3);
  CHECK(positivity_entry_count(IdentityId::pos_cor113) == 2);
  for (std::int64_t n = 0; n <= 8; ++n) {
    const auto p = positivity_params(IdentityId::pos_cor112, 0, 0, n);
    CHECK(eval_G(p) == eval_G({n, n, R(4, 3), R(5, 3), 3}));
  }
  const auto p = positivity_params(IdentityId::pos_cor113, 0, 0, 1);
  CHECK(eval_G(p) == P({1, 1, 1}));
  // At n = 0 the unshifted family is 1 for every t; the shifted ones have
  // N or M negative once t >= 1 (or a != 0) and collapse to 0.
  for (std::int64_t t = 0; t <= 2; ++t) {
    CHECK(eval_G(positivity_params(IdentityId::pos_cor112, 0, t, 0)) == P({1}));
    CHECK(eval_G(positivity_params(IdentityId::pos_cor112, 1, t, 0)).is_zero());
    CHECK(eval_G(positivity_params(IdentityId::pos_cor113, 0, t, 0)) == P({t == 0 ? 1 : 0}));
  }
  const auto rep = check_positivity(IdentityId::pos_cor113, 2, 8);
  CHECK(rep.passed);
  CHECK(rep.points == 2 * 3 * 9);
}

TEST_CASE("conjecture scan edge cases") {
  auto s = scan_conjecture({Conjecture::bressoud_g, 3, 3, 3, 2});
  CHECK(s.candidates == 0);
  CHECK(s.tested == 0);
  CHECK(s.violations.empty());
  // K = 1 admits no 0 < i < K.
  s = scan_conjecture({Conjecture::generalized_d, 3, 3, 1, 1});
  CHECK(s.tested == 0);
  // K = 1 grid: alpha + beta <= 1 and N - M pinned near zero.
  s = scan_conjecture({Conjecture::bressoud_g, 2, 2, 1, 1});
  CHECK(s.candidates == 3 * 9);
  CHECK(s.tested > 0);
  CHECK(s.tested < s.candidates);
  CHECK(s.violations.empty());
}

TEST_CASE("scans and reports are deterministic across thread counts") {
  const ConjectureWindow w{Conjecture::generalized_d, 6, 6, 2, 4};
  const auto a = scan_conjecture(w, {1});
  const auto b = scan_conjecture(w, {4});
  CHECK(a.tested == b.tested);
  CHECK(scan_to_json(a, false) == scan_to_json(b, false));
  CHECK(scan_to_json(a, false).dump() == scan_to_json(scan_conjecture(w, {1}), false).dump());

  const VerifyRange r{1, 10, 0};
  const auto x = verify_identity(IdentityId::thm17, r, {1});
  const auto y = verify_identity(IdentityId::thm17, r, {3});
  CHECK(report_to_json(x, false).dump() == report_to_json(y, false).dump());
  CHECK_FALSE(report_to_json(x, false).contains("elapsed_ms"));
  CHECK(report_to_json(x, true).contains("elapsed_ms"));
}

TEST_CASE("right-side non-negativity is tracked apart from the verdict") {
  const auto a0 = verify_identity(IdentityId::thm16_a0, {1, 12, 0});
  REQUIRE(a0.rhs_nonneg.has_value());
  CHECK(a0.rhs_nonneg->holds);
  // Odd-length companion: the identity holds, but its binomial side is
  // 1 - q^3 already at n = 1.
  for (auto id : {IdentityId::thm16_a1, IdentityId::thm19_a1}) {
    const auto r = verify_identity(id, {1, 12, 0});
    CHECK(r.passed);
    REQUIRE(r.rhs_nonneg.has_value());
    CHECK_FALSE(r.rhs_nonneg->holds);
    CHECK(r.rhs_nonneg->failed_at == nlohmann::json{{"n", 1}});
    CHECK(r.rhs_nonneg->rhs == P({1, 0, 0, -1}));
    const auto j = report_to_json(r, false);
    CHECK(j["rhs_nonneg"]["holds"] == false);
  }
  CHECK_FALSE(verify_identity(IdentityId::rs_even, {0, 3, 0}).rhs_nonneg.has_value());
}
