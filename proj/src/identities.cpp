#include "qpos/identities.hpp"

#include <array>
#include <functional>
#include <string>

#include "qpos/detail/parallel.hpp"
#include "qpos/errors.hpp"
#include "qpos/qfun.hpp"
#include "qpos/serialize.hpp"
#include "qpos/transforms.hpp"

namespace qpos {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

struct Entry {
  IdentityId id;
  std::string_view name;
  VerifyRange defaults;
};

// n_min in `defaults` is also the lowest admissible n_min.
constexpr std::array<Entry, 20> kCatalog{{
    {IdentityId::andrews_a, "andrews-A", {1, 30, 0}},
    {IdentityId::andrews_b, "andrews-B", {1, 30, 0}},
    {IdentityId::andrews_c, "andrews-C", {1, 30, 0}},
    {IdentityId::thm16_a0, "thm16-a0", {1, 30, 0}},
    {IdentityId::thm16_a1, "thm16-a1", {1, 30, 0}},
    {IdentityId::thm17, "thm17", {1, 30, 0}},
    {IdentityId::thm18, "thm18", {1, 30, 0}},
    {IdentityId::thm19_a0, "thm19-a0", {1, 30, 0}},
    {IdentityId::thm19_a1, "thm19-a1", {1, 30, 0}},
    {IdentityId::rs_even, "rs-even", {0, 40, 0}},
    {IdentityId::rs_odd_q, "rs-odd-q", {0, 40, 0}},
    {IdentityId::rs_inverted, "rs-inverted", {0, 40, 0}},
    {IdentityId::berkovich_g1, "berkovich-g1", {0, 25, 0}},
    {IdentityId::berkovich_g2, "berkovich-g2", {0, 25, 0}},
    {IdentityId::base_even, "base-even", {1, 15, 0}},
    {IdentityId::base_odd, "base-odd", {1, 15, 0}},
    {IdentityId::iter_even, "iter-even", {0, 10, 2}},
    {IdentityId::iter_odd, "iter-odd", {0, 10, 2}},
    {IdentityId::pos_cor112, "pos-cor112", {0, 20, 2}},
    {IdentityId::pos_cor113, "pos-cor113", {0, 20, 2}},
}};

const Entry& entry(IdentityId id) {
  for (const auto& e : kCatalog) {
    if (e.id == id) return e;
  }
  throw RangeError("unknown identity");
}

std::int64_t min_n(IdentityId id) {
  switch (id) {
    case IdentityId::base_even:
    case IdentityId::base_odd:
      return 0;
    default:
      return entry(id).defaults.n_min;
  }
}

bool is_positivity(IdentityId id) {
  return id == IdentityId::pos_cor112 || id == IdentityId::pos_cor113;
}

int sign_of(std::int64_t j) { return j % 2 == 0 ? 1 : -1; }

ExactRational frac(std::int64_t p, std::int64_t r) { return {Integer(p), Integer(r)}; }

LaurentPoly mono(Exponent e) { return LaurentPoly::monomial(1, e); }
LaurentPoly one_minus(Exponent e) { return LaurentPoly(1) - mono(e); }

LaurentPoly poch1(std::int64_t len) { return q_pochhammer(1, 1, len); }
LaurentPoly poch3(std::int64_t len) { return q_pochhammer(3, 3, len); }
LaurentPoly poch6(std::int64_t len) { return q_pochhammer(6, 6, len); }
/// (q; q^2)_len
LaurentPoly poch_odd(std::int64_t len) { return q_pochhammer(1, 2, len); }
/// (-q; q)_len
LaurentPoly poch_neg(std::int64_t len) {
  return pochhammer({.sign = -1, .start = 1, .step = 1, .length = len});
}

LaurentPoly G(std::int64_t N, std::int64_t M, ExactRational alpha, ExactRational beta,
              std::int64_t K) {
  return eval_G({.N = N, .M = M, .alpha = std::move(alpha), .beta = std::move(beta), .K = K});
}

std::int64_t pow3(std::int64_t t) {
  std::int64_t p = 1;
  while (t-- > 0) p *= 3;
  return p;
}

/// One comparison within a point.
struct Outcome {
  bool ok = true;
  std::string note;
  LaurentPoly lhs;
  LaurentPoly rhs;
  std::optional<bool> rhs_nonneg;  // set only by entries that track it
};

Outcome compare(std::string note, LaurentPoly lhs, LaurentPoly rhs) {
  const bool ok = lhs == rhs;
  return {ok, std::move(note), std::move(lhs), std::move(rhs), std::nullopt};
}

struct Task {
  json params;
  std::function<Outcome()> run;
};

// ---------------------------------------------------------------------------
// Pochhammer-ratio sums for A_n, B_n, C_n

LaurentPoly andrews_a_sum(std::int64_t n) {
  std::vector<Ratio> terms;
  for (std::int64_t j = 0; 3 * j <= n; ++j) {
    terms.push_back({monomial_mul(poch3(n - j - 1) * one_minus(2 * n) * poch1(3 * j), 1, 3 * j * j),
                     poch1(n - 3 * j) * poch3(2 * j) * poch3(j)});
  }
  return sum_of_ratios(terms);
}

// B_n: c = 2, C_n: c = 1. The middle factor is
// 1 - q^{3j+c} - q^{n+3j+2} + q^{n+c-1}.
LaurentPoly andrews_bc_sum(std::int64_t n, std::int64_t c) {
  std::vector<Ratio> terms;
  for (std::int64_t j = 0; 3 * j <= n - 1; ++j) {
    const LaurentPoly middle = LaurentPoly(1) - mono(3 * j + c) - mono(n + 3 * j + 2) + mono(n + c - 1);
    terms.push_back(
        {monomial_mul(poch3(n - j - 1) * middle * poch1(3 * j), 1, 3 * j * j + 3 * j),
         poch1(n - 3 * j - 1) * poch3(2 * j + 1) * poch3(j)});
  }
  return sum_of_ratios(terms);
}

// ---------------------------------------------------------------------------
// The four "new identity" families share one shape:
//   sum_{0<=3j<=n-a} s^j (q^3;q^3)_{n-j-1} (1-q^{2n+a}) q^{e2 j^2 + e1 j}
//                     / ((q;q)_{n-3j-a} (q^6;q^6)_j)
//   = sum_j (-1)^j q^{c2 j^2 + c1 j} [2n+a, n-3j-a]_q

struct CubicShape {
  std::int64_t a;
  bool alternating;
  std::int64_t e2, e1;
  std::int64_t c2, c1;
};

LaurentPoly cubic_lhs(const CubicShape& s, std::int64_t n) {
  std::vector<Ratio> terms;
  for (std::int64_t j = 0; 3 * j <= n - s.a; ++j) {
    const int sign = s.alternating ? sign_of(j) : 1;
    terms.push_back(
        {monomial_mul(poch3(n - j - 1) * one_minus(2 * n + s.a), sign, s.e2 * j * j + s.e1 * j),
         poch1(n - 3 * j - s.a) * poch6(j)});
  }
  return sum_of_ratios(terms);
}

LaurentPoly cubic_rhs(const CubicShape& s, std::int64_t n) {
  LaurentPoly sum;
  for (std::int64_t j = -n - 1; j <= n + 1; ++j) {
    sum += monomial_mul(q_binomial(2 * n + s.a, n - 3 * j - s.a), sign_of(j), s.c2 * j * j + s.c1 * j);
  }
  return sum;
}

CubicShape cubic_shape(IdentityId id) {
  switch (id) {
    case IdentityId::thm16_a0: return {0, true, 3, 0, 3, 0};
    case IdentityId::thm16_a1: return {1, true, 3, 0, 3, 0};
    case IdentityId::thm17: return {0, true, 3, -3, 3, 3};
    case IdentityId::thm18: return {0, false, 3, 0, 6, 0};
    case IdentityId::thm19_a0: return {0, false, 3, 3, 6, 3};
    case IdentityId::thm19_a1: return {1, false, 3, 3, 6, 3};
    default: throw RangeError("not a cubic-shape identity");
  }
}

// ---------------------------------------------------------------------------
// Rogers-Szego forms

/// sum_{j=lo}^{hi} (-1)^j q^{w2 j^2 + w1 j} [top, n - j]
LaurentPoly signed_binomial_sum(std::int64_t top, std::int64_t n, std::int64_t lo, std::int64_t hi,
                                std::int64_t w2, std::int64_t w1) {
  LaurentPoly sum;
  for (std::int64_t j = lo; j <= hi; ++j) {
    sum += monomial_mul(q_binomial(top, n - j), sign_of(j), w2 * j * j + w1 * j);
  }
  return sum;
}

Outcome first_failure(std::vector<Outcome> checks) {
  for (auto& c : checks) {
    if (!c.ok) return std::move(c);
  }
  return {};
}

Outcome rs_even_point(std::int64_t n) {
  return first_failure({
      compare("H_2n(-1) = (q;q^2)_n", rogers_szego(2 * n, -1, 0), poch_odd(n)),
      compare("alternating [2n, n-j] sum", signed_binomial_sum(2 * n, n, -n, n, 0, 0),
              monomial_mul(poch_odd(n), sign_of(n), 0)),
  });
}

Outcome rs_odd_point(std::int64_t n) {
  return first_failure({
      compare("H_n(-q) = (q;q^2)_floor((n+1)/2)", rogers_szego(n, -1, 1), poch_odd((n + 1) / 2)),
      compare("q^j-weighted [2n+1, n-j] sum", signed_binomial_sum(2 * n + 1, n, -n - 1, n, 0, 1),
              monomial_mul(poch_odd(n + 1), sign_of(n + 1), -n - 1)),
      compare("q^j-weighted [2n, n-j] sum", signed_binomial_sum(2 * n, n, -n, n, 0, 1),
              monomial_mul(poch_odd(n), sign_of(n), -n)),
  });
}

Outcome rs_inverted_point(std::int64_t n) {
  const LaurentPoly l24 = signed_binomial_sum(2 * n, n, -n, n, 0, 0);
  const LaurentPoly r24 = monomial_mul(poch_odd(n), sign_of(n), 0);
  const LaurentPoly l25 = signed_binomial_sum(2 * n + 1, n, -n - 1, n, 0, 1);
  const LaurentPoly r25 = monomial_mul(poch_odd(n + 1), sign_of(n + 1), -n - 1);
  const LaurentPoly l26 = signed_binomial_sum(2 * n, n, -n, n, 0, 1);
  const LaurentPoly r26 = monomial_mul(poch_odd(n), sign_of(n), -n);

  const LaurentPoly l27 = signed_binomial_sum(2 * n, n, -n, n, 1, 0);
  const LaurentPoly l28 = signed_binomial_sum(2 * n + 1, n, -n - 1, n, 1, 0);
  const LaurentPoly l29 = signed_binomial_sum(2 * n, n, -n, n, 1, 1);
  const LaurentPoly r27 = poch_odd(n);
  const LaurentPoly r28 = poch_odd(n + 1);
  const LaurentPoly r29 = monomial_mul(poch_odd(n), 1, n);

  // [m+k, k]_{1/q} = q^{-mk} [m+k, k]_q, so inverting each alternating sum
  // lands on the q^{j^2}-weighted form up to a fixed power of q.
  const Exponent s_even = n * n;
  const Exponent s_odd = n * n + n;
  return first_failure({
      compare("q^{j^2} [2n, n-j] sum", l27, r27),
      compare("q^{j^2} [2n+1, n-j] sum", l28, r28),
      compare("q^{j^2+j} [2n, n-j] sum", l29, r29),
      compare("inverted alternating sum (lhs)", monomial_mul(invert_variable(l24), 1, s_even), l27),
      compare("inverted alternating sum (rhs)", monomial_mul(invert_variable(r24), 1, s_even), r27),
      compare("inverted odd q^j sum (lhs)", monomial_mul(invert_variable(l25), 1, s_odd), l28),
      compare("inverted odd q^j sum (rhs)", monomial_mul(invert_variable(r25), 1, s_odd), r28),
      compare("inverted even q^j sum (lhs)", monomial_mul(invert_variable(l26), 1, s_even), l29),
      compare("inverted even q^j sum (rhs)", monomial_mul(invert_variable(r26), 1, s_even), r29),
  });
}

// ---------------------------------------------------------------------------
// Transform chains

constexpr std::array<ChainSeed, 9> kEvenSeeds{{
    {-1, 4, 5}, {-1, 2, 7}, {-1, 1, 8},
    {0, 4, 5}, {0, 2, 7}, {0, 1, 8},
    {1, 4, 5}, {1, 2, 7}, {1, 1, 8},
}};
constexpr std::array<ChainSeed, 4> kOddSeeds{{{0, 8, 4}, {0, 4, 2}, {1, 8, 4}, {1, 4, 2}}};

// Seeds whose base G is known non-negative; these drive the t-fold checks.
constexpr std::array<ChainSeed, 3> kEvenChainSeeds{{{0, 4, 5}, {1, 2, 7}, {1, 1, 8}}};
constexpr std::array<ChainSeed, 2> kOddChainSeeds{{{0, 8, 4}, {0, 4, 2}}};

json seed_json(const ChainSeed& s, std::int64_t n) {
  return {{"a", s.a}, {"x", s.x}, {"y", s.y}, {"n", n}};
}

Outcome iter_even_point(const ChainSeed& s, std::int64_t n) {
  const auto x3 = frac(s.x, 3), y3 = frac(s.y, 3);
  LaurentPoly lhs = apply_transform(TransformKind::even, n, [&](std::int64_t r) {
    return dilate(G(r + s.a, r - s.a, x3, y3, 3), 3);
  });
  LaurentPoly rhs = monomial_mul(
      G(n + 3 * s.a, n - 3 * s.a, x3 + ExactRational(3 - 2 * s.a), y3 + ExactRational(3 + 2 * s.a), 9),
      1, 3 * s.a * s.a);
  return compare("single even step", std::move(lhs), std::move(rhs));
}

Outcome iter_odd_point(const ChainSeed& s, std::int64_t n) {
  const auto x3 = frac(s.x, 3), y3 = frac(s.y, 3);
  LaurentPoly lhs = apply_transform(TransformKind::odd, n, [&](std::int64_t r) {
    return dilate(G(r - s.a, r + s.a + 1, x3, y3, 3), 3);
  });
  LaurentPoly rhs = monomial_mul(G(n - 3 * s.a - 1, n + 3 * s.a + 2, x3 + ExactRational(2 * (s.a + 2)),
                                   y3 + ExactRational(2 * (1 - s.a)), 9),
                                 1, 3 * s.a * s.a + 3 * s.a);
  return compare("single odd step", std::move(lhs), std::move(rhs));
}

Outcome chain_point(TransformKind kind, const ChainSeed& s, std::int64_t t, std::int64_t n) {
  IterateResult it = iterate_transform(kind, t, n, s);
  return compare("t-fold chain", std::move(it.value),
                 monomial_mul(eval_G(it.target), 1, it.prefactor));
}

// ---------------------------------------------------------------------------

std::vector<Task> build_tasks(IdentityId id, const VerifyRange& range) {
  std::vector<Task> tasks;
  auto per_n = [&](auto fn) {
    for (std::int64_t n = range.n_min; n <= range.n_max; ++n) {
      tasks.push_back({json{{"n", n}}, [fn, n] { return fn(n); }});
    }
  };

  switch (id) {
    case IdentityId::andrews_a:
      per_n([](std::int64_t n) {
        return compare("A_n", andrews_a_sum(n), G(n, n, frac(4, 3), frac(5, 3), 3));
      });
      break;
    case IdentityId::andrews_b:
      per_n([](std::int64_t n) {
        return compare("B_n", andrews_bc_sum(n, 2), G(n + 1, n - 1, frac(2, 3), frac(7, 3), 3));
      });
      break;
    case IdentityId::andrews_c:
      per_n([](std::int64_t n) {
        return compare("C_n", andrews_bc_sum(n, 1), G(n + 1, n - 1, frac(1, 3), frac(8, 3), 3));
      });
      break;
    case IdentityId::thm16_a0:
    case IdentityId::thm16_a1:
    case IdentityId::thm17:
    case IdentityId::thm18:
    case IdentityId::thm19_a0:
    case IdentityId::thm19_a1: {
      const CubicShape shape = cubic_shape(id);
      per_n([shape](std::int64_t n) {
        LaurentPoly rhs = cubic_rhs(shape, n);
        const bool nonneg = is_nonneg(rhs);
        Outcome o = compare("ratio sum vs binomial sum", cubic_lhs(shape, n), std::move(rhs));
        o.rhs_nonneg = nonneg;
        return o;
      });
      break;
    }
    case IdentityId::rs_even:
      per_n(rs_even_point);
      break;
    case IdentityId::rs_odd_q:
      per_n(rs_odd_point);
      break;
    case IdentityId::rs_inverted:
      per_n(rs_inverted_point);
      break;
    case IdentityId::berkovich_g1:
      per_n([](std::int64_t n) {
        LaurentPoly sum;
        for (std::int64_t k = 0; k <= n; ++k) {
          sum += monomial_mul(q_binomial(n, k) * poch_neg(k), 1, k * (k + 1) / 2);
        }
        return compare("G(n, n+1; 8/3, 4/3, 3)", G(n, n + 1, frac(8, 3), frac(4, 3), 3), sum);
      });
      break;
    case IdentityId::berkovich_g2:
      per_n([](std::int64_t n) {
        LaurentPoly sum;
        for (std::int64_t k = 0; k <= n; ++k) {
          sum += monomial_mul(q_binomial(n, k) * poch_neg(n - k), 1, (n + 1) * k);
        }
        return compare("G(n, n+1; 4/3, 2/3, 3)", G(n, n + 1, frac(4, 3), frac(2, 3), 3), sum);
      });
      break;
    case IdentityId::base_even:
    case IdentityId::base_odd: {
      const auto kind = id == IdentityId::base_even ? TransformKind::even : TransformKind::odd;
      for (std::int64_t L = range.n_min; L <= range.n_max; ++L) {
        const std::int64_t j_lo = kind == TransformKind::even ? -L : -L - 1;
        for (std::int64_t j = j_lo; j <= L; ++j) {
          tasks.push_back({json{{"L", L}, {"j", j}}, [kind, L, j] {
                             BaseCheck b = verify_base(kind, L, j);
                             return Outcome{b.holds, "base identity", std::move(b.lhs), std::move(b.rhs), std::nullopt};
                           }});
        }
      }
      break;
    }
    case IdentityId::iter_even:
    case IdentityId::iter_odd: {
      const bool even = id == IdentityId::iter_even;
      const auto kind = even ? TransformKind::even : TransformKind::odd;
      auto add_single = [&](const ChainSeed& s) {
        for (std::int64_t n = range.n_min; n <= range.n_max; ++n) {
          tasks.push_back({seed_json(s, n), [s, n, even] {
                             return even ? iter_even_point(s, n) : iter_odd_point(s, n);
                           }});
        }
      };
      auto add_chain = [&](const ChainSeed& s) {
        for (std::int64_t t = 0; t <= range.t_max; ++t) {
          for (std::int64_t n = range.n_min; n <= range.n_max; ++n) {
            json p = seed_json(s, n);
            p["t"] = t;
            tasks.push_back({std::move(p), [kind, s, t, n] { return chain_point(kind, s, t, n); }});
          }
        }
      };
      if (even) {
        for (const auto& s : kEvenSeeds) add_single(s);
        for (const auto& s : kEvenChainSeeds) add_chain(s);
      } else {
        for (const auto& s : kOddSeeds) add_single(s);
        for (const auto& s : kOddChainSeeds) add_chain(s);
      }
      break;
    }
    case IdentityId::pos_cor112:
    case IdentityId::pos_cor113:
      for (int e = 0; e < positivity_entry_count(id); ++e) {
        for (std::int64_t t = 0; t <= range.t_max; ++t) {
          for (std::int64_t n = range.n_min; n <= range.n_max; ++n) {
            const GParams gp = positivity_params(id, e, t, n);
            json p{{"entry", e}, {"t", t}, {"n", n}, {"N", gp.N}, {"M", gp.M},
                   {"alpha", gp.alpha.to_string()}, {"beta", gp.beta.to_string()}, {"K", gp.K}};
            tasks.push_back({std::move(p), [gp] {
                               LaurentPoly g = eval_G(gp);
                               const bool ok = is_nonneg(g);
                               return Outcome{ok, "negative coefficient", std::move(g), {}, std::nullopt};
                             }});
          }
        }
      }
      break;
  }
  return tasks;
}

IdentityReport run_tasks(IdentityId id, const VerifyRange& range, const RunOptions& opts) {
  const auto start = Clock::now();
  IdentityReport report;
  report.id = id;
  report.range = range;
  std::vector<Task> tasks = build_tasks(id, range);
  report.points = tasks.size();

  auto run_one = [&](std::size_t i) -> Outcome {
    try {
      return tasks[i].run();
    } catch (const Error& e) {
      return {false, std::string("error: ") + e.what(), {}, {}, std::nullopt};
    }
  };

  std::vector<Outcome> outcomes;
  if (opts.threads <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      outcomes.push_back(run_one(i));
      if (!outcomes.back().ok) break;
    }
  } else {
    outcomes = detail::parallel_map(tasks.size(), opts.threads, run_one);
  }

  // Outcomes are in task order, so the first failure and the first
  // negative right side do not depend on the thread count.
  std::optional<std::size_t> bad;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].rhs_nonneg.has_value()) {
      if (!report.rhs_nonneg) report.rhs_nonneg = RhsNonneg{};
      if (!*outcomes[i].rhs_nonneg && report.rhs_nonneg->holds) {
        report.rhs_nonneg = RhsNonneg{false, tasks[i].params, outcomes[i].rhs};
      }
    }
    if (!outcomes[i].ok) {
      bad = i;
      break;
    }
  }

  report.passed = !bad.has_value();
  if (bad) {
    Outcome& o = outcomes[*bad];
    report.counterexample =
        Counterexample{tasks[*bad].params, o.note, std::move(o.lhs), std::move(o.rhs)};
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return report;
}

std::string_view conjecture_name(Conjecture c) {
  return c == Conjecture::bressoud_g ? "bressoud-g" : "generalized-d";
}

}  // namespace

std::span<const IdentityId> all_identities() {
  static const auto ids = [] {
    std::array<IdentityId, kCatalog.size()> out{};
    for (std::size_t i = 0; i < kCatalog.size(); ++i) out[i] = kCatalog[i].id;
    return out;
  }();
  return ids;
}

std::string_view identity_name(IdentityId id) { return entry(id).name; }

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto& e : kCatalog) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

VerifyRange default_range(IdentityId id) { return entry(id).defaults; }

int positivity_entry_count(IdentityId id) {
  if (id == IdentityId::pos_cor112) return 3;
  if (id == IdentityId::pos_cor113) return 2;
  throw RangeError("not a positivity entry");
}

GParams positivity_params(IdentityId id, int e, std::int64_t t, std::int64_t n) {
  if (t < 0) throw RangeError("t must be non-negative");
  const std::int64_t p = pow3(t);
  const std::int64_t K = 3 * p;
  if (id == IdentityId::pos_cor112) {
    switch (e) {
      case 0:
        return {n, n, frac(4, 3) + frac(3 * (p - 1), 2), frac(5, 3) + frac(3 * (p - 1), 2), K};
      case 1:
        return {n + p, n - p, frac(2, 3) + frac(p - 1, 2), frac(7, 3) + frac(5 * (p - 1), 2), K};
      case 2:
        return {n + p, n - p, frac(1, 3) + frac(p - 1, 2), frac(8, 3) + frac(5 * (p - 1), 2), K};
      default:
        break;
    }
  } else if (id == IdentityId::pos_cor113) {
    const std::int64_t N = n - (p - 1) / 2;
    const std::int64_t M = n + (p + 1) / 2;
    switch (e) {
      case 0:
        return {N, M, frac(8, 3) + ExactRational(2 * (p - 1)), frac(4, 3) + ExactRational(p - 1), K};
      case 1:
        return {N, M, frac(4, 3) + ExactRational(2 * (p - 1)), frac(2, 3) + ExactRational(p - 1), K};
      default:
        break;
    }
  }
  throw RangeError("no such positivity entry");
}

LaurentPoly sum_of_ratios(std::span<const Ratio> terms) {
  LaurentPoly sum;
  std::vector<const Ratio*> leftovers;
  for (const auto& t : terms) {
    try {
      sum += exact_div(t.num, t.den);
    } catch (const NotDivisible&) {
      leftovers.push_back(&t);
    }
  }
  if (leftovers.empty()) return sum;

  LaurentPoly common = 1;
  for (const Ratio* t : leftovers) common *= t->den;
  LaurentPoly numerator;
  for (std::size_t i = 0; i < leftovers.size(); ++i) {
    LaurentPoly term = leftovers[i]->num;
    for (std::size_t k = 0; k < leftovers.size(); ++k) {
      if (k != i) term *= leftovers[k]->den;
    }
    numerator += term;
  }
  return sum + exact_div(numerator, common);
}

IdentityReport verify_identity(IdentityId id, const VerifyRange& range, const RunOptions& opts) {
  if (is_positivity(id)) {
    throw RangeError(std::string(identity_name(id)) + " is a positivity claim; use check_positivity");
  }
  if (range.n_min < min_n(id)) {
    throw RangeError(std::string(identity_name(id)) + " needs n >= " + std::to_string(min_n(id)));
  }
  if (range.t_max < 0) throw RangeError("t_max must be non-negative");
  return run_tasks(id, range, opts);
}

IdentityReport check_positivity(IdentityId id, std::int64_t t_max, std::int64_t n_max,
                                const RunOptions& opts) {
  if (!is_positivity(id)) {
    throw RangeError(std::string(identity_name(id)) + " is not a positivity claim");
  }
  if (t_max < 0 || n_max < 0) throw RangeError("t_max and n_max must be non-negative");
  return run_tasks(id, {0, n_max, t_max}, opts);
}

IdentityReport run_identity(IdentityId id, const VerifyRange& range, const RunOptions& opts) {
  if (is_positivity(id)) {
    if (range.n_min != 0) throw RangeError("positivity checks always start at n = 0");
    return check_positivity(id, range.t_max, range.n_max, opts);
  }
  return verify_identity(id, range, opts);
}

ScanResult scan_conjecture(const ConjectureWindow& window, const RunOptions& opts) {
  const auto start = Clock::now();
  ScanResult out;
  out.window = window;
  const auto candidates = window_candidates(window);
  out.candidates = candidates.size();
  std::vector<const ConjecturePoint*> admissible;
  for (const auto& c : candidates) {
    if (check_admissible(window.which, c)) admissible.push_back(&c);
  }
  out.tested = admissible.size();

  auto eval = [&](std::size_t k) -> std::optional<LaurentPoly> {
    const ConjecturePoint& p = *admissible[k];
    LaurentPoly v = window.which == Conjecture::bressoud_g
                        ? eval_G({p.N, p.M, p.alpha, p.beta, p.K})
                        : eval_D({p.N, p.M, p.K, p.i, p.alpha, p.beta});
    if (is_nonneg(v)) return std::nullopt;
    return v;
  };
  auto results = detail::parallel_map(admissible.size(), opts.threads, eval);
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (results[k]) out.violations.push_back({*admissible[k], std::move(*results[k])});
  }
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return out;
}

json range_to_json(IdentityId id, const VerifyRange& range) {
  json j{{"n_min", range.n_min}, {"n_max", range.n_max}};
  if (id == IdentityId::iter_even || id == IdentityId::iter_odd || is_positivity(id)) {
    j["t_max"] = range.t_max;
  }
  return j;
}

json report_to_json(const IdentityReport& r, bool include_timing) {
  json j{{"id", identity_name(r.id)},
         {"params", range_to_json(r.id, r.range)},
         {"points", r.points},
         {"verdict", r.passed ? "pass" : "fail"}};
  if (r.counterexample) {
    j["failed_at"] = r.counterexample->params;
    j["note"] = r.counterexample->note;
    j["lhs"] = poly_to_json(r.counterexample->lhs);
    j["rhs"] = poly_to_json(r.counterexample->rhs);
  }
  if (r.rhs_nonneg) {
    json s{{"holds", r.rhs_nonneg->holds}};
    if (!r.rhs_nonneg->holds) {
      s["failed_at"] = r.rhs_nonneg->failed_at;
      s["rhs"] = poly_to_json(r.rhs_nonneg->rhs);
    }
    j["rhs_nonneg"] = std::move(s);
  }
  if (include_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

json point_to_json(const ConjecturePoint& p, Conjecture which) {
  json j{{"N", p.N}, {"M", p.M}, {"alpha", p.alpha.to_string()}, {"beta", p.beta.to_string()},
         {"K", p.K}};
  if (which == Conjecture::generalized_d) j["i"] = p.i;
  return j;
}

json scan_to_json(const ScanResult& s, bool include_timing) {
  json violations = json::array();
  for (const auto& v : s.violations) {
    violations.push_back({{"params", point_to_json(v.point, s.window.which)},
                          {"verdict", "fail"},
                          {"value", poly_to_json(v.value)}});
  }
  json j{{"conjecture", conjecture_name(s.window.which)},
         {"window",
          {{"n_max", s.window.n_max}, {"m_max", s.window.m_max}, {"k_min", s.window.k_min},
           {"k_max", s.window.k_max}}},
         {"candidates", s.candidates},
         {"tested", s.tested},
         {"violations", std::move(violations)}};
  if (include_timing) j["elapsed_ms"] = s.elapsed.count();
  return j;
}

}  // namespace qpos
