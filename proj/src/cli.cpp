#include "qpos/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <optional>
#include <ostream>

#include "qpos/bressoud.hpp"
#include "qpos/errors.hpp"
#include "qpos/identities.hpp"
#include "qpos/serialize.hpp"
#include "qpos/transforms.hpp"

namespace qpos::cli {

namespace {

using nlohmann::json;

struct Options {
  unsigned threads = 1;
  bool json = false;
  bool timing = false;

  // eval-g / eval-d
  std::int64_t N = 0, M = 0, K = 0, i = 0;
  std::string alpha, beta;

  // verify / check-pos
  std::string id;
  std::optional<std::int64_t> n_min, n_max, t_max;

  // scan
  std::string conj = "1.1";
  std::optional<std::int64_t> m_max, k_max;
  std::int64_t k_min = 1;

  // transform
  std::string kind = "even";
  std::int64_t L = 0;
  bool verify_base = false;
};

void print_poly(std::ostream& out, const LaurentPoly& p, bool as_json) {
  if (as_json) {
    out << poly_to_json(p).dump() << '\n';
  } else {
    out << to_string(p) << '\n';
  }
}

int cmd_eval_g(const Options& o, std::ostream& out) {
  const GParams p{o.N, o.M, ExactRational::parse(o.alpha), ExactRational::parse(o.beta), o.K};
  print_poly(out, eval_G(p), o.json);
  return kOk;
}

int cmd_eval_d(const Options& o, std::ostream& out) {
  const DParams p{o.N, o.M, o.K, o.i, ExactRational::parse(o.alpha), ExactRational::parse(o.beta)};
  print_poly(out, eval_D(p), o.json);
  return kOk;
}

void print_report_text(std::ostream& out, const IdentityReport& r) {
  out << (r.passed ? "PASS " : "FAIL ") << identity_name(r.id) << " n=" << r.range.n_min << ".."
      << r.range.n_max;
  if (range_to_json(r.id, r.range).contains("t_max")) out << " t<=" << r.range.t_max;
  out << " points=" << r.points;
  if (r.rhs_nonneg && !r.rhs_nonneg->holds) {
    out << " (right side negative at " << r.rhs_nonneg->failed_at.dump() << ": "
        << to_string(r.rhs_nonneg->rhs) << ')';
  }
  if (r.counterexample) {
    out << " at " << r.counterexample->params.dump() << ": " << r.counterexample->note << '\n'
        << "  lhs: " << to_string(r.counterexample->lhs) << '\n'
        << "  rhs: " << to_string(r.counterexample->rhs);
  }
  out << '\n';
}

int emit_reports(const Options& o, const std::vector<IdentityReport>& reports, std::ostream& out) {
  bool all_pass = true;
  json arr = json::array();
  for (const auto& r : reports) {
    all_pass = all_pass && r.passed;
    if (o.json) {
      arr.push_back(report_to_json(r, o.timing));
    } else {
      print_report_text(out, r);
    }
  }
  if (o.json) out << arr.dump(2) << '\n';
  return all_pass ? kOk : kCounterexample;
}

VerifyRange range_for(IdentityId id, const Options& o, bool single) {
  VerifyRange r = default_range(id);
  if (single && o.n_min) r.n_min = *o.n_min;
  if (o.n_max) r.n_max = *o.n_max;
  if (o.t_max) r.t_max = *o.t_max;
  return r;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err, bool force_all) {
  std::vector<IdentityId> ids;
  const bool all = force_all || o.id == "all";
  if (all) {
    if (o.n_min) {
      err << "error: --n-min needs a single identity id\n";
      return kUsage;
    }
    ids.assign(all_identities().begin(), all_identities().end());
  } else {
    const auto id = parse_identity(o.id);
    if (!id) {
      err << "error: unknown identity '" << o.id << "'; known ids:";
      for (auto k : all_identities()) err << ' ' << identity_name(k);
      err << '\n';
      return kUsage;
    }
    ids.push_back(*id);
  }
  std::vector<IdentityReport> reports;
  for (const auto id : ids) {
    reports.push_back(run_identity(id, range_for(id, o, !all), {o.threads}));
  }
  return emit_reports(o, reports, out);
}

int cmd_check_pos(const Options& o, std::ostream& out, std::ostream& err) {
  const auto id = parse_identity(o.id);
  if (!id || (*id != IdentityId::pos_cor112 && *id != IdentityId::pos_cor113)) {
    err << "error: check-pos takes pos-cor112 or pos-cor113, got '" << o.id << "'\n";
    return kUsage;
  }
  const VerifyRange def = default_range(*id);
  const IdentityReport r =
      check_positivity(*id, o.t_max.value_or(def.t_max), o.n_max.value_or(def.n_max), {o.threads});
  return emit_reports(o, {r}, out);
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  ConjectureWindow w;
  if (o.conj == "1.1") {
    w.which = Conjecture::bressoud_g;
  } else if (o.conj == "1.2") {
    w.which = Conjecture::generalized_d;
  } else {
    err << "error: --conj must be 1.1 or 1.2\n";
    return kUsage;
  }
  w.n_max = o.n_max.value_or(12);
  w.m_max = o.m_max.value_or(w.n_max);
  w.k_min = o.k_min;
  w.k_max = o.k_max.value_or(w.which == Conjecture::bressoud_g ? 4 : 5);
  const ScanResult s = scan_conjecture(w, {o.threads});
  if (o.json) {
    out << scan_to_json(s, o.timing).dump(2) << '\n';
  } else {
    out << "conjecture " << o.conj << " window N<=" << w.n_max << " M<=" << w.m_max
        << " K=" << w.k_min << ".." << w.k_max << ": candidates=" << s.candidates
        << " tested=" << s.tested << " violations=" << s.violations.size() << '\n';
    for (const auto& v : s.violations) {
      out << "VIOLATION " << point_to_json(v.point, w.which).dump() << ": " << to_string(v.value)
          << '\n';
    }
  }
  return s.violations.empty() ? kOk : kCounterexample;
}

int cmd_transform(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.kind != "even" && o.kind != "odd") {
    err << "error: --kind must be even or odd\n";
    return kUsage;
  }
  if (o.L < 1) {
    err << "error: --L must be at least 1\n";
    return kUsage;
  }
  const auto kind = o.kind == "even" ? TransformKind::even : TransformKind::odd;
  const char* label = kind == TransformKind::even ? "T" : "T~";
  json coeffs = json::array();
  for (std::int64_t r = 0; r <= max_r(kind, o.L); ++r) {
    const LaurentPoly c = transform_coeff(kind, o.L, r);
    if (o.json) {
      coeffs.push_back({{"r", r}, {"value", poly_to_json(c)}});
    } else {
      out << label << '[' << o.L << ',' << r << "] = " << to_string(c) << '\n';
    }
  }

  int status = kOk;
  json base = json::array();
  if (o.verify_base) {
    const std::int64_t lo = kind == TransformKind::even ? -o.L : -o.L - 1;
    std::size_t held = 0, total = 0;
    for (std::int64_t j = lo; j <= o.L; ++j) {
      const BaseCheck b = verify_base(kind, o.L, j);
      ++total;
      if (b.holds) ++held;
      if (o.json) {
        json e{{"j", j}, {"verdict", b.holds ? "pass" : "fail"}};
        if (!b.holds) {
          e["lhs"] = poly_to_json(b.lhs);
          e["rhs"] = poly_to_json(b.rhs);
        }
        base.push_back(std::move(e));
      } else if (!b.holds) {
        out << "FAIL base " << o.kind << " L=" << o.L << " j=" << j << "\n  lhs: " << to_string(b.lhs)
            << "\n  rhs: " << to_string(b.rhs) << '\n';
      }
    }
    if (held != total) status = kCounterexample;
    if (!o.json) {
      out << (held == total ? "PASS" : "FAIL") << " base " << o.kind << " L=" << o.L << " j=" << lo
          << ".." << o.L << " held=" << held << '/' << total << '\n';
    }
  }
  if (o.json) {
    json doc{{"kind", o.kind}, {"L", o.L}, {"coeffs", std::move(coeffs)}};
    if (o.verify_base) doc["base"] = std::move(base);
    out << doc.dump(2) << '\n';
  }
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact q-series evaluation and identity verification"};
  app.name(args.empty() ? "qpos" : args.front());
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "Worker threads for verify/scan")
      ->envname("QPOS_THREADS")
      ->check(CLI::Range(1u, 1024u));

  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Machine-readable output");
  };

  auto* eval_g = app.add_subcommand("eval-g", "Evaluate G(N,M;alpha,beta,K)");
  eval_g->add_option("--N", o.N)->required();
  eval_g->add_option("--M", o.M)->required();
  eval_g->add_option("--alpha", o.alpha, "Rational p/r")->required();
  eval_g->add_option("--beta", o.beta, "Rational p/r")->required();
  eval_g->add_option("--K", o.K)->required();
  add_json(eval_g);

  auto* eval_d = app.add_subcommand("eval-d", "Evaluate D_{K,i}(N,M;alpha,beta)");
  eval_d->add_option("--N", o.N)->required();
  eval_d->add_option("--M", o.M)->required();
  eval_d->add_option("--alpha", o.alpha)->required();
  eval_d->add_option("--beta", o.beta)->required();
  eval_d->add_option("--K", o.K)->required();
  eval_d->add_option("--i", o.i)->required();
  add_json(eval_d);

  auto add_range = [&](CLI::App* sub) {
    sub->add_option("--n-max", o.n_max, "Upper end of the n (or L) range");
    sub->add_option("--t-max", o.t_max, "Iteration depth for chain/positivity entries");
    sub->add_flag("--timing", o.timing, "Include elapsed_ms in JSON reports");
    add_json(sub);
  };

  auto* verify = app.add_subcommand("verify", "Verify one catalog identity, or 'all'");
  verify->add_option("id", o.id, "Identity id or 'all'")->required();
  verify->add_option("--n-min", o.n_min, "Lower end of the n range");
  add_range(verify);

  auto* verify_all = app.add_subcommand("verify-all", "Verify every catalog entry");
  add_range(verify_all);

  auto* check_pos = app.add_subcommand("check-pos", "Check non-negativity of a transform-chain G family");
  check_pos->add_option("id", o.id, "pos-cor112 or pos-cor113")->required();
  add_range(check_pos);

  auto* scan = app.add_subcommand("scan", "Scan a conjecture window for negative coefficients");
  scan->add_option("--conj", o.conj, "1.1 (G) or 1.2 (D_{K,i})");
  scan->add_option("--n-max", o.n_max, "N bound (default 12)");
  scan->add_option("--m-max", o.m_max, "M bound (default n-max)");
  scan->add_option("--k-min", o.k_min, "Smallest K");
  scan->add_option("--k-max", o.k_max, "Largest K (default 4 for 1.1, 5 for 1.2)");
  scan->add_flag("--timing", o.timing, "Include elapsed_ms in JSON output");
  add_json(scan);

  auto* transform = app.add_subcommand("transform", "Print cubic transformation coefficients");
  transform->add_option("--kind", o.kind, "even or odd");
  transform->add_option("--L", o.L)->required();
  transform->add_flag("--verify-base", o.verify_base, "Also check the base identity for all j");
  add_json(transform);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (eval_g->parsed()) return cmd_eval_g(o, out);
    if (eval_d->parsed()) return cmd_eval_d(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err, false);
    if (verify_all->parsed()) return cmd_verify(o, out, err, true);
    if (check_pos->parsed()) return cmd_check_pos(o, out, err);
    if (scan->parsed()) return cmd_scan(o, out, err);
    if (transform->parsed()) return cmd_transform(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qpos::cli
