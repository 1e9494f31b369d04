#include <doctest.h>

#include "poly_printer.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "qpos/cli.hpp"
#include "qpos/serialize.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qpos");
  std::ostringstream out, err;
  const int code = qpos::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval-g") {
  auto r = run({"eval-g", "--N", "1", "--M", "1", "--alpha", "4/3", "--beta", "5/3", "--K", "3"});
  CHECK(r.code == qpos::cli::kOk);
  CHECK(r.out == "1 + q\n");
  r = run({"eval-g", "--N", "0", "--M", "0", "--alpha", "1", "--beta", "1", "--K", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  r = run({"eval-g", "--N", "3", "--M", "3", "--alpha", "4/5", "--beta", "1", "--K", "3"});
  CHECK(r.code == qpos::cli::kUsage);
  CHECK(r.err.find("not an integer") != std::string::npos);
  CHECK(run({"eval-g", "--N", "1", "--M", "1", "--alpha", "x", "--beta", "1", "--K", "3"}).code == 2);
  CHECK(run({"eval-g", "--N", "1"}).code == 2);
}

TEST_CASE("eval-g --json parses back") {
  auto r = run({"eval-g", "--N", "7", "--M", "4", "--alpha", "4/3", "--beta", "5/3", "--K", "3",
                "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto p = qpos::poly_from_json(j.contains("poly") ? j["poly"] : j);
  CHECK(p.min_exp() == 0);
  CHECK(p.max_exp() == 32);
}

TEST_CASE("eval-d") {
  auto r = run({"eval-d", "--N", "2", "--M", "2", "--alpha", "1", "--beta", "1", "--K", "3", "--i",
                "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(run({"eval-d", "--N", "2", "--M", "2", "--alpha", "1", "--beta", "1", "--K", "3", "--i",
             "3"})
            .code == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "thm18", "--n-max", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS thm18 n=1..12", 0) == 0);
  CHECK(run({"verify", "no-such-id"}).code == 2);
  CHECK(run({"verify", "thm18", "--n-min", "0"}).code == 2);
  r = run({"verify", "all", "--n-max", "4", "--t-max", "1"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 20);
}

TEST_CASE("verify --json is byte-identical across runs and thread counts") {
  const auto a = run({"verify", "thm17", "--n-max", "8", "--json"});
  const auto b = run({"--threads", "3", "verify", "thm17", "--n-max", "8", "--json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK_FALSE(j.dump().find("elapsed_ms") != std::string::npos);
  const auto t = run({"verify", "thm17", "--n-max", "8", "--json", "--timing"});
  CHECK(t.out.find("elapsed_ms") != std::string::npos);
}

TEST_CASE("check-pos and scan") {
  CHECK(run({"check-pos", "pos-cor112", "--t-max", "1", "--n-max", "6"}).code == 0);
  CHECK(run({"check-pos", "thm18"}).code == 2);
  auto r = run({"scan", "--conj", "1.1", "--n-max", "4", "--k-max", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("violations=0") != std::string::npos);
  CHECK(run({"scan", "--conj", "2.0"}).code == 2);
  r = run({"scan", "--conj", "1.2", "--n-max", "4", "--k-max", "4", "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).is_object());
}

TEST_CASE("transform") {
  auto r = run({"transform", "--kind", "even", "--L", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "T[1,0] = 1 + q\n");
  r = run({"transform", "--kind", "odd", "--L", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "T~[2,0] = 1 + q + q^2 + q^3 + q^4\n");
  CHECK(run({"transform", "--kind", "even", "--L", "12", "--verify-base"}).code == 0);
  CHECK(run({"transform", "--kind", "odd", "--L", "0"}).code == 2);
  CHECK(run({"transform", "--kind", "sideways", "--L", "3"}).code == 2);
}
