#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "zetaq/cli.hpp"
#include "zetaq/rat.hpp"
#include "zetaq/zeta_reference.hpp"

using namespace zetaq;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

Rat parse_decimal(const std::string& d) {
  const auto dot = d.find('.');
  const std::string digits = d.substr(0, dot) + d.substr(dot + 1);
  return Rat(BigInt(digits), pow_int(10, d.size() - dot - 1));
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("approx emits exact json") {
    const Run r = run({"approx", "--s", "3", "--n", "10", "--t", "1", "--digits", "8", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const json j = json::parse(r.out);
    for (const char* key : {"s", "n", "alpha", "beta", "theta_bound", "decimal"}) {
      CHECK(j.contains(key));
    }
    const Rat tb = Rat::parse(j["theta_bound"].get<std::string>());
    const Rat dec = parse_decimal(j["decimal"].get<std::string>());
    const Interval z3 = zeta_reference(3, 20);
    CHECK((dec - z3.lo()).abs() <= tb + Rat(1, 100000000));
    CHECK((dec - z3.hi()).abs() <= tb + Rat(1, 100000000));
  }

  TEST_CASE("approx at n = 1") {
    const Run r = run({"approx", "--s", "3", "--n", "1", "--t", "1"});
    REQUIRE(r.code == kExitOk);
    const json j = json::parse(r.out);
    CHECK(j["alpha"] == "5");
    CHECK(j["beta"] == "-7");
    CHECK(Rat::parse(j["theta_bound"].get<std::string>()) <= Rat(1, 4));
  }

  TEST_CASE("usage errors") {
    CHECK(run({"approx", "--s", "4", "--n", "0", "--t", "1"}).code == kExitUsage);
    CHECK(run({"approx", "--s", "2", "--n", "3"}).code == kExitUsage);
    CHECK(run({"approx", "--s", "3", "--n", "3", "--t", "1,x"}).code == kExitUsage);
    CHECK(run({"approx", "--s", "4", "--n", "1", "--t", "0,1"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"table", "--s", "3", "--n-from", "5", "--n-to", "4"}).code == kExitUsage);
  }

  TEST_CASE("precision budget exit code") {
    CHECK(run({"approx", "--s", "3", "--n", "2", "--digits", "50", "--budget", "20"}).code == kExitBudget);
  }

  TEST_CASE("verify") {
    const Run all = run({"verify", "--s", "7", "--trials", "100", "--seed", "42"});
    CHECK(all.code == kExitOk);
    CHECK(json::parse(all.out)["all_equal"] == true);

    const Run one = run({"verify", "--s", "3", "--trials", "1", "--seed", "1"});
    CHECK(one.code == kExitOk);
    CHECK(json::parse(one.out)["rows"].size() == 1);

    const Run with_h = run({"verify", "--variant", "with-h", "--s", "6", "--trials", "20"});
    const Run no_h = run({"verify", "--variant", "no-h", "--s", "6", "--trials", "20"});
    CHECK(with_h.code == kExitMismatch);
    CHECK(no_h.code == kExitOk);
    CHECK_FALSE(json::parse(with_h.out)["mismatches"].empty());

    const Run adj = run({"verify", "--adjudicate", "--s", "7", "--trials", "30"});
    CHECK(adj.code == kExitOk);
    CHECK(json::parse(adj.out)["passing_conventions"] == json::array({"no-h/separate"}));
  }

  TEST_CASE("table") {
    const Run r = run({"table", "--s", "3", "--n-from", "2", "--n-to", "12", "--format", "csv"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find('\r') == std::string::npos);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 12);
    CHECK(ls[0] == "n,theta_bound,abs_error,decimal");
    double prev = 1.0;
    for (std::size_t i = 1; i < ls.size(); ++i) {
      const auto c1 = ls[i].find(',');
      const auto c2 = ls[i].find(',', c1 + 1);
      const auto c3 = ls[i].find(',', c2 + 1);
      const double tb = std::stod(ls[i].substr(c1 + 1, c2 - c1 - 1));
      const double err = std::stod(ls[i].substr(c2 + 1, c3 - c2 - 1));
      CHECK(tb < prev);
      CHECK(err <= tb);
      prev = tb;
    }
    const Run single = run({"table", "--s", "3", "--n-from", "5", "--n-to", "5"});
    CHECK(lines(single.out).size() == 2);
  }

  TEST_CASE("lemma2") {
    const Run r = run({"lemma2", "--max", "20"});
    CHECK(r.code == kExitOk);
    CHECK(json::parse(r.out)["failed"] == 0);
  }

  TEST_CASE("digits") {
    const Run r = run({"digits", "--s", "3", "--digits", "20"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out == "1.20205690315959428540\n");
  }

  TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"verify", "--s", "5", "--trials", "10", "--seed", "3"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> t{"table", "--s", "4", "--n-from", "1", "--n-to", "4", "--format", "json"};
    CHECK(run(t).out == run(t).out);
  }
}
