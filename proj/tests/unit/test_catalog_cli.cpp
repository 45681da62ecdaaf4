#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "incalg/catalog.hpp"
#include "incalg/cli.hpp"
#include "incalg/errors.hpp"

using namespace incalg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("named examples") {
  for (const char* name : {"pentagon", "b2", "m3", "hex6", "p8", "ul5", "an:3"}) CHECK_NOTHROW(named_example(name));
  CHECK(named_example("an:5").poset.covers().size() == 4);
  CHECK_THROWS_AS(named_example("an:0"), Error);
  CHECK_THROWS_AS(named_example("an:x"), Error);
  CHECK_THROWS_AS(named_example("octagon"), Error);
}

TEST_CASE("rooted forests") {
  const std::vector<std::size_t> expect{1, 2, 4, 9, 20, 48, 115, 286};
  for (std::size_t n = 1; n <= 8; ++n) CHECK(count_rooted_forests(n) == expect[n - 1]);
}

TEST_CASE("suites at small sizes") {
  for (const auto& s : suite_names()) {
    CAPTURE(s);
    const auto r = run_suite(s, 5, 2);
    CHECK(r.pass);
    CHECK(r.scanned > 0);
  }
  CHECK(run_suite("auslander-distributive", 6).scanned == 25);
  CHECK_THROWS_AS(run_suite("nope", 5), Error);
  CHECK_THROWS_AS(run_suite("conjecture", 9), SizeCapExceeded);
}

TEST_CASE("suite output does not depend on the worker count") {
  for (const char* s : {"strong-minimal", "conjecture", "upward-linear"}) {
    CHECK(format_suite(run_suite(s, 6, 1)) == format_suite(run_suite(s, 6, 4)));
  }
  CHECK(cli({"catalog", "--max-n", "6", "--workers", "1"}).out == cli({"catalog", "--max-n", "6", "--workers", "3"}).out);
}

TEST_CASE("cli check") {
  auto p8 = cli({"check", "--property", "pmic", "--example", "p8"});
  CHECK(p8.code == 0);
  CHECK(has(p8.out, "pmic: true"));

  auto hex = cli({"check", "--property", "pmic", "--example", "hex6"});
  CHECK(hex.code == 1);
  CHECK(has(hex.out, "I(2)"));

  auto pent = cli({"check", "--property", "distributive", "--example", "pentagon", "--format", "json"});
  CHECK(pent.code == 1);
  const auto doc = nlohmann::json::parse(pent.out);
  CHECK(doc["holds"] == false);
  CHECK(has(doc["witness"].get<std::string>(), "differs"));

  CHECK(cli({"check", "--property", "pmic", "--example", "pentagon"}).code == 2);
  CHECK(cli({"check", "--property", "two-sided-pmic", "--example", "ul5", "--ideal-lattice"}).code == 1);
  CHECK(cli({"check", "--property", "pmic", "--example", "ul5", "--ideal-lattice"}).code == 0);
  CHECK(cli({"check", "--property", "upward-linear", "--example", "ul5"}).code == 0);
  CHECK(cli({"check", "--property", "divisor", "--example", "b2"}).code == 0);
  CHECK(cli({"check", "--property", "lattice", "--example", "p8"}).code == 1);
  CHECK(cli({"check", "--property", "distributive", "--example", "p8"}).code == 2);
  CHECK(cli({"check", "--property", "perfect-both-sides", "--example", "m3"}).code == 0);
  CHECK(cli({"check", "--property", "auslander-regular", "--example", "p8", "--field", "fp:32003"}).code == 0);
  CHECK(cli({"check", "--property", "right-diagonal", "--example", "hex6", "--opposite"}).code == 0);
}

TEST_CASE("cli text and json verdicts agree") {
  for (const char* prop : {"lattice", "distributive", "auslander-regular", "pmic", "two-sided-pmic"}) {
    for (const char* name : {"b2", "hex6", "m3"}) {
      const auto t = cli({"check", "--property", prop, "--example", name});
      const auto j = cli({"check", "--property", prop, "--example", name, "--format", "json"});
      CHECK(t.code == j.code);
      const auto doc = nlohmann::json::parse(j.out);
      if (t.code == 0) CHECK(doc["holds"] == true);
      if (t.code == 1) CHECK(doc["holds"] == false);
    }
  }
}

TEST_CASE("cli input errors") {
  auto bad = cli({"check", "--property", "lattice", "--inline", "a < b\nb <"});
  CHECK(bad.code == 2);
  CHECK(has(bad.err, "line 2"));
  CHECK(cli({"check", "--property", "lattice"}).code == 2);
  CHECK(cli({"check", "--property", "lattice", "--example", "b2", "--inline", "a<b"}).code == 2);
  CHECK(cli({"check", "--property", "nonsense", "--example", "b2"}).code == 2);
  CHECK(cli({"dot", "/nonexistent/file.json"}).code == 2);
  CHECK(cli({"check", "--property", "pmic", "--example", "b2", "--field", "fp:9"}).code == 2);
  CHECK(cli({}).code == 2);
}

TEST_CASE("cli invariants") {
  auto b2 = cli({"invariants", "--example", "b2"});
  CHECK(b2.code == 0);
  CHECK(has(b2.out, "0  2    2       2        yes        2       2        yes"));
  const auto doc = nlohmann::json::parse(cli({"invariants", "--example", "hex6", "--format", "json"}).out);
  CHECK(doc["elements"][1]["pdim_injective"] == 2);
  CHECK(doc["elements"][1]["grade_injective"] == 1);
  CHECK(doc["elements"][1]["injective_perfect"] == false);
  const auto chain = nlohmann::json::parse(cli({"invariants", "--example", "an:5", "--format", "json"}).out);
  for (const auto& row : chain["elements"]) {
    CHECK(row["pdim_simple"] <= 1);
    CHECK(row["grade_injective"] <= 1);
  }
}

TEST_CASE("cli resolve") {
  auto m3 = cli({"resolve", "--example", "m3", "--antichain", "2,3,4"});
  CHECK(m3.code == 0);
  CHECK(has(m3.out, "minimal: false"));
  CHECK(has(m3.out, "strong: false"));
  const auto hex = nlohmann::json::parse(cli({"resolve", "--example", "hex6", "--antichain", "3, 4", "--format", "json"}).out);
  CHECK(hex["minimal"] == true);
  CHECK(hex["strong"] == true);
  CHECK(hex["boolean"] == false);
  CHECK(hex["perfect"] == false);
  const auto empty = nlohmann::json::parse(cli({"resolve", "--example", "pentagon", "--antichain", "", "--format", "json"}).out);
  CHECK(empty["terms"] == nlohmann::json::array({nlohmann::json::array({"1"})}));
  CHECK(cli({"resolve", "--example", "m3", "--antichain", "1,2"}).code == 2);
  CHECK(cli({"resolve", "--example", "p8", "--antichain", "1"}).code == 2);
  CHECK(cli({"resolve", "--example", "m3", "--antichain", "9"}).code == 2);
}

TEST_CASE("cli dot, catalog and conjecture") {
  const auto dot = cli({"dot", "--example", "pentagon"});
  CHECK(dot.code == 0);
  CHECK(has(dot.out, "digraph"));
  CHECK(cli({"dot", "--inline", "{\"name\": \"e\", \"elements\": [], \"covers\": []}"}).code == 0);

  const auto cat = cli({"catalog", "--max-n", "6", "--suite", "auslander-distributive"});
  CHECK(cat.code == 0);
  CHECK(has(cat.out, "pass (25 lattices scanned)"));
  const auto cj = nlohmann::json::parse(cli({"catalog", "--max-n", "5", "--suite", "counts", "--format", "json"}).out);
  CHECK(cj[0]["pass"] == true);
  CHECK(cli({"catalog", "--max-n", "12"}).code == 2);

  const auto conj = cli({"conjecture", "--max-n", "5", "--format", "json"});
  CHECK(conj.code == 0);
  const auto doc = nlohmann::json::parse(conj.out);
  CHECK(doc["lattices"] == 10);
  CHECK(doc["counterexamples"].empty());
}
