#include <doctest.h>

#include <json.hpp>

#include "incalg/catalog.hpp"
#include "incalg/classify.hpp"
#include "incalg/errors.hpp"

using namespace incalg;

namespace {

Poset ex(const std::string& name) { return named_example(name).poset; }
Poset ul5_ideals() { return ideal_lattice(ex("ul5")).poset(); }

}  // namespace

TEST_CASE("perfect modules") {
  const Poset hex = ex("hex6");
  for (Element x = 0; x < hex.size(); ++x) CHECK(is_perfect(projective(hex, x)));
  CHECK_FALSE(is_perfect(injective(hex, hex.element("2"))));
  const auto r = invariant_record(injective(hex, hex.element("2")), "I(2)");
  CHECK(r.pdim == 2);
  CHECK(r.grade == 1);
}

TEST_CASE("Auslander regularity") {
  CHECK_FALSE(is_auslander_regular(ex("pentagon")));
  CHECK(is_auslander_regular(ex("p8")));
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& l : enumerate_lattices(n)) {
      CHECK(is_auslander_regular(l.poset()).holds == is_distributive(l).holds);
    }
  }
}

TEST_CASE("right diagonal") {
  CHECK(is_right_diagonal(ex("p8")).verdict);
  CHECK_FALSE(is_right_diagonal(ex("p8")).advisory);
  for (std::size_t k = 1; k <= 5; ++k) CHECK(is_right_diagonal(ex("an:" + std::to_string(k))).verdict);
  for (const auto& l : enumerate_lattices(6)) {
    if (is_distributive(l)) CHECK(is_right_diagonal(l.poset()).verdict);
  }
  CHECK(is_right_diagonal(ex("pentagon")).advisory);
}

TEST_CASE("pmic by the perfectness criterion") {
  CHECK(pmic_by_theorem(ul5_ideals()));
  const auto hex = pmic_by_theorem(ex("hex6"));
  REQUIRE_FALSE(hex.holds);
  CHECK(hex.witness->rfind("I(2)", 0) == 0);
  CHECK(pmic_by_theorem(ex("p8")));
  CHECK(pmic_by_theorem(ex("an:4")));
}

TEST_CASE("purity through double Ext") {
  const Lattice b2 = require_lattice(ex("b2"));
  CHECK(is_pure_module_bjork(projective(b2.poset(), b2.bottom())));
  CHECK(is_pure_module_bjork(simple(b2.poset(), b2.bottom())));
  CHECK_THROWS_AS(is_pure_module_bjork(injective(ex("pentagon"), 0)), HypothesisNotMet);
  CHECK(pmic_by_bjork(ul5_ideals()));
  CHECK_FALSE(pmic_by_bjork(ex("hex6")));
  CHECK_THROWS_AS(pmic_by_bjork(ex("m3")), HypothesisNotMet);
  const Poset hex = ex("hex6");
  CHECK_FALSE(pure_by_double_ext(direct_sum({injective(hex, hex.element("2")), injective(hex, hex.element("3"))})));
}

TEST_CASE("brute-force purity over F_2") {
  const Poset pent = ex("pentagon");
  for (Element x = 0; x < pent.size(); ++x) CHECK(brute_force_purity(simple(pent, x)));
  // the degree-1 summand types of the pentagon's coresolution, one copy each
  const PosetRep i1 = direct_sum({injective(pent, pent.element("2")), injective(pent, pent.element("3")),
                                  injective(pent, pent.element("4"))});
  const auto v = brute_force_purity(i1);
  REQUIRE_FALSE(v.holds);
  CHECK_FALSE(v.witness->empty());
  const Lattice b2 = require_lattice(ex("b2"));
  CHECK(brute_force_purity(projective(b2.poset(), b2.bottom())));
  CHECK_THROWS_AS(brute_force_purity(regular_module(ex("hex6"))), DimCapExceeded);
}

TEST_CASE("brute-force purity agrees with double Ext on single injectives") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& l : enumerate_lattices(n)) {
      if (!is_distributive(l)) continue;
      for (Element x = 0; x < n; ++x) {
        const PosetRep i = injective(l.poset(), x);
        CHECK(brute_force_purity(i).holds == is_pure_module_bjork(i));
      }
    }
  }
}

TEST_CASE("two-sided pmic") {
  CHECK(two_sided_pmic(ex("b2")));
  const auto ul = two_sided_pmic(ul5_ideals());
  REQUIRE_FALSE(ul.holds);
  CHECK(ul.witness->rfind("opposite: ", 0) == 0);
  CHECK_FALSE(two_sided_pmic(ex("hex6")));
}

TEST_CASE("perfect on both sides") {
  CHECK(perfect_both_sides_all(ex("m3")));
  CHECK_FALSE(perfect_both_sides_all(ex("hex6")));
  const Poset chains = Poset::from_covers({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  CHECK(perfect_both_sides_all(ideal_lattice(chains).poset()));
}

TEST_CASE("conjecture scan") {
  const auto r5 = conjecture_scan(5);
  CHECK(r5.lattices == 10);
  CHECK(r5.counterexamples.empty());
  CHECK(r5.distributive == 8);
  const auto r7 = conjecture_scan(7, 2);
  CHECK(r7.counterexamples.empty());
  CHECK(r7.lattices == 78);
  CHECK(r7.distributive == 21);
}

TEST_CASE("reports") {
  const AlgebraReport pent = build_report(ex("pentagon"), "pentagon");
  CHECK_FALSE(pent.auslander_regular);
  CHECK_FALSE(pent.pmic.has_value());
  CHECK(pent.witnesses.at("pmic") == "not applicable (fails Auslander regularity)");
  CHECK(pent.profile.size() == 3);

  const auto doc = nlohmann::json::parse(report_to_json(build_report(ex("hex6"), "hex6")));
  for (const char* key : {"auslander_regular", "right_diagonal", "pmic", "pmic_op", "two_sided_pmic", "simples",
                          "injectives", "profile", "witnesses"}) {
    CHECK(doc.contains(key));
  }
  CHECK(doc["pmic"] == false);
  CHECK(doc["pmic_op"] == false);
  CHECK(doc["injectives"][1]["pdim"] == 2);
  CHECK(doc["injectives"][1]["grade"] == 1);
  CHECK(doc["witnesses"]["pmic"].get<std::string>().rfind("I(2)", 0) == 0);

  const AlgebraReport m3 = build_report(ex("m3"), "m3");
  CHECK(m3.perfect_both_sides);
  CHECK(m3.distributive == false);

  const std::string text = report_to_text(build_report(ex("p8"), "p8"));
  CHECK(text.find("pmic: true") != std::string::npos);
  CHECK(text.find("lattice: false") != std::string::npos);
}

TEST_CASE("analysis cache is consistent with direct computation") {
  PosetAnalysis a(ex("hex6"));
  for (Element x = 0; x < 6; ++x) {
    CHECK(a.injective_record(x).pdim == pdim(injective(a.poset(), x)));
    CHECK(a.simple_record(x).grade == grade(simple(a.poset(), x)));
  }
  CHECK(a.regular_profile() == regular_coresolution_profile(a.poset()));
}
