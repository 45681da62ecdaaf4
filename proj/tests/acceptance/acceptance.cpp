// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria (capped at 1).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "incalg/catalog.hpp"
#include "incalg/classify.hpp"
#include "incalg/errors.hpp"

using namespace incalg;

namespace {

std::size_t workers() { return std::max(1U, std::thread::hardware_concurrency()); }

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome from_suite(const std::string& suite, std::size_t max_n, std::size_t w = 1) {
  const SuiteResult r = run_suite(suite, max_n, w);
  std::string detail = std::to_string(r.scanned) + " " + r.unit;
  if (!r.detail.empty()) detail += "; " + r.detail;
  if (r.counterexample) detail += "; counterexample " + *r.counterexample;
  return {r.pass, detail};
}

// Checks for the named examples, each against a literal expected value.
Outcome named_examples() {
  std::ostringstream failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures << what << "; ";
  };
  {
    const Poset p = named_example("pentagon").poset;
    const Lattice l = require_lattice(p);
    expect(!is_distributive(l), "pentagon distributive");
    expect(regular_coresolution_profile(p).size() == 3, "pentagon coresolution length");
    expect(grade(injective(p, p.element("3"))) == 2, "pentagon grade I(3)");
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    const Poset p = named_example("an:" + std::to_string(n)).poset;
    const Profile prof = regular_coresolution_profile(p);
    Profile want(2, std::vector<std::size_t>(n, 0));
    want[0][n - 1] = n;
    for (std::size_t k = 0; k + 1 < n; ++k) want[1][k] = 1;
    expect(prof == want, "A_" + std::to_string(n) + " profile");
  }
  {
    const Poset p = named_example("p8").poset;
    expect(std::holds_alternative<NotALattice>(as_lattice(p)), "p8 is a lattice");
    expect(pmic_by_theorem(p).holds, "p8 pmic");
  }
  {
    const Poset p = named_example("hex6").poset;
    const AlgebraReport r = build_report(p, "hex6");
    expect(r.auslander_regular, "hex6 Auslander regular");
    expect(r.pmic == false && r.pmic_op == false, "hex6 pmic on both sides");
    expect(r.witnesses.count("pmic") && r.witnesses.at("pmic").rfind("I(2)", 0) == 0, "hex6 witness I(2)");
  }
  {
    const Poset p = named_example("m3").poset;
    expect(!is_distributive(require_lattice(p)), "m3 distributive");
    expect(perfect_both_sides_all(p).holds, "m3 perfect both sides");
  }
  {
    const Lattice l = ideal_lattice(named_example("ul5").poset);
    expect(l.size() == 14, "ul5 ideal lattice size");
    expect(pmic_by_theorem(l.poset()).holds, "ul5 ideals pmic");
    expect(!two_sided_pmic(l.poset()).holds, "ul5 ideals two-sided pmic");
  }
  const std::string f = failures.str();
  return {f.empty(), f.empty() ? "pentagon, A_2..A_5, p8, hex6, m3, ul5 ideal lattice" : f};
}

Outcome purity_cross_check() {
  const Outcome a = from_suite("double-ext", 7);
  const Outcome b = from_suite("purity-oracle", 6);
  return {a.pass && b.pass, "double Ext vs perfectness: " + a.detail + "; F_2 enumeration: " + b.detail};
}

// Literal expected counts; the suite separately compares two strategies.
Outcome counts() {
  const std::vector<std::size_t> lattices{1, 1, 1, 2, 5, 15, 53};
  const std::vector<std::size_t> forests{1, 2, 4, 9, 20, 48};
  std::string bad;
  for (std::size_t n = 1; n <= 7; ++n) {
    if (enumerate_lattices(n).size() != lattices[n - 1]) bad += "lattices n=" + std::to_string(n) + "; ";
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    if (enumerate_upward_linear_posets(n).size() != forests[n - 1]) bad += "upward-linear n=" + std::to_string(n) + "; ";
  }
  const Outcome s = from_suite("counts", 7);
  return {bad.empty() && s.pass, bad + s.detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Auslander regular iff distributive, lattices <= 7", [] { return from_suite("auslander-distributive", 7); }},
      {"injective resolutions of distributive lattices <= 8", [] { return from_suite("injective-resolutions", 8); }},
      {"strong iff minimal antichain resolution, lattices <= 7", [] { return from_suite("strong-minimal", 7); }},
      {"perfect iff Boolean for strong antichains, lattices <= 7", [] { return from_suite("perfect-boolean", 7); }},
      {"interval grade formula, distributive lattices <= 7", [] { return from_suite("interval-grade", 7); }},
      {"four-way upward-linear equivalence, distributive lattices <= 8", [] { return from_suite("upward-linear", 8); }},
      {"two-sided pmic iff divisor lattice, distributive lattices <= 8", [] { return from_suite("divisor", 8); }},
      {"named examples", named_examples},
      {"double Ext and F_2 purity cross-checks", purity_cross_check},
      {"conjecture scan, lattices <= 8", [] { return from_suite("conjecture", 8, workers()); }},
      {"lattice and upward-linear poset counts", counts},
      {"Hom between projectives, lattices <= 7", [] { return from_suite("hom-formula", 7); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", secs);
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << o.detail << ") [" << time << "]\n";
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
