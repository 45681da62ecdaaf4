#include "incalg/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "incalg/classify.hpp"
#include "incalg/enumerate.hpp"
#include "incalg/errors.hpp"
#include "incalg/homology.hpp"
#include "incalg/parallel.hpp"

namespace incalg {

// ------------------------------------------------------------------ examples

namespace {

NamedPoset from_pairs(const std::string& name, const std::vector<std::string>& elements,
                      const std::vector<std::pair<std::string, std::string>>& covers) {
  return {name, Poset::from_covers(elements, covers)};
}

}  // namespace

std::vector<std::string> example_names() { return {"pentagon", "b2", "m3", "hex6", "p8", "ul5", "an:<k>"}; }

NamedPoset named_example(const std::string& name) {
  if (name == "pentagon") {
    return from_pairs(name, {"1", "2", "3", "4", "5"}, {{"1", "2"}, {"1", "3"}, {"3", "4"}, {"2", "5"}, {"4", "5"}});
  }
  if (name == "b2") return from_pairs(name, {"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  if (name == "m3") {
    return from_pairs(name, {"1", "2", "3", "4", "5"},
                      {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "5"}, {"3", "5"}, {"4", "5"}});
  }
  if (name == "hex6") {
    return from_pairs(name, {"1", "2", "3", "4", "5", "6"},
                      {{"1", "2"}, {"2", "3"}, {"2", "4"}, {"3", "5"}, {"4", "5"}, {"5", "6"}});
  }
  if (name == "p8") {
    return from_pairs(name, {"0", "1", "2", "3", "4", "5", "6", "7"},
                      {{"0", "1"}, {"0", "3"}, {"1", "2"}, {"1", "6"}, {"2", "4"}, {"3", "4"}, {"3", "5"},
                       {"4", "7"}, {"5", "6"}, {"6", "7"}});
  }
  if (name == "ul5") return from_pairs(name, {"1", "2", "3", "4", "5"}, {{"2", "3"}, {"3", "4"}, {"1", "4"}});
  if (name.rfind("an:", 0) == 0) {
    std::size_t k = 0;
    try {
      k = std::stoul(name.substr(3));
    } catch (const std::exception&) {
      throw Error("bad chain length in '" + name + "'");
    }
    if (k == 0 || k > kMaxPosetSize) throw Error("chain length must be between 1 and 64");
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 1; i <= k; ++i) {
      elements.push_back(std::to_string(i));
      if (i > 1) covers.emplace_back(std::to_string(i - 1), std::to_string(i));
    }
    return from_pairs(name, elements, covers);
  }
  throw Error("unknown example '" + name + "'");
}

// ------------------------------------------------------------------ counting

std::vector<Lattice> lattices_up_to(std::size_t max_n) {
  if (max_n > kDefaultLatticeCap) throw SizeCapExceeded(max_n, kDefaultLatticeCap);
  std::vector<Lattice> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto& l : enumerate_lattices(n)) out.push_back(std::move(l));
  }
  return out;
}

std::size_t count_lattices_by_extension(std::size_t n) {
  if (n <= 2) return n == 0 ? 0 : 1;
  std::size_t count = 0;
  for (const auto& q : enumerate_posets(n - 2, std::max(n - 2, kDefaultPosetCap))) {
    std::vector<std::string> names{"bottom"};
    std::vector<Cover> relations;
    for (Element x = 0; x < q.size(); ++x) {
      names.push_back("q" + q.name(x));
      relations.emplace_back(0, x + 1);
      relations.emplace_back(x + 1, n - 1);
    }
    for (const auto& [a, b] : q.covers()) relations.emplace_back(a + 1, b + 1);
    names.push_back("top");
    if (std::holds_alternative<Lattice>(as_lattice(Poset::from_relations(names, relations)))) ++count;
  }
  return count;
}

std::size_t count_rooted_forests(std::size_t n) {
  // trees[k] = rooted trees on k nodes; forests on n nodes = trees on n + 1.
  std::vector<std::size_t> trees(n + 2, 0);
  trees[1] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    std::size_t sum = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      std::size_t s = 0;
      for (std::size_t d = 1; d <= k; ++d) {
        if (k % d == 0) s += d * trees[d];
      }
      sum += s * trees[m - k + 1];
    }
    trees[m + 1] = sum / m;
  }
  return trees[n + 1];
}

// ------------------------------------------------------------------ suites

namespace {

struct Outcome {
  std::size_t items = 0;
  std::optional<std::string> failure;
};

std::string lattice_text(const Lattice& l) { return poset_to_json(l.poset(), "lattice", -1); }

using LatticeCheck = std::function<Outcome(const Lattice&)>;

SuiteResult sweep(const std::string& suite, const std::vector<Lattice>& lattices, std::size_t workers,
                  const std::string& unit, const LatticeCheck& check) {
  const auto outcomes = parallel_map(lattices.size(), workers, [&](std::size_t k) { return check(lattices[k]); });
  SuiteResult r;
  r.suite = suite;
  r.unit = unit;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    r.scanned += outcomes[k].items;
    if (outcomes[k].failure && r.pass) {
      r.pass = false;
      r.counterexample = lattice_text(lattices[k]) + ": " + *outcomes[k].failure;
    }
  }
  return r;
}

std::vector<Lattice> distributive_only(std::vector<Lattice> all) {
  std::erase_if(all, [](const Lattice& l) { return !is_distributive(l).holds; });
  return all;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Outcome auslander_distributive(const Lattice& l) {
  const bool ar = is_auslander_regular(l.poset()).holds;
  const bool d = is_distributive(l).holds;
  if (ar != d) return {1, "auslander_regular=" + yes_no(ar) + " distributive=" + yes_no(d)};
  return {1, std::nullopt};
}

Outcome injective_resolutions(const Lattice& l) {
  const Poset& p = l.poset();
  for (Element x = 0; x < p.size(); ++x) {
    const auto res = minimal_projective_resolution(injective(p, x));
    const std::string at = "I(" + p.name(x) + ")";
    if (res.length() != p.upper_covers(x).size()) return {p.size(), at + ": pdim differs from the cover count"};
    const Antichain c = antichain_of_injective(l, x);
    if (!(antichain_module(c) == injective(p, x))) return {p.size(), at + ": antichain module differs"};
    const auto ar = antichain_resolution(c);
    if (!is_minimal_complex(ar)) return {p.size(), at + ": antichain resolution is not minimal"};
    if (ar.terms.size() != res.terms.size()) return {p.size(), at + ": resolutions have different lengths"};
    for (std::size_t r = 0; r < res.terms.size(); ++r) {
      auto a = ar.terms[r];
      auto b = res.terms[r];
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return {p.size(), at + ": terms differ in degree " + std::to_string(r)};
    }
  }
  return {p.size(), std::nullopt};
}

Outcome strong_minimal(const Lattice& l) {
  const auto antichains = all_antichains(l.poset());
  for (const auto s : antichains) {
    const Antichain c(l, s);
    const bool strong = is_strong_antichain(c).holds;
    const bool minimal = is_minimal_complex(antichain_resolution(c));
    if (strong != minimal) {
      return {antichains.size(),
              format_set(l.poset(), s) + ": strong=" + yes_no(strong) + " minimal=" + yes_no(minimal)};
    }
  }
  return {antichains.size(), std::nullopt};
}

Outcome perfect_boolean(const Lattice& l) {
  std::size_t items = 0;
  for (const auto s : all_antichains(l.poset())) {
    const Antichain c(l, s);
    if (!is_strong_antichain(c)) continue;
    const PosetRep m = antichain_module(c);
    if (m.is_zero()) continue;
    ++items;
    const bool perfect = is_perfect(m);
    const bool boolean = is_boolean_antichain(c).holds;
    if (perfect != boolean) {
      return {items, format_set(l.poset(), s) + ": perfect=" + yes_no(perfect) + " boolean=" + yes_no(boolean)};
    }
  }
  return {items, std::nullopt};
}

Outcome interval_grade(const Lattice& l) {
  const Poset& p = l.poset();
  std::size_t items = 0;
  for (Element a = 0; a < p.size(); ++a) {
    for (const Element b : p.up_set(a)) {
      ++items;
      const std::size_t h = grade(interval_module(l, a, b));
      const std::size_t c = grade_interval_combinatorial(l, a, b);
      if (h != c) {
        return {items, "[" + p.name(a) + "," + p.name(b) + "]: grade " + std::to_string(h) + ", formula " +
                           std::to_string(c)};
      }
    }
  }
  return {items, std::nullopt};
}

Outcome upward_linear(const Lattice& l) {
  PosetAnalysis a(l.poset());
  const bool pmic = pmic_by_theorem(a).holds;
  bool injectives = true;
  for (Element x = 0; x < l.size() && injectives; ++x) injectives = a.injective_record(x).perfect;
  const bool ul = is_upward_linear(join_irreducibles(l));
  const bool monotone = cover_monotone(l).holds;
  if (pmic != injectives || pmic != ul || pmic != monotone) {
    return {1, "pmic=" + yes_no(pmic) + " injectives_perfect=" + yes_no(injectives) +
                   " upward_linear=" + yes_no(ul) + " cover_monotone=" + yes_no(monotone)};
  }
  return {1, std::nullopt};
}

Outcome divisor(const Lattice& l) {
  const bool two = two_sided_pmic(l.poset()).holds;
  const bool div = is_divisor_lattice(l);
  if (two != div) return {1, "two_sided_pmic=" + yes_no(two) + " divisor=" + yes_no(div)};
  return {1, std::nullopt};
}

Outcome double_ext_agrees(const Lattice& l) {
  PosetAnalysis a(l.poset());
  const auto theorem = pmic_by_theorem(a);
  const auto double_ext = pmic_by_bjork(a);
  if (theorem.holds != double_ext.holds) {
    return {1, "perfectness=" + yes_no(theorem.holds) + " double_ext=" + yes_no(double_ext.holds)};
  }
  return {1, std::nullopt};
}

Outcome purity_oracle(const Lattice& l) {
  const Poset& p = l.poset();
  PosetAnalysis a(p);
  std::size_t items = 0;
  for (const auto& row : a.regular_profile()) {
    // the term itself, and the term with every multiplicity cut to one,
    // which keeps larger lattices within the enumeration cap
    for (const bool reduced : {false, true}) {
      std::vector<PosetRep> parts;
      std::size_t total = 0;
      for (Element x = 0; x < row.size(); ++x) {
        const std::size_t copies = reduced ? std::min<std::size_t>(row[x], 1) : row[x];
        for (std::size_t k = 0; k < copies; ++k) {
          parts.push_back(injective(p, x));
          total += parts.back().total_dim();
        }
      }
      if (total > kDefaultPurityDimCap || (reduced && std::ranges::all_of(row, [](std::size_t m) { return m <= 1; }))) {
        continue;
      }
      ++items;
      const PosetRep term = direct_sum(parts);
      const bool by_ext = is_pure_module_bjork(term);
      const auto by_enum = brute_force_purity(term);
      if (by_ext != by_enum.holds) {
        return {items, std::string(reduced ? "reduced " : "") + "term of dimension " + std::to_string(total) +
                           ": double_ext=" + yes_no(by_ext) + " enumeration=" + yes_no(by_enum.holds)};
      }
    }
  }
  return {items, std::nullopt};
}

Outcome hom_formula(const Lattice& l) {
  const Poset& p = l.poset();
  std::vector<PosetRep> proj;
  for (Element x = 0; x < p.size(); ++x) proj.push_back(projective(p, x));
  for (Element a = 0; a < p.size(); ++a) {
    for (Element b = 0; b < p.size(); ++b) {
      const std::size_t d = hom_dim(proj[a], proj[b]);
      if (d != (p.leq(b, a) ? 1U : 0U)) {
        return {p.size() * p.size(), "dim Hom(P(" + p.name(a) + "), P(" + p.name(b) + ")) = " + std::to_string(d)};
      }
    }
  }
  return {p.size() * p.size(), std::nullopt};
}

SuiteResult counts(std::size_t max_n) {
  SuiteResult r;
  r.suite = "counts";
  r.unit = "sizes";
  std::ostringstream detail;
  detail << "lattices:";
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t a = enumerate_lattices(n).size();
    const std::size_t b = count_lattices_by_extension(n);
    detail << " " << a;
    ++r.scanned;
    if (a != b && r.pass) {
      r.pass = false;
      r.counterexample = "n=" + std::to_string(n) + ": filter finds " + std::to_string(a) + ", extension finds " +
                         std::to_string(b);
    }
  }
  detail << "; upward-linear:";
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, kDefaultPosetCap); ++n) {
    const std::size_t a = enumerate_upward_linear_posets(n).size();
    const std::size_t b = count_rooted_forests(n);
    detail << " " << a;
    ++r.scanned;
    if (a != b && r.pass) {
      r.pass = false;
      r.counterexample = "n=" + std::to_string(n) + ": " + std::to_string(a) + " upward-linear posets, " +
                         std::to_string(b) + " rooted forests";
    }
  }
  r.detail = detail.str();
  return r;
}

SuiteResult birkhoff(std::size_t max_n, std::size_t workers) {
  std::vector<Poset> posets;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto& p : enumerate_posets(n)) posets.push_back(std::move(p));
  }
  const auto outcomes = parallel_map(posets.size(), workers, [&](std::size_t k) -> std::optional<std::string> {
    const Lattice l = ideal_lattice(posets[k]);
    if (!is_distributive(l)) return "ideal lattice is not distributive";
    if (!are_isomorphic(join_irreducibles(l), posets[k])) return "join-irreducibles differ from the poset";
    if (!are_isomorphic(ideal_lattice(join_irreducibles(l)).poset(), l.poset())) return "round trip changes the lattice";
    return std::nullopt;
  });
  SuiteResult r;
  r.suite = "birkhoff";
  r.unit = "posets";
  r.scanned = posets.size();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (outcomes[k]) {
      r.pass = false;
      r.counterexample = poset_to_json(posets[k], "poset", -1) + ": " + *outcomes[k];
      break;
    }
  }
  return r;
}

SuiteResult conjecture(std::size_t max_n, std::size_t workers) {
  const auto report = conjecture_scan(max_n, workers);
  SuiteResult r;
  r.suite = "conjecture";
  r.unit = "lattices";
  r.scanned = report.lattices;
  r.detail = "distributive " + std::to_string(report.distributive) + ", all perfect both sides " +
             std::to_string(report.all_perfect) + ", pmic " + std::to_string(report.pmic);
  if (!report.counterexamples.empty()) {
    r.pass = false;
    r.counterexample = report.counterexamples.front();
  }
  return r;
}

const std::map<std::string, std::size_t>& suite_sizes() {
  static const std::map<std::string, std::size_t> sizes{
      {"auslander-distributive", 7}, {"injective-resolutions", 8}, {"strong-minimal", 7}, {"perfect-boolean", 7},
      {"interval-grade", 7},         {"upward-linear", 8},         {"divisor", 8},        {"double-ext", 7},
      {"purity-oracle", 6},          {"conjecture", 8},            {"counts", 7},         {"hom-formula", 7},
      {"birkhoff", 6}};
  return sizes;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"auslander-distributive", "injective-resolutions", "strong-minimal", "perfect-boolean", "interval-grade",
          "upward-linear",          "divisor",               "double-ext",     "purity-oracle",   "conjecture",
          "counts",                 "hom-formula",           "birkhoff"};
}

std::size_t default_max_n(const std::string& suite) {
  const auto it = suite_sizes().find(suite);
  if (it == suite_sizes().end()) throw Error("unknown suite '" + suite + "'");
  return it->second;
}

SuiteResult run_suite(const std::string& suite, std::size_t max_n, std::size_t workers) {
  default_max_n(suite);
  if (suite == "counts") {
    if (max_n > kDefaultLatticeCap) throw SizeCapExceeded(max_n, kDefaultLatticeCap);
    return counts(max_n);
  }
  if (suite == "birkhoff") {
    if (max_n > kDefaultPosetCap) throw SizeCapExceeded(max_n, kDefaultPosetCap);
    return birkhoff(max_n, workers);
  }
  if (suite == "conjecture") {
    if (max_n > kDefaultLatticeCap) throw SizeCapExceeded(max_n, kDefaultLatticeCap);
    return conjecture(max_n, workers);
  }
  auto all = lattices_up_to(max_n);
  if (suite == "auslander-distributive") return sweep(suite, all, workers, "lattices", auslander_distributive);
  if (suite == "strong-minimal") return sweep(suite, all, workers, "antichains", strong_minimal);
  if (suite == "perfect-boolean") return sweep(suite, all, workers, "strong antichains", perfect_boolean);
  if (suite == "hom-formula") return sweep(suite, all, workers, "pairs", hom_formula);
  auto dist = distributive_only(std::move(all));
  if (suite == "injective-resolutions") return sweep(suite, dist, workers, "injectives", injective_resolutions);
  if (suite == "interval-grade") return sweep(suite, dist, workers, "intervals", interval_grade);
  if (suite == "upward-linear") return sweep(suite, dist, workers, "distributive lattices", upward_linear);
  if (suite == "divisor") return sweep(suite, dist, workers, "distributive lattices", divisor);
  if (suite == "double-ext") return sweep(suite, dist, workers, "distributive lattices", double_ext_agrees);
  return sweep(suite, dist, workers, "coresolution terms", purity_oracle);
}

std::string format_suite(const SuiteResult& r) {
  std::ostringstream os;
  os << r.suite << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.scanned << " " << r.unit << " scanned)";
  if (!r.detail.empty()) os << " " << r.detail;
  if (r.counterexample) os << "\n  counterexample: " << *r.counterexample;
  return os.str();
}

}  // namespace incalg
