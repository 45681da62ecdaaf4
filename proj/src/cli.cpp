#include "incalg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <thread>

#include "incalg/catalog.hpp"
#include "incalg/classify.hpp"
#include "incalg/errors.hpp"
#include "incalg/homology.hpp"
#include "incalg/lattice.hpp"
#include "incalg/poset_io.hpp"

namespace incalg {

namespace {

using ojson = nlohmann::ordered_json;

struct InputOptions {
  std::string file;
  std::string example;
  std::string inline_spec;
  bool ideal = false;
  bool opposite = false;
  std::string format = "text";
  std::string field = "q";
};

void add_input_options(CLI::App* sub, InputOptions& o, bool with_field) {
  auto* file = sub->add_option("file", o.file, "poset file (JSON or text)");
  auto* ex = sub->add_option("--example", o.example, "built-in example: pentagon, b2, m3, hex6, p8, ul5, an:<k>");
  auto* in = sub->add_option("--inline", o.inline_spec, "poset given on the command line; ';' separates text lines");
  file->excludes(ex)->excludes(in);
  ex->excludes(in);
  sub->add_flag("--ideal-lattice", o.ideal, "replace the input by its lattice of order ideals");
  sub->add_flag("--opposite", o.opposite, "reverse the order");
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  if (with_field) sub->add_option("--field", o.field, "q (rationals) or fp:<p>");
}

NamedPoset load(const InputOptions& o) {
  const int sources = !o.file.empty() + !o.example.empty() + !o.inline_spec.empty();
  if (sources != 1) throw Error("give exactly one input: a file, --example or --inline");
  NamedPoset np;
  if (!o.example.empty()) {
    np = named_example(o.example);
  } else if (!o.inline_spec.empty()) {
    std::string text = o.inline_spec;
    const auto start = text.find_first_not_of(" \t\n");
    if (start == std::string::npos || text[start] != '{') std::replace(text.begin(), text.end(), ';', '\n');
    np = parse_poset(text, "inline");
  } else {
    std::ifstream in(o.file);
    if (!in) throw Error("cannot read '" + o.file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    np = parse_poset(buf.str(), std::filesystem::path(o.file).stem().string());
  }
  if (o.ideal) np = {"ideals of " + np.name, ideal_lattice(np.poset).poset()};
  if (o.opposite) np = {np.name + " (opposite)", np.poset.opposite()};
  return np;
}

Field parse_field(const std::string& s) {
  if (s == "q") return Field::rationals();
  if (s.rfind("fp:", 0) == 0) {
    try {
      const unsigned long p = std::stoul(s.substr(3));
      if (p > 0xFFFFFFFFUL) throw Error("prime too large");
      return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw Error("bad field '" + s + "': use q or fp:<prime>");
}

// ------------------------------------------------------------------ check

struct CheckResult {
  std::optional<bool> holds;  // empty: not applicable
  std::string witness;
};

std::string first_branching(const Poset& p, bool downward_too) {
  for (Element x = 0; x < p.size(); ++x) {
    if (p.upper_covers(x).size() > 1) {
      return p.name(x) + " has upper covers " + format_set(p, p.upper_covers(x));
    }
    if (downward_too && p.lower_covers(x).size() > 1) {
      return p.name(x) + " has lower covers " + format_set(p, p.lower_covers(x));
    }
  }
  return {};
}

CheckResult check_property(const Poset& p, const std::string& name, const std::string& property, Field field) {
  if (property == "upward-linear") {
    const std::string w = first_branching(p, false);
    return {w.empty(), w};
  }
  const auto as_l = as_lattice(p);
  const Lattice* l = std::get_if<Lattice>(&as_l);
  if (property == "lattice") return {l != nullptr, l ? "" : describe(p, std::get<NotALattice>(as_l))};
  if (property == "distributive" || property == "divisor") {
    if (!l) return {std::nullopt, "not applicable (not a lattice: " + describe(p, std::get<NotALattice>(as_l)) + ")"};
    const auto d = is_distributive(*l);
    if (!d) return {false, describe_triple(p, *d.witness)};
    if (property == "distributive") return {true, ""};
    const Poset ji = join_irreducibles(*l);
    const std::string w = first_branching(ji, true);
    if (w.empty()) return {true, ""};
    return {false, "join-irreducible " + w};
  }
  const AlgebraReport r = build_report(p, name, field);
  auto witness = [&](const std::string& key) {
    const auto it = r.witnesses.find(key);
    return it == r.witnesses.end() ? std::string() : it->second;
  };
  if (property == "auslander-regular") return {r.auslander_regular, witness("auslander_regular")};
  if (property == "right-diagonal") return {r.right_diagonal, witness("right_diagonal")};
  if (property == "pmic") return {r.pmic, witness("pmic")};
  if (property == "two-sided-pmic") return {r.two_sided_pmic, witness("two_sided_pmic")};
  return {r.perfect_both_sides, witness("perfect_both_sides")};
}

int cmd_check(const InputOptions& o, const std::string& property, std::ostream& out) {
  const NamedPoset np = load(o);
  const CheckResult r = check_property(np.poset, np.name, property, parse_field(o.field));
  if (o.format == "json") {
    ojson doc;
    doc["input"] = np.name;
    doc["property"] = property;
    doc["holds"] = r.holds ? ojson(*r.holds) : ojson(nullptr);
    doc["witness"] = r.holds.value_or(false) ? ojson(nullptr) : ojson(r.witness);
    out << doc.dump(2) << "\n";
  } else {
    out << property << ": " << (r.holds ? (*r.holds ? "true" : "false") : "not applicable") << "\n";
    if (!r.holds.value_or(false)) out << "witness: " << r.witness << "\n";
  }
  if (!r.holds) return kExitError;
  return *r.holds ? kExitTrue : kExitFalse;
}

// ------------------------------------------------------------------ invariants

int cmd_invariants(const InputOptions& o, std::ostream& out) {
  const NamedPoset np = load(o);
  const Poset& p = np.poset;
  const AlgebraReport r = build_report(p, np.name, parse_field(o.field));
  if (o.format == "json") {
    ojson doc = ojson::parse(report_to_json(r));
    ojson rows = ojson::array();
    for (Element x = 0; x < p.size(); ++x) {
      rows.push_back({{"element", p.name(x)},
                      {"cov", p.upper_covers(x).size()},
                      {"pdim_simple", r.simples[x].pdim},
                      {"grade_simple", r.simples[x].grade},
                      {"simple_perfect", r.simples[x].perfect},
                      {"pdim_injective", r.injectives[x].pdim},
                      {"grade_injective", r.injectives[x].grade},
                      {"injective_perfect", r.injectives[x].perfect}});
    }
    doc["elements"] = rows;
    out << doc.dump(2) << "\n";
    return kExitTrue;
  }
  const std::vector<std::string> head{"x", "cov", "pdim S", "grade S", "S perfect", "pdim I", "grade I", "I perfect"};
  std::vector<std::vector<std::string>> table{head};
  for (Element x = 0; x < p.size(); ++x) {
    const auto& s = r.simples[x];
    const auto& i = r.injectives[x];
    table.push_back({p.name(x), std::to_string(p.upper_covers(x).size()), std::to_string(s.pdim),
                     std::to_string(s.grade), s.perfect ? "yes" : "no", std::to_string(i.pdim),
                     std::to_string(i.grade), i.perfect ? "yes" : "no"});
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : table) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += (c ? "  " : "") + row[c] + std::string(width[c] - row[c].size(), ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << "\n";
  }
  out << "\n" << report_to_text(r);
  return kExitTrue;
}

// ------------------------------------------------------------------ resolve

ElementSet parse_antichain(const Poset& p, const std::string& spec) {
  ElementSet s;
  std::stringstream in(spec);
  std::string label;
  while (std::getline(in, label, ',')) {
    const auto a = label.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    label = label.substr(a, label.find_last_not_of(" \t") - a + 1);
    s.insert(p.element(label));
  }
  return s;
}

std::string describe_pair(const Poset& p, const SubsetPair& w) {
  return "S = " + format_set(p, w.s) + ", S' = " + format_set(p, w.s_prime);
}

int cmd_resolve(const InputOptions& o, const std::string& antichain, bool antichain_given, std::ostream& out) {
  const NamedPoset np = load(o);
  const Lattice l = require_lattice(np.poset);
  const Poset& p = l.poset();
  const Field field = parse_field(o.field);
  const ElementSet set = antichain_given ? parse_antichain(p, antichain) : ElementSet{};
  const Antichain c(l, set);
  const ChainComplex res = antichain_resolution(c, field);
  const bool minimal = is_minimal_complex(res);
  const auto strong = is_strong_antichain(c);
  const auto boolean = is_boolean_antichain(c);
  const PosetRep m = antichain_module(c, field);
  std::optional<InvariantRecord> rec;
  if (!m.is_zero()) rec = invariant_record(m, "M_C");

  if (o.format == "json") {
    ojson doc;
    doc["input"] = np.name;
    ojson labels = ojson::array();
    for (const Element x : c.ordered()) labels.push_back(p.name(x));
    doc["antichain"] = labels;
    ojson terms = ojson::array();
    for (const auto& t : res.terms) {
      ojson row = ojson::array();
      for (const Element x : t) row.push_back(p.name(x));
      terms.push_back(row);
    }
    doc["terms"] = terms;
    ojson boundaries = ojson::array();
    for (std::size_t r = 1; r < res.boundaries.size(); ++r) {
      const Mat& d = res.boundaries[r];
      ojson mat = ojson::array();
      for (std::size_t i = 0; i < d.rows(); ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < d.cols(); ++j) {
          std::ostringstream v;
          v << d(i, j);
          row.push_back(v.str());
        }
        mat.push_back(row);
      }
      boundaries.push_back(mat);
    }
    doc["boundaries"] = boundaries;
    doc["minimal"] = minimal;
    doc["strong"] = strong.holds;
    doc["strong_witness"] = strong ? ojson(nullptr) : ojson(describe_pair(p, *strong.witness));
    doc["boolean"] = boolean.holds;
    doc["boolean_witness"] = boolean ? ojson(nullptr) : ojson(describe_pair(p, *boolean.witness));
    doc["module_zero"] = m.is_zero();
    doc["perfect"] = rec ? ojson(rec->perfect) : ojson(nullptr);
    doc["grade"] = rec ? ojson(rec->grade) : ojson(nullptr);
    doc["pdim"] = rec ? ojson(rec->pdim) : ojson(nullptr);
    out << doc.dump(2) << "\n";
    return kExitTrue;
  }
  out << "antichain " << format_set(p, set) << " in " << np.name << "\n";
  out << format_complex(res, true);
  out << "minimal: " << (minimal ? "true" : "false") << "\n";
  out << "strong: " << (strong ? "true" : "false");
  if (!strong) out << "  [" << describe_pair(p, *strong.witness) << "]";
  out << "\nboolean: " << (boolean ? "true" : "false");
  if (!boolean) out << "  [" << describe_pair(p, *boolean.witness) << "]";
  out << "\n";
  if (rec) {
    out << "M_C: pdim " << rec->pdim << ", grade " << rec->grade << ", " << (rec->perfect ? "perfect" : "imperfect")
        << "\n";
  } else {
    out << "M_C: zero module\n";
  }
  return kExitTrue;
}

// ------------------------------------------------------------------ catalog / conjecture

std::size_t default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

int cmd_catalog(std::vector<std::string> suites, std::optional<std::size_t> max_n, std::size_t workers,
                const std::string& format, std::ostream& out) {
  if (suites.empty()) suites = suite_names();
  bool pass = true;
  ojson results = ojson::array();
  for (const auto& s : suites) {
    const SuiteResult r = run_suite(s, max_n.value_or(default_max_n(s)), workers);
    pass = pass && r.pass;
    if (format == "json") {
      results.push_back({{"suite", r.suite},
                         {"pass", r.pass},
                         {"scanned", r.scanned},
                         {"unit", r.unit},
                         {"detail", r.detail},
                         {"counterexample", r.counterexample ? ojson(*r.counterexample) : ojson(nullptr)}});
    } else {
      out << format_suite(r) << "\n";
    }
  }
  if (format == "json") out << results.dump(2) << "\n";
  return pass ? kExitTrue : kExitFalse;
}

int cmd_conjecture(std::size_t max_n, std::size_t workers, const std::string& format, std::ostream& out) {
  const ConjectureReport r = conjecture_scan(max_n, workers);
  if (format == "json") {
    ojson doc;
    doc["max_n"] = r.max_n;
    doc["lattices"] = r.lattices;
    doc["distributive"] = r.distributive;
    doc["perfect_both_sides"] = r.all_perfect;
    doc["pmic"] = r.pmic;
    ojson ce = ojson::array();
    for (const auto& c : r.counterexamples) ce.push_back(ojson::parse(c));
    doc["counterexamples"] = ce;
    out << doc.dump(2) << "\n";
  } else {
    out << "lattices with at most " << r.max_n << " elements: " << r.lattices << "\n";
    out << "distributive: " << r.distributive << "\n";
    out << "all simples and injectives perfect on both sides: " << r.all_perfect << "\n";
    out << "passing the PMIC test: " << r.pmic << "\n";
    out << "non-distributive lattices passing: " << r.counterexamples.size() << "\n";
    for (const auto& c : r.counterexamples) out << "  " << c << "\n";
  }
  return r.counterexamples.empty() ? kExitTrue : kExitFalse;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homological properties of poset and lattice incidence algebras", "incalg"};
  app.require_subcommand(1, 1);

  InputOptions check_in;
  std::string property;
  auto* check = app.add_subcommand("check", "decide one property; exit 0 true, 1 false, 2 error or not applicable");
  add_input_options(check, check_in, true);
  check->add_option("--property", property, "property to decide")
      ->required()
      ->check(CLI::IsMember({"lattice", "distributive", "upward-linear", "divisor", "auslander-regular",
                             "right-diagonal", "pmic", "two-sided-pmic", "perfect-both-sides"}));

  InputOptions inv_in;
  auto* invariants = app.add_subcommand("invariants", "per-element pdim and grade table plus the full report");
  add_input_options(invariants, inv_in, true);

  InputOptions res_in;
  std::string antichain;
  auto* resolve = app.add_subcommand("resolve", "antichain resolution with minimality, strong and Boolean verdicts");
  add_input_options(resolve, res_in, true);
  auto* antichain_opt = resolve->add_option("--antichain", antichain, "comma-separated labels; empty for P(m)");

  std::vector<std::string> suites;
  std::optional<std::size_t> catalog_max;
  std::size_t catalog_workers = default_workers();
  std::string catalog_format = "text";
  auto* catalog = app.add_subcommand("catalog", "run verification suites over enumerated catalogs");
  catalog->add_option("--suite", suites, "suite name, repeatable; default all")->check(CLI::IsMember(suite_names()));
  catalog->add_option("--max-n", catalog_max, "largest catalog size; default per suite");
  catalog->add_option("--workers", catalog_workers, "worker threads")->check(CLI::PositiveNumber);
  catalog->add_option("--format", catalog_format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::size_t conj_max = 8;
  std::size_t conj_workers = default_workers();
  std::string conj_format = "text";
  auto* conjecture = app.add_subcommand("conjecture", "search non-distributive lattices passing the PMIC test");
  conjecture->add_option("--max-n", conj_max, "largest lattice size");
  conjecture->add_option("--workers", conj_workers, "worker threads")->check(CLI::PositiveNumber);
  conjecture->add_option("--format", conj_format, "output format")->check(CLI::IsMember({"text", "json"}));

  InputOptions dot_in;
  auto* dot = app.add_subcommand("dot", "Graphviz Hasse diagram");
  add_input_options(dot, dot_in, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitError;
  }

  try {
    if (check->parsed()) return cmd_check(check_in, property, out);
    if (invariants->parsed()) return cmd_invariants(inv_in, out);
    if (resolve->parsed()) return cmd_resolve(res_in, antichain, antichain_opt->count() > 0, out);
    if (catalog->parsed()) return cmd_catalog(suites, catalog_max, catalog_workers, catalog_format, out);
    if (conjecture->parsed()) return cmd_conjecture(conj_max, conj_workers, conj_format, out);
    const NamedPoset np = load(dot_in);
    out << poset_to_dot(np.poset, np.name);
    return kExitTrue;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace incalg
