#include "incalg/classify.hpp"

#include <functional>
#include <sstream>

#include <json.hpp>

#include "incalg/errors.hpp"
#include "incalg/lattice.hpp"
#include "incalg/parallel.hpp"
#include "incalg/poset_io.hpp"

namespace incalg {

namespace {

std::string label(const std::string& kind, const Poset& p, Element x) { return kind + "(" + p.name(x) + ")"; }

std::string imperfect(const InvariantRecord& r) {
  return r.module + ": grade " + std::to_string(r.grade) + " < pdim " + std::to_string(r.pdim);
}

}  // namespace

PosetAnalysis::PosetAnalysis(Poset p, Field field)
    : poset_(std::move(p)),
      field_(field),
      simple_res_(poset_.size()),
      injective_res_(poset_.size()),
      simple_rec_(poset_.size()),
      injective_rec_(poset_.size()) {}

const ChainComplex& PosetAnalysis::simple_resolution(Element x) {
  if (!simple_res_[x]) simple_res_[x] = minimal_projective_resolution(simple(poset_, x, field_));
  return *simple_res_[x];
}

const ChainComplex& PosetAnalysis::injective_resolution(Element x) {
  if (!injective_res_[x]) injective_res_[x] = minimal_projective_resolution(injective(poset_, x, field_));
  return *injective_res_[x];
}

namespace {

InvariantRecord record_of(const ChainComplex& res, std::string label) {
  InvariantRecord r;
  r.module = std::move(label);
  r.pdim = res.length();
  r.grade = grade(res);
  r.perfect = r.grade == r.pdim;
  return r;
}

}  // namespace

InvariantRecord PosetAnalysis::simple_record(Element x) {
  if (!simple_rec_[x]) simple_rec_[x] = record_of(simple_resolution(x), label("S", poset_, x));
  return *simple_rec_[x];
}

InvariantRecord PosetAnalysis::injective_record(Element x) {
  if (!injective_rec_[x]) injective_rec_[x] = record_of(injective_resolution(x), label("I", poset_, x));
  return *injective_rec_[x];
}

const Profile& PosetAnalysis::regular_profile() {
  if (!profile_) {
    std::vector<ChainComplex> res;
    for (Element x = 0; x < poset_.size(); ++x) res.push_back(simple_resolution(x));
    profile_ = regular_coresolution_profile(res);
  }
  return *profile_;
}

std::vector<std::pair<std::size_t, Element>> PosetAnalysis::profile_summands() {
  std::vector<std::pair<std::size_t, Element>> out;
  const auto& prof = regular_profile();
  for (std::size_t i = 0; i < prof.size(); ++i) {
    for (Element x = 0; x < prof[i].size(); ++x) {
      if (prof[i][x] > 0) out.emplace_back(i, x);
    }
  }
  return out;
}

bool is_perfect(const PosetRep& m) {
  if (m.is_zero()) throw ZeroModule();
  const auto res = minimal_projective_resolution(m);
  return grade(res) == res.length();
}

InvariantRecord invariant_record(const PosetRep& m, std::string label) {
  if (m.is_zero()) throw ZeroModule();
  return record_of(minimal_projective_resolution(m), std::move(label));
}

// ------------------------------------------------------------------ regularity

Verdict<std::string> is_auslander_regular(PosetAnalysis& a) {
  const Poset& p = a.poset();
  auto verdict = Verdict<std::string>::yes();
  for (const auto& [i, y] : a.profile_summands()) {
    const auto rec = a.injective_record(y);
    if (rec.pdim > i) {
      verdict = Verdict<std::string>::no(rec.module + " occurs in degree " + std::to_string(i) + " with pdim " +
                                         std::to_string(rec.pdim));
      break;
    }
  }
  bool simples_match = true;
  for (Element x = 0; x < p.size() && simples_match; ++x) {
    simples_match = a.simple_record(x).grade == a.injective_record(x).pdim;
  }
  if (simples_match != verdict.holds) {
    throw InternalInconsistency("Auslander regularity tests disagree");
  }
  return verdict;
}

Verdict<std::string> is_auslander_regular(const Poset& p) {
  PosetAnalysis a(p);
  return is_auslander_regular(a);
}

RightDiagonal is_right_diagonal(PosetAnalysis& a) {
  RightDiagonal out;
  for (const auto& [i, y] : a.profile_summands()) {
    const auto rec = a.injective_record(y);
    if (rec.pdim != i) {
      out.verdict = Verdict<std::string>::no(rec.module + " occurs in degree " + std::to_string(i) + " with pdim " +
                                             std::to_string(rec.pdim));
      break;
    }
  }
  if (!is_auslander_regular(a)) {
    out.advisory = true;
    return out;
  }
  bool simples_perfect = true;
  for (Element x = 0; x < a.poset().size() && simples_perfect; ++x) simples_perfect = a.simple_record(x).perfect;
  if (simples_perfect != out.verdict.holds) throw InternalInconsistency("right diagonal tests disagree");
  return out;
}

RightDiagonal is_right_diagonal(const Poset& p) {
  PosetAnalysis a(p);
  return is_right_diagonal(a);
}

Verdict<std::string> pmic_by_theorem(PosetAnalysis& a) {
  const Poset& p = a.poset();
  if (auto ar = is_auslander_regular(a); !ar) return Verdict<std::string>::no("not Auslander regular: " + *ar.witness);
  for (Element x = 0; x < p.size(); ++x) {
    if (const auto r = a.simple_record(x); !r.perfect) return Verdict<std::string>::no(imperfect(r));
  }
  for (Element x = 0; x < p.size(); ++x) {
    if (const auto r = a.injective_record(x); !r.perfect) return Verdict<std::string>::no(imperfect(r));
  }
  return Verdict<std::string>::yes();
}

Verdict<std::string> pmic_by_theorem(const Poset& p) {
  PosetAnalysis a(p);
  return pmic_by_theorem(a);
}

// ------------------------------------------------------------------ purity

bool pure_by_double_ext(const PosetRep& m) {
  const auto res = minimal_projective_resolution(m);
  const std::size_t g = grade(res);
  for (std::size_t v = 0; v <= res.length(); ++v) {
    if (v == g) continue;
    const PosetRep e = ext_as_opposite_module(res, v);
    if (e.is_zero()) continue;
    if (ext_regular_dim(minimal_projective_resolution(e), v) > 0) return false;
  }
  return true;
}

bool is_pure_module_bjork(const PosetRep& m) {
  PosetAnalysis a(m.poset(), m.field());
  if (!is_auslander_regular(a)) throw HypothesisNotMet("the incidence algebra is not Auslander regular");
  return pure_by_double_ext(m);
}

Verdict<std::string> pmic_by_bjork(PosetAnalysis& a) {
  const Poset& p = a.poset();
  if (!is_auslander_regular(a)) throw HypothesisNotMet("the incidence algebra is not Auslander regular");
  std::vector<std::optional<bool>> pure(p.size());
  for (const auto& [i, y] : a.profile_summands()) {
    const auto rec = a.injective_record(y);
    if (rec.grade != i) {
      return Verdict<std::string>::no(rec.module + " occurs in degree " + std::to_string(i) + " with grade " +
                                      std::to_string(rec.grade));
    }
    if (!pure[y]) pure[y] = pure_by_double_ext(injective(p, y, a.field()));
    if (!*pure[y]) return Verdict<std::string>::no(rec.module + " is not pure");
  }
  return Verdict<std::string>::yes();
}

Verdict<std::string> pmic_by_bjork(const Poset& p) {
  PosetAnalysis a(p);
  return pmic_by_bjork(a);
}

namespace {

using Vec = std::uint32_t;

// Reduced echelon basis over F_2, pivot = lowest set bit.
std::vector<Vec> echelon(std::vector<Vec> vs) {
  std::vector<Vec> basis;
  for (Vec v : vs) {
    for (const Vec b : basis) {
      if (v & (b & -b)) v ^= b;
    }
    if (v == 0) continue;
    for (Vec& b : basis) {
      if (b & (v & -v)) b ^= v;
    }
    basis.push_back(v);
  }
  return basis;
}

// Every subspace of F_2^q, as reduced bases.
void for_each_subspace(std::size_t q, std::size_t c, std::vector<Vec>& rows,
                       const std::function<void(const std::vector<Vec>&)>& emit) {
  if (c == q) {
    emit(rows);
    return;
  }
  rows.push_back(Vec{1} << c);
  for_each_subspace(q, c + 1, rows, emit);
  rows.pop_back();
  const std::size_t r = rows.size();
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << r); ++pattern) {
    for (std::size_t k = 0; k < r; ++k) {
      if ((pattern >> k) & 1U) rows[k] |= Vec{1} << c;
    }
    for_each_subspace(q, c + 1, rows, emit);
    for (std::size_t k = 0; k < r; ++k) rows[k] &= ~(Vec{1} << c);
  }
}

}  // namespace

Verdict<std::string> brute_force_purity(const PosetRep& m, std::size_t dim_cap) {
  if (m.total_dim() > dim_cap) {
    throw DimCapExceeded("total dimension " + std::to_string(m.total_dim()) + " exceeds cap " + std::to_string(dim_cap));
  }
  if (m.is_zero()) throw ZeroModule();
  const Field f2 = Field::prime(2);
  const PosetRep m2 = m.change_field(f2);
  const Poset& p = m2.poset();
  const std::size_t n = p.size();
  const std::size_t g = grade(m2);

  // Cover maps as column bitmasks.
  std::vector<std::vector<Vec>> columns(p.covers().size());
  for (std::size_t i = 0; i < p.covers().size(); ++i) {
    const Mat& a = m2.cover_map(i);
    columns[i].assign(a.cols(), 0);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      for (std::size_t r = 0; r < a.rows(); ++r) {
        if (!a(r, c).is_zero()) columns[i][c] |= Vec{1} << r;
      }
    }
  }
  auto apply = [&](std::size_t i, Vec v) {
    Vec out = 0;
    for (std::size_t c = 0; v != 0; ++c, v >>= 1) {
      if (v & 1U) out ^= columns[i][c];
    }
    return out;
  };

  std::vector<std::vector<Vec>> chosen(n);
  std::optional<std::string> witness;
  std::size_t visited = 0;
  std::function<void(Element)> descend = [&](Element y) {
    if (witness) return;
    if (y == n) {
      std::size_t total = 0;
      for (const auto& b : chosen) total += b.size();
      if (total == 0) return;
      if (++visited > 2'000'000) throw DimCapExceeded("too many submodules to enumerate");
      std::vector<Mat> bases;
      for (Element x = 0; x < n; ++x) {
        Mat b(m2.dim(x), chosen[x].size(), f2);
        for (std::size_t t = 0; t < chosen[x].size(); ++t) {
          for (std::size_t r = 0; r < m2.dim(x); ++r) {
            if ((chosen[x][t] >> r) & 1U) b(r, t) = Scalar::one(f2);
          }
        }
        bases.push_back(std::move(b));
      }
      const std::size_t h = grade(subrepresentation(m2, bases).module);
      if (h != g) {
        std::string dims;
        for (Element x = 0; x < n; ++x) dims += (x ? "," : "") + std::to_string(chosen[x].size());
        witness = "submodule with dimension vector (" + dims + ") has grade " + std::to_string(h) +
                  ", module has grade " + std::to_string(g);
      }
      return;
    }
    std::vector<Vec> required;
    for (const Element x : p.lower_covers(y)) {
      const std::size_t i = *p.cover_index(x, y);
      for (const Vec v : chosen[x]) required.push_back(apply(i, v));
    }
    const auto w = echelon(required);
    Vec pivots = 0;
    for (const Vec b : w) pivots |= b & -b;
    std::vector<std::size_t> free_coords;
    for (std::size_t r = 0; r < m2.dim(y); ++r) {
      if (!((pivots >> r) & 1U)) free_coords.push_back(r);
    }
    std::vector<Vec> rows;
    for_each_subspace(free_coords.size(), 0, rows, [&](const std::vector<Vec>& v) {
      if (witness) return;
      chosen[y] = w;
      for (const Vec b : v) {
        Vec lifted = 0;
        for (std::size_t t = 0; t < free_coords.size(); ++t) {
          if ((b >> t) & 1U) lifted |= Vec{1} << free_coords[t];
        }
        chosen[y].push_back(lifted);
      }
      descend(y + 1);
    });
    chosen[y].clear();
  };
  descend(0);
  if (witness) return Verdict<std::string>::no(*witness);
  return Verdict<std::string>::yes();
}

// ------------------------------------------------------------------ two-sided checks

Verdict<std::string> two_sided_pmic(const Poset& p) {
  if (auto v = pmic_by_theorem(p); !v) return v;
  if (auto v = pmic_by_theorem(p.opposite()); !v) return Verdict<std::string>::no("opposite: " + *v.witness);
  return Verdict<std::string>::yes();
}

Verdict<std::string> perfect_both_sides_all(PosetAnalysis& a, PosetAnalysis& op) {
  for (auto* side : {&a, &op}) {
    const std::string prefix = side == &a ? "" : "opposite: ";
    for (Element x = 0; x < side->poset().size(); ++x) {
      if (const auto r = side->simple_record(x); !r.perfect) return Verdict<std::string>::no(prefix + imperfect(r));
    }
    for (Element x = 0; x < side->poset().size(); ++x) {
      if (const auto r = side->injective_record(x); !r.perfect) return Verdict<std::string>::no(prefix + imperfect(r));
    }
  }
  return Verdict<std::string>::yes();
}

Verdict<std::string> perfect_both_sides_all(const Poset& p) {
  PosetAnalysis a(p);
  PosetAnalysis op(p.opposite());
  return perfect_both_sides_all(a, op);
}

Verdict<std::string> pmic_necessary(PosetAnalysis& a) {
  const Poset& p = a.poset();
  std::vector<bool> checked(p.size(), false);
  for (const auto& [i, y] : a.profile_summands()) {
    const auto rec = a.injective_record(y);
    if (rec.grade != i) {
      return Verdict<std::string>::no(rec.module + " occurs in degree " + std::to_string(i) + " with grade " +
                                      std::to_string(rec.grade));
    }
    if (checked[y]) continue;
    // Submodules of I(y) are the thin modules on up-closed parts of the
    // down-set of y: complements of its order ideals.
    const ElementSet below = p.down_set(y);
    const auto elems = below.to_vector();
    const Poset sub = p.induced(below);
    for (const auto ideal : all_order_ideals(sub)) {
      ElementSet support;
      for (Element k = 0; k < elems.size(); ++k) {
        if (!ideal.contains(k)) support.insert(elems[k]);
      }
      if (support.empty() || support == below) continue;
      const std::size_t h = grade(thin_module(p, support, a.field()));
      if (h != i) {
        return Verdict<std::string>::no("submodule of " + rec.module + " on " + format_set(p, support) +
                                        " has grade " + std::to_string(h) + " in degree " + std::to_string(i));
      }
    }
    checked[y] = true;
  }
  return Verdict<std::string>::yes();
}

ConjectureReport conjecture_scan(std::size_t max_n, std::size_t workers) {
  std::vector<Lattice> all;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto& l : enumerate_lattices(n)) all.push_back(std::move(l));
  }
  struct Row {
    bool distributive = false;
    bool all_perfect = false;
    bool pmic = false;
  };
  const auto rows = parallel_map(all.size(), workers, [&](std::size_t k) {
    const Lattice& l = all[k];
    Row row;
    row.distributive = is_distributive(l).holds;
    PosetAnalysis a(l.poset());
    PosetAnalysis op(l.poset().opposite());
    row.all_perfect = perfect_both_sides_all(a, op).holds;
    bool one_side = true;
    for (Element x = 0; x < l.size() && one_side; ++x) {
      one_side = a.simple_record(x).perfect && a.injective_record(x).perfect;
    }
    row.pmic = one_side && pmic_necessary(a).holds;
    if (row.distributive && row.pmic != pmic_by_theorem(a).holds) {
      throw InternalInconsistency("PMIC tests disagree on a distributive lattice");
    }
    return row;
  });
  ConjectureReport report;
  report.max_n = max_n;
  report.lattices = all.size();
  for (std::size_t k = 0; k < all.size(); ++k) {
    report.distributive += rows[k].distributive;
    report.all_perfect += rows[k].all_perfect;
    report.pmic += rows[k].pmic;
    if (rows[k].pmic && !rows[k].distributive) {
      report.counterexamples.push_back(poset_to_json(all[k].poset(), "lattice", -1));
    }
  }
  return report;
}

// ------------------------------------------------------------------ reports

AlgebraReport build_report(const Poset& p, const std::string& name, Field field) {
  AlgebraReport r;
  r.name = name;
  r.size = p.size();
  r.labels = p.names();
  auto as_l = as_lattice(p);
  if (const auto* l = std::get_if<Lattice>(&as_l)) {
    r.lattice = true;
    const auto d = is_distributive(*l);
    r.distributive = d.holds;
    if (!d) {
      r.witnesses["distributive"] = describe_triple(p, *d.witness);
    }
  } else {
    r.witnesses["lattice"] = describe(p, std::get<NotALattice>(as_l));
  }
  PosetAnalysis a(p, field);
  PosetAnalysis op(p.opposite(), field);
  for (Element x = 0; x < p.size(); ++x) {
    r.simples.push_back(a.simple_record(x));
    r.injectives.push_back(a.injective_record(x));
  }
  r.profile = a.regular_profile();
  const auto ar = is_auslander_regular(a);
  r.auslander_regular = ar.holds;
  if (!ar) r.witnesses["auslander_regular"] = *ar.witness;
  const auto rd = is_right_diagonal(a);
  r.right_diagonal = rd.verdict.holds;
  r.right_diagonal_advisory = rd.advisory;
  if (!rd.verdict) r.witnesses["right_diagonal"] = *rd.verdict.witness;
  if (ar) {
    const auto left = pmic_by_theorem(a);
    const auto right = pmic_by_theorem(op);
    r.pmic = left.holds;
    r.pmic_op = right.holds;
    r.two_sided_pmic = left.holds && right.holds;
    if (!left) r.witnesses["pmic"] = *left.witness;
    if (!right) r.witnesses["pmic_op"] = *right.witness;
    if (!left || !right) r.witnesses["two_sided_pmic"] = !left ? *left.witness : "opposite: " + *right.witness;
  } else {
    for (const char* key : {"pmic", "pmic_op", "two_sided_pmic"}) {
      r.witnesses[key] = "not applicable (fails Auslander regularity)";
    }
  }
  const auto both = perfect_both_sides_all(a, op);
  r.perfect_both_sides = both.holds;
  if (!both) r.witnesses["perfect_both_sides"] = *both.witness;
  return r;
}

namespace {

nlohmann::ordered_json record_json(const InvariantRecord& r) {
  return {{"module", r.module}, {"pdim", r.pdim}, {"grade", r.grade}, {"perfect", r.perfect}};
}

nlohmann::ordered_json optional_json(const std::optional<bool>& b) {
  if (!b) return nullptr;
  return *b;
}

std::string optional_text(const std::optional<bool>& b) {
  if (!b) return "not applicable";
  return *b ? "true" : "false";
}

}  // namespace

std::string report_to_json(const AlgebraReport& r, int indent) {
  nlohmann::ordered_json doc;
  doc["name"] = r.name;
  doc["size"] = r.size;
  doc["lattice"] = r.lattice;
  doc["distributive"] = optional_json(r.distributive);
  doc["auslander_gorenstein"] = r.auslander_regular;
  doc["auslander_regular"] = r.auslander_regular;
  doc["right_diagonal"] = r.right_diagonal;
  doc["right_diagonal_advisory"] = r.right_diagonal_advisory;
  doc["pmic"] = optional_json(r.pmic);
  doc["pmic_op"] = optional_json(r.pmic_op);
  doc["two_sided_pmic"] = optional_json(r.two_sided_pmic);
  doc["perfect_both_sides"] = r.perfect_both_sides;
  auto& simples = doc["simples"] = nlohmann::ordered_json::array();
  for (const auto& s : r.simples) simples.push_back(record_json(s));
  auto& injectives = doc["injectives"] = nlohmann::ordered_json::array();
  for (const auto& s : r.injectives) injectives.push_back(record_json(s));
  auto& profile = doc["profile"] = nlohmann::ordered_json::array();
  for (const auto& row : r.profile) {
    nlohmann::ordered_json term = nlohmann::ordered_json::array();
    for (std::size_t x = 0; x < row.size(); ++x) {
      if (row[x] > 0) term.push_back({{"module", "I(" + r.labels[x] + ")"}, {"multiplicity", row[x]}});
    }
    profile.push_back(term);
  }
  doc["witnesses"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.witnesses) doc["witnesses"][k] = v;
  return doc.dump(indent);
}

std::string report_to_text(const AlgebraReport& r) {
  std::ostringstream os;
  auto flag = [&](const std::string& key, const std::string& value) {
    os << key << ": " << value;
    if (const auto it = r.witnesses.find(key); it != r.witnesses.end() && value != "true") os << "  [" << it->second << "]";
    os << "\n";
  };
  os << r.name << " (" << r.size << " elements)\n";
  flag("lattice", r.lattice ? "true" : "false");
  if (r.lattice) flag("distributive", optional_text(r.distributive));
  flag("auslander_regular", r.auslander_regular ? "true" : "false");
  flag("right_diagonal", std::string(r.right_diagonal ? "true" : "false") + (r.right_diagonal_advisory ? " (advisory)" : ""));
  flag("pmic", optional_text(r.pmic));
  flag("pmic_op", optional_text(r.pmic_op));
  flag("two_sided_pmic", optional_text(r.two_sided_pmic));
  flag("perfect_both_sides", r.perfect_both_sides ? "true" : "false");
  os << "profile:\n";
  for (std::size_t i = 0; i < r.profile.size(); ++i) {
    os << "  I^" << i << " =";
    bool first = true;
    for (std::size_t x = 0; x < r.profile[i].size(); ++x) {
      if (r.profile[i][x] == 0) continue;
      os << (first ? " " : " + ") << "I(" << r.labels[x] << ")";
      if (r.profile[i][x] > 1) os << "^" << r.profile[i][x];
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace incalg
