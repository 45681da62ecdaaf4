#include "incalg/lattice.hpp"

#include <algorithm>

#include "incalg/errors.hpp"

namespace incalg {

Element Lattice::join_of(ElementSet s) const {
  Element acc = bottom();
  for (const Element x : s) acc = join(acc, x);
  return acc;
}

Element Lattice::meet_of(ElementSet s) const {
  Element acc = top();
  for (const Element x : s) acc = meet(acc, x);
  return acc;
}

std::variant<Lattice, NotALattice> as_lattice(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return NotALattice{0, 0, true, true};
  auto d = std::make_shared<Lattice::Data>();
  d->poset = p;
  d->join.assign(n * n, 0);
  d->meet.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      // Indices are topological, so a least bound, if any, has the smallest
      // index among the upper bounds (and dually for meets).
      const ElementSet upper = p.up_set(x) & p.up_set(y);
      if (upper.empty() || !upper.is_subset_of(p.up_set(upper.first()))) return NotALattice{x, y, true};
      const ElementSet lower = p.down_set(x) & p.down_set(y);
      if (lower.empty()) return NotALattice{x, y, false};
      const auto greatest = static_cast<Element>(63 - std::countl_zero(lower.bits()));
      if (!lower.is_subset_of(p.down_set(greatest))) return NotALattice{x, y, false};
      d->join[x * n + y] = d->join[y * n + x] = upper.first();
      d->meet[x * n + y] = d->meet[y * n + x] = greatest;
    }
  }
  d->bottom = 0;
  d->top = n - 1;
  return Lattice(std::move(d));
}

std::string describe(const Poset& p, const NotALattice& w) {
  if (w.empty) return "the empty poset has no minimum";
  return "'" + p.name(w.x) + "' and '" + p.name(w.y) + "' have no " +
         (w.missing_join ? "least upper bound" : "greatest lower bound");
}

Lattice require_lattice(const Poset& p) {
  auto r = as_lattice(p);
  if (auto* w = std::get_if<NotALattice>(&r)) throw NotALatticeError("not a lattice: " + describe(p, *w));
  return std::get<Lattice>(std::move(r));
}

Verdict<Triple> is_distributive(const Lattice& l) {
  const std::size_t n = l.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (l.join(l.meet(x, y), z) != l.meet(l.join(x, z), l.join(y, z))) return Verdict<Triple>::no({x, y, z});
      }
    }
  }
  return Verdict<Triple>::yes();
}

Poset join_irreducibles(const Lattice& l) {
  const std::size_t n = l.size();
  ElementSet keep;
  for (Element y = 0; y < n; ++y) {
    if (y == l.bottom()) continue;
    bool irreducible = true;
    for (Element a = 0; a < n && irreducible; ++a) {
      for (Element b = 0; b < n && irreducible; ++b) {
        if (l.join(a, b) == y && a != y && b != y) irreducible = false;
      }
    }
    if (irreducible) keep.insert(y);
  }
  return l.poset().induced(keep);
}

// ------------------------------------------------------------------ antichains

Antichain::Antichain(Lattice l, ElementSet elements)
    : lattice_(std::move(l)), elements_(elements), ordered_(elements.to_vector()) {
  if (!elements.is_subset_of(lattice_.poset().carrier())) throw NotAnAntichain("element outside the lattice");
  if (!lattice_.poset().is_antichain(elements)) {
    throw NotAnAntichain(format_set(lattice_.poset(), elements) + " contains comparable elements");
  }
}

ElementSet Antichain::subset(std::uint64_t mask) const {
  ElementSet s;
  for (std::size_t k = 0; k < ordered_.size(); ++k) {
    if ((mask >> k) & 1U) s.insert(ordered_[k]);
  }
  return s;
}

namespace {

// Subsets of the antichain as position masks, by size then mask.
std::vector<std::uint64_t> subset_masks(std::size_t k) {
  std::vector<std::uint64_t> masks(std::size_t{1} << k);
  for (std::uint64_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  return masks;
}

}  // namespace

Verdict<SubsetPair> is_strong_antichain(const Antichain& c) {
  const Lattice& l = c.lattice();
  const auto masks = subset_masks(c.size());
  std::vector<Element> joins(masks.size());
  for (std::uint64_t m = 0; m < masks.size(); ++m) joins[m] = l.join_of(c.subset(m));
  auto fails = [&](std::uint64_t a, std::uint64_t b) { return l.poset().leq(joins[a], joins[b]) && (a & ~b) != 0; };
  for (const bool same_size : {true, false}) {
    for (const auto a : masks) {
      for (const auto b : masks) {
        if (same_size != (std::popcount(a) == std::popcount(b))) continue;
        if (fails(a, b)) return Verdict<SubsetPair>::no({c.subset(a), c.subset(b)});
      }
    }
  }
  return Verdict<SubsetPair>::yes();
}

Verdict<ElementSet> boolean_reformulation(const Antichain& c) {
  const Lattice& l = c.lattice();
  const std::size_t k = c.size();
  for (const auto s : subset_masks(k)) {
    if (static_cast<std::size_t>(std::popcount(s)) + 2 > k) continue;
    Element rhs = l.top();
    for (std::size_t i = 0; i < k; ++i) {
      if ((s >> i) & 1U) continue;
      rhs = l.meet(rhs, l.join_of(c.subset(s | (std::uint64_t{1} << i))));
    }
    if (l.join_of(c.subset(s)) != rhs) return Verdict<ElementSet>::no(c.subset(s));
  }
  return Verdict<ElementSet>::yes();
}

Verdict<SubsetPair> is_boolean_antichain(const Antichain& c) {
  const Lattice& l = c.lattice();
  const auto masks = subset_masks(c.size());
  std::vector<Element> joins(masks.size());
  for (std::uint64_t m = 0; m < masks.size(); ++m) joins[m] = l.join_of(c.subset(m));
  auto verdict = Verdict<SubsetPair>::yes();
  for (const auto a : masks) {
    for (const auto b : masks) {
      if (l.meet(joins[a], joins[b]) != joins[a & b]) {
        verdict = Verdict<SubsetPair>::no({c.subset(a), c.subset(b)});
        break;
      }
    }
    if (!verdict) break;
  }
  if (verdict.holds != boolean_reformulation(c).holds) {
    throw InternalInconsistency("Boolean antichain tests disagree on " + format_set(l.poset(), c.elements()));
  }
  return verdict;
}

Antichain antichain_of_injective(const Lattice& l, Element x) {
  const Poset& p = l.poset();
  return Antichain(l, p.minimal_elements(p.carrier() - p.interval(l.bottom(), x)));
}

Verdict<Cover> cover_monotone(const Lattice& l) {
  const Poset& p = l.poset();
  for (const auto& [a, b] : p.covers()) {
    if (p.upper_covers(a).size() < p.upper_covers(b).size()) return Verdict<Cover>::no({a, b});
  }
  return Verdict<Cover>::yes();
}

bool is_divisor_lattice(const Lattice& l) {
  return is_distributive(l).holds && is_disjoint_union_of_chains(join_irreducibles(l));
}

Lattice ideal_lattice(const Poset& p) {
  const auto ideals = all_order_ideals(p);
  std::map<std::uint64_t, Element> position;
  std::vector<std::string> names;
  for (Element i = 0; i < ideals.size(); ++i) {
    position.emplace(ideals[i].bits(), i);
    names.push_back(format_set(p, ideals[i]));
  }
  std::vector<Cover> covers;
  for (Element i = 0; i < ideals.size(); ++i) {
    for (Element x = 0; x < p.size(); ++x) {
      if (ideals[i].contains(x)) continue;
      const auto it = position.find((ideals[i] | ElementSet::singleton(x)).bits());
      if (it != position.end()) covers.emplace_back(i, it->second);
    }
  }
  return require_lattice(Poset::from_relations(names, covers));
}

std::vector<Lattice> enumerate_lattices(std::size_t n, std::size_t cap) {
  if (n > cap) throw SizeCapExceeded(n, cap);
  std::vector<Lattice> out;
  for (const auto& p : enumerate_posets(n, std::max(n, kDefaultPosetCap))) {
    auto r = as_lattice(p);
    if (auto* l = std::get_if<Lattice>(&r)) out.push_back(std::move(*l));
  }
  return out;
}

std::string format_set(const Poset& p, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (const Element x : s) {
    if (!first) out += ",";
    out += p.name(x);
    first = false;
  }
  return out + "}";
}

std::string describe_triple(const Poset& p, const Triple& t) {
  const auto& x = p.name(t[0]);
  const auto& y = p.name(t[1]);
  const auto& z = p.name(t[2]);
  return "(" + x + " ∧ " + y + ") ∨ " + z + " differs from (" + x + " ∨ " + z + ") ∧ (" + y + " ∨ " + z + ")";
}

}  // namespace incalg
