#include "incalg/poset.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <set>

#include "incalg/errors.hpp"

namespace incalg {

namespace {

// Reindex the bits of `s` through `image` (old index -> new index).
ElementSet remap(ElementSet s, const std::vector<Element>& image) {
  ElementSet out;
  for (const Element x : s) out.insert(image[x]);
  return out;
}

}  // namespace

Poset::Poset() : d_(std::make_shared<const Data>()) {}

Poset Poset::from_covers(const std::vector<std::string>& names,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  std::map<std::string, Element> position;
  for (Element i = 0; i < names.size(); ++i) {
    if (!position.emplace(names[i], i).second) throw Error("duplicate element label '" + names[i] + "'");
  }
  std::vector<Cover> relations;
  relations.reserve(covers.size());
  for (const auto& [a, b] : covers) {
    const auto ia = position.find(a);
    const auto ib = position.find(b);
    if (ia == position.end()) throw UnknownElement("unknown element '" + a + "'");
    if (ib == position.end()) throw UnknownElement("unknown element '" + b + "'");
    relations.emplace_back(ia->second, ib->second);
  }
  return from_relations(names, relations);
}

Poset Poset::from_relations(const std::vector<std::string>& names, const std::vector<Cover>& relations) {
  const std::size_t n = names.size();
  if (n > kMaxPosetSize) throw SizeCapExceeded(n, kMaxPosetSize);
  {
    std::set<std::string> seen;
    for (const auto& s : names) {
      if (!seen.insert(s).second) throw Error("duplicate element label '" + s + "'");
    }
  }
  std::vector<ElementSet> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [a, b] : relations) {
    if (a >= n || b >= n) throw UnknownElement("relation references element outside the carrier");
    if (a == b) throw CycleDetected("element '" + names[a] + "' is related to itself");
    if (!out[a].contains(b)) {
      out[a].insert(b);
      ++indegree[b];
    }
  }
  // Kahn's algorithm, always releasing the earliest declared element.
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<Element> order;
  order.reserve(n);
  while (!ready.empty()) {
    const Element x = ready.top();
    ready.pop();
    order.push_back(x);
    for (const Element y : out[x]) {
      if (--indegree[y] == 0) ready.push(y);
    }
  }
  if (order.size() != n) {
    for (Element i = 0; i < n; ++i) {
      if (indegree[i] > 0) throw CycleDetected("cycle through element '" + names[i] + "'");
    }
  }
  std::vector<Element> pos(n);
  for (Element k = 0; k < n; ++k) pos[order[k]] = k;

  std::vector<ElementSet> up(n);
  std::vector<std::string> sorted_names(n);
  for (Element k = n; k-- > 0;) {
    const Element x = order[k];
    sorted_names[k] = names[x];
    ElementSet s = ElementSet::singleton(k);
    for (const Element y : out[x]) s |= up[pos[y]];
    up[k] = s;
  }
  return from_up_sets(std::move(sorted_names), std::move(up));
}

Poset Poset::from_up_sets(std::vector<std::string> names, std::vector<ElementSet> up) {
  const std::size_t n = names.size();
  if (n > kMaxPosetSize) throw SizeCapExceeded(n, kMaxPosetSize);
  if (up.size() != n) throw DimensionMismatch("order rows do not match element count");
  auto d = std::make_shared<Data>();
  d->down.assign(n, ElementSet{});
  for (Element x = 0; x < n; ++x) {
    if (!up[x].contains(x)) throw Error("order is not reflexive at '" + names[x] + "'");
    if (!up[x].is_subset_of(ElementSet::full(n))) throw Error("order references elements outside the carrier");
    for (const Element y : up[x]) {
      if (y < x) throw Error("elements are not topologically indexed");
      if (!up[y].is_subset_of(up[x])) throw Error("order is not transitive at '" + names[x] + "'");
      d->down[y].insert(x);
    }
  }
  d->upper.assign(n, ElementSet{});
  d->lower.assign(n, ElementSet{});
  d->cover_slot.assign(n * n, -1);
  for (Element x = 0; x < n; ++x) {
    const ElementSet above = up[x] - ElementSet::singleton(x);
    for (const Element y : above) {
      if ((above & d->down[y]) == ElementSet::singleton(y)) {
        d->upper[x].insert(y);
        d->lower[y].insert(x);
        d->cover_slot[x * n + y] = static_cast<std::int32_t>(d->covers.size());
        d->covers.emplace_back(x, y);
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (!d->index.emplace(names[x], x).second) throw Error("duplicate element label '" + names[x] + "'");
  }
  d->names = std::move(names);
  d->up = std::move(up);
  return Poset(std::move(d));
}

std::optional<Element> Poset::index_of(const std::string& label) const {
  const auto it = d_->index.find(label);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

Element Poset::element(const std::string& label) const {
  const auto x = index_of(label);
  if (!x) throw UnknownElement("unknown element '" + label + "'");
  return *x;
}

std::optional<std::size_t> Poset::cover_index(Element x, Element y) const {
  const auto slot = d_->cover_slot[x * size() + y];
  if (slot < 0) return std::nullopt;
  return static_cast<std::size_t>(slot);
}

ElementSet Poset::minimal_elements(ElementSet s) const {
  ElementSet out;
  for (const Element x : s) {
    if ((d_->down[x] & s) == ElementSet::singleton(x)) out.insert(x);
  }
  return out;
}

ElementSet Poset::maximal_elements(ElementSet s) const {
  ElementSet out;
  for (const Element x : s) {
    if ((d_->up[x] & s) == ElementSet::singleton(x)) out.insert(x);
  }
  return out;
}

bool Poset::is_antichain(ElementSet s) const { return minimal_elements(s) == s; }

Poset Poset::opposite() const {
  const std::size_t n = size();
  std::vector<Element> image(n);
  for (Element x = 0; x < n; ++x) image[x] = n - 1 - x;
  std::vector<std::string> names(n);
  std::vector<ElementSet> up(n);
  for (Element x = 0; x < n; ++x) {
    names[image[x]] = d_->names[x];
    up[image[x]] = remap(d_->down[x], image);
  }
  return from_up_sets(std::move(names), std::move(up));
}

Poset Poset::induced(ElementSet s) const {
  const auto elems = s.to_vector();
  std::vector<Element> image(size(), 0);
  for (Element k = 0; k < elems.size(); ++k) image[elems[k]] = k;
  std::vector<std::string> names;
  std::vector<ElementSet> up;
  for (const Element x : elems) {
    names.push_back(d_->names[x]);
    up.push_back(remap(d_->up[x] & s, image));
  }
  return from_up_sets(std::move(names), std::move(up));
}

Poset Poset::permuted(const std::vector<Element>& order) const {
  const std::size_t n = size();
  if (order.size() != n) throw DimensionMismatch("permutation has wrong length");
  std::vector<Element> image(n, n);
  for (Element k = 0; k < n; ++k) {
    if (order[k] >= n || image[order[k]] != n) throw Error("not a permutation");
    image[order[k]] = k;
  }
  std::vector<std::string> names(n);
  std::vector<ElementSet> up(n);
  for (Element k = 0; k < n; ++k) {
    names[k] = d_->names[order[k]];
    up[k] = remap(d_->up[order[k]], image);
  }
  return from_up_sets(std::move(names), std::move(up));
}

Poset Poset::with_index_names() const {
  std::vector<std::string> names(size());
  for (Element x = 0; x < size(); ++x) names[x] = std::to_string(x);
  return from_up_sets(std::move(names), d_->up);
}

bool operator==(const Poset& a, const Poset& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->names == b.d_->names && a.d_->up == b.d_->up;
}

// ------------------------------------------------------------------ queries

ElementSet upper_covers(const Poset& p, Element x) { return p.upper_covers(x); }

ElementSet order_ideal_generated(const Poset& p, ElementSet a) {
  ElementSet out;
  for (const Element x : a) out |= p.down_set(x);
  return out;
}

std::vector<ElementSet> all_antichains(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<ElementSet> out;
  // Extend with elements of larger index than everything chosen so far.
  std::function<void(Element, ElementSet, ElementSet)> grow = [&](Element from, ElementSet chosen,
                                                                   ElementSet blocked) {
    out.push_back(chosen);
    for (Element x = from; x < n; ++x) {
      if (blocked.contains(x)) continue;
      grow(x + 1, chosen | ElementSet::singleton(x), blocked | p.up_set(x) | p.down_set(x));
    }
  };
  grow(0, ElementSet{}, ElementSet{});
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  return out;
}

std::vector<ElementSet> all_order_ideals(const Poset& p) {
  auto ideals = all_antichains(p);
  for (auto& a : ideals) a = order_ideal_generated(p, a);
  std::sort(ideals.begin(), ideals.end(), [](ElementSet a, ElementSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  return ideals;
}

bool is_upward_linear(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    if (p.upper_covers(x).size() > 1) return false;
  }
  return true;
}

bool is_disjoint_union_of_chains(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    if (p.upper_covers(x).size() > 1 || p.lower_covers(x).size() > 1) return false;
  }
  return true;
}

std::optional<std::vector<Element>> are_isomorphic(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n || p.covers().size() != q.covers().size()) return std::nullopt;
  using Signature = std::array<std::size_t, 4>;
  auto signature = [](const Poset& r, Element x) {
    return Signature{r.down_set(x).size(), r.up_set(x).size(), r.lower_covers(x).size(), r.upper_covers(x).size()};
  };
  std::vector<Signature> sp(n);
  std::vector<Signature> sq(n);
  for (Element x = 0; x < n; ++x) {
    sp[x] = signature(p, x);
    sq[x] = signature(q, x);
  }
  {
    auto a = sp;
    auto b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<Element> image(n);
  ElementSet used;
  // Depth-first in index order, trying images in increasing order: the first
  // complete assignment found is the lexicographically least.
  std::function<bool(Element)> extend = [&](Element x) -> bool {
    if (x == n) return true;
    for (Element c = 0; c < n; ++c) {
      if (used.contains(c) || sq[c] != sp[x]) continue;
      bool ok = true;
      for (Element a = 0; a < x && ok; ++a) {
        ok = p.leq(a, x) == q.leq(image[a], c) && p.leq(x, a) == q.leq(c, image[a]);
      }
      if (!ok) continue;
      image[x] = c;
      used.insert(c);
      if (extend(x + 1)) return true;
      used.erase(c);
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

std::vector<std::pair<std::string, std::string>> transitive_reduction(const Poset& p) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(p.covers().size());
  for (const auto& [x, y] : p.covers()) out.emplace_back(p.name(x), p.name(y));
  return out;
}

}  // namespace incalg
