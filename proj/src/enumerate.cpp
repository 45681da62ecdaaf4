#include "incalg/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <string>

#include "incalg/errors.hpp"

namespace incalg {

namespace {

using u128 = unsigned __int128;
using Rows = std::vector<std::uint64_t>;  // up-sets, topologically indexed

bool bit(std::uint64_t s, std::size_t i) { return (s >> i) & 1U; }

std::size_t triangle(std::size_t k) { return k * (k - 1) / 2; }

u128 prefix(u128 code, std::size_t len) { return len == 0 ? 0 : code >> (128 - len); }

struct Canonical {
  u128 code = 0;
  std::vector<Element> order;
};

// Stable colour refinement seeded with height and degree data. Colours are
// ranks of sorted keys whose first entry is the height, so listing colour
// classes in increasing order is always a topological order.
std::vector<int> refine_colours(const Rows& up) {
  const std::size_t n = up.size();
  Rows down(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      if (bit(up[x], y)) down[y] |= std::uint64_t{1} << x;
    }
  }
  Rows upper(n, 0);
  Rows lower(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint64_t above = up[x] & ~(std::uint64_t{1} << x);
    for (std::size_t y = x + 1; y < n; ++y) {
      if (bit(above, y) && (above & down[y]) == (std::uint64_t{1} << y)) {
        upper[x] |= std::uint64_t{1} << y;
        lower[y] |= std::uint64_t{1} << x;
      }
    }
  }
  std::vector<int> height(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t w = 0; w < x; ++w) {
      if (bit(down[x], w)) height[x] = std::max(height[x], height[w] + 1);
    }
  }

  std::vector<std::vector<int>> keys(n);
  for (std::size_t x = 0; x < n; ++x) {
    keys[x] = {height[x], std::popcount(down[x]), std::popcount(up[x]), std::popcount(lower[x]),
               std::popcount(upper[x])};
  }
  auto rank_keys = [&](std::vector<int>& colour) {
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t x = 0; x < n; ++x) {
      colour[x] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[x]) - sorted.begin());
    }
    return sorted.size();
  };
  std::vector<int> colour(n, 0);
  std::size_t classes = rank_keys(colour);
  for (;;) {
    auto collect = [&](std::uint64_t s, std::vector<int>& key, int separator) {
      key.push_back(separator);
      std::vector<int> part;
      for (std::size_t y = 0; y < n; ++y) {
        if (bit(s, y)) part.push_back(colour[y]);
      }
      std::sort(part.begin(), part.end());
      key.insert(key.end(), part.begin(), part.end());
    };
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<int> key{colour[x]};
      const std::uint64_t self = std::uint64_t{1} << x;
      collect(down[x] & ~self, key, -1);
      collect(up[x] & ~self, key, -2);
      collect(lower[x], key, -3);
      collect(upper[x], key, -4);
      keys[x] = std::move(key);
    }
    const std::size_t next = rank_keys(colour);
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

Canonical canonicalize(const Rows& up) {
  const std::size_t n = up.size();
  const auto colour = refine_colours(up);
  std::vector<int> slot_colour(colour.begin(), colour.end());
  std::sort(slot_colour.begin(), slot_colour.end());

  Canonical best;
  bool have_best = false;
  std::vector<Element> order(n);
  std::uint64_t used = 0;
  std::function<void(std::size_t, u128)> place = [&](std::size_t k, u128 code) {
    if (k == n) {
      if (!have_best || code < best.code) {
        best.code = code;
        best.order = order;
        have_best = true;
      }
      return;
    }
    for (Element x = 0; x < n; ++x) {
      if (colour[x] != slot_colour[k] || bit(used, x)) continue;
      u128 next = code;
      for (std::size_t i = 0; i < k; ++i) {
        if (bit(up[order[i]], x)) next |= u128{1} << (127 - (triangle(k) + i));
      }
      const std::size_t len = triangle(k + 1);
      if (have_best && prefix(next, len) > prefix(best.code, len)) continue;
      order[k] = x;
      used |= std::uint64_t{1} << x;
      place(k + 1, next);
      used &= ~(std::uint64_t{1} << x);
    }
  };
  place(0, 0);
  return best;
}

Rows rows_of(const Poset& p) {
  Rows up(p.size());
  for (Element x = 0; x < p.size(); ++x) up[x] = p.up_set(x).bits();
  return up;
}

Rows apply_order(const Rows& up, const std::vector<Element>& order) {
  const std::size_t n = up.size();
  std::vector<Element> image(n);
  for (std::size_t k = 0; k < n; ++k) image[order[k]] = k;
  Rows out(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t y = 0; y < n; ++y) {
      if (bit(up[order[k]], y)) out[k] |= std::uint64_t{1} << image[y];
    }
  }
  return out;
}

Poset poset_from_rows(const Rows& up) {
  std::vector<std::string> names(up.size());
  std::vector<ElementSet> sets(up.size());
  for (std::size_t x = 0; x < up.size(); ++x) {
    names[x] = std::to_string(x);
    sets[x] = ElementSet(up[x]);
  }
  return Poset::from_up_sets(std::move(names), std::move(sets));
}

CanonicalCode to_code(std::size_t n, u128 code) {
  return CanonicalCode{n, {static_cast<std::uint64_t>(code >> 64), static_cast<std::uint64_t>(code)}};
}

// Down-closed subsets of a raw order, as bitmasks.
std::vector<std::uint64_t> ideals_of(const Rows& up) {
  const std::size_t n = up.size();
  Rows down(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      if (bit(up[x], y)) down[y] |= std::uint64_t{1} << x;
    }
  }
  std::vector<std::uint64_t> out;
  std::function<void(std::size_t, std::uint64_t, std::uint64_t)> grow = [&](std::size_t from, std::uint64_t ideal,
                                                                            std::uint64_t blocked) {
    out.push_back(ideal);
    for (std::size_t x = from; x < n; ++x) {
      if (bit(blocked, x)) continue;
      grow(x + 1, ideal | down[x], blocked | up[x] | down[x]);
    }
  };
  grow(0, 0, 0);
  return out;
}

struct Catalog {
  std::mutex lock;
  std::vector<std::vector<Rows>> levels;  // levels[n] = canonical reps of size n
};

Catalog& catalog() {
  static Catalog c;
  return c;
}

const std::vector<Rows>& level(std::size_t n) {
  auto& c = catalog();
  if (c.levels.empty()) {
    c.levels.push_back({Rows{}});
    c.levels.push_back({Rows{1}});
  }
  while (c.levels.size() <= n) {
    const std::size_t k = c.levels.size() - 1;
    std::map<u128, Rows> found;
    for (const Rows& rep : c.levels[k]) {
      // Every (k+1)-poset arises by adding a maximal element above some ideal.
      for (const std::uint64_t ideal : ideals_of(rep)) {
        Rows grown = rep;
        for (std::size_t x = 0; x < k; ++x) {
          if (bit(ideal, x)) grown[x] |= std::uint64_t{1} << k;
        }
        grown.push_back(std::uint64_t{1} << k);
        const auto canon = canonicalize(grown);
        if (!found.contains(canon.code)) found.emplace(canon.code, apply_order(grown, canon.order));
      }
    }
    std::vector<Rows> next;
    next.reserve(found.size());
    for (auto& [code, rows] : found) next.push_back(std::move(rows));
    c.levels.push_back(std::move(next));
  }
  return c.levels[n];
}

}  // namespace

CanonicalCode canonical_code(const Poset& p) {
  if (p.size() > kMaxCanonicalSize) throw SizeCapExceeded(p.size(), kMaxCanonicalSize);
  return to_code(p.size(), canonicalize(rows_of(p)).code);
}

Poset canonical_form(const Poset& p) {
  if (p.size() > kMaxCanonicalSize) throw SizeCapExceeded(p.size(), kMaxCanonicalSize);
  const auto canon = canonicalize(rows_of(p));
  return p.permuted(canon.order).with_index_names();
}

std::vector<Poset> enumerate_posets(std::size_t n, std::size_t cap) {
  if (n > cap) throw SizeCapExceeded(n, cap);
  if (n > kMaxCanonicalSize) throw SizeCapExceeded(n, kMaxCanonicalSize);
  auto& c = catalog();
  std::lock_guard guard(c.lock);
  const auto& reps = level(n);
  std::vector<Poset> out;
  out.reserve(reps.size());
  for (const auto& rows : reps) out.push_back(poset_from_rows(rows));
  return out;
}

std::vector<Poset> enumerate_upward_linear_posets(std::size_t n, std::size_t cap) {
  auto all = enumerate_posets(n, cap);
  std::vector<Poset> out;
  for (auto& p : all) {
    if (is_upward_linear(p)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace incalg
