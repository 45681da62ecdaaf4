#pragma once

// Slow reference implementations used only by the tests. None of them call
// into the library beyond building a Poset from a relation list.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "incalg/poset.hpp"

namespace oracle {

// rel[i][j] true means i <= j.
using Relation = std::vector<std::vector<bool>>;

inline bool is_partial_order(const Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && r[i][j] && r[j][i]) return false;
      for (std::size_t k = 0; k < n; ++k) {
        if (r[i][j] && r[j][k] && !r[i][k]) return false;
      }
    }
  }
  return true;
}

// Every partial order on {0..n-1}: each unordered pair is below, above or
// incomparable, then filter by transitivity.
inline std::vector<Relation> labeled_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::size_t total = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) total *= 3;
  std::vector<Relation> out;
  for (std::size_t code = 0; code < total; ++code) {
    Relation r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    std::size_t c = code;
    for (const auto& [i, j] : pairs) {
      if (c % 3 == 1) r[i][j] = true;
      if (c % 3 == 2) r[j][i] = true;
      c /= 3;
    }
    if (is_partial_order(r)) out.push_back(r);
  }
  return out;
}

inline std::uint64_t encode(const Relation& r, const std::vector<std::size_t>& perm) {
  std::uint64_t bits = 0;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) bits = (bits << 1) | (r[perm[i]][perm[j]] ? 1U : 0U);
  }
  return bits;
}

inline std::uint64_t min_code(const Relation& r) {
  std::vector<std::size_t> perm(r.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, encode(r, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// One relation per isomorphism class.
inline std::vector<Relation> unlabeled_posets(std::size_t n) {
  std::set<std::uint64_t> seen;
  std::vector<Relation> out;
  for (const auto& r : labeled_posets(n)) {
    if (seen.insert(min_code(r)).second) out.push_back(r);
  }
  return out;
}

inline incalg::Poset to_poset(const Relation& r) {
  std::vector<std::string> names;
  std::vector<incalg::Cover> rel;
  for (std::size_t i = 0; i < r.size(); ++i) {
    names.push_back("e" + std::to_string(i));
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (i != j && r[i][j]) rel.emplace_back(i, j);
    }
  }
  return incalg::Poset::from_relations(names, rel);
}

// Least upper bound of x and y by scanning, or -1.
inline int lub(const Relation& r, std::size_t x, std::size_t y) {
  for (std::size_t z = 0; z < r.size(); ++z) {
    if (!r[x][z] || !r[y][z]) continue;
    bool least = true;
    for (std::size_t w = 0; w < r.size() && least; ++w) {
      if (r[x][w] && r[y][w] && !r[z][w]) least = false;
    }
    if (least) return static_cast<int>(z);
  }
  return -1;
}

inline int glb(const Relation& r, std::size_t x, std::size_t y) {
  for (std::size_t z = 0; z < r.size(); ++z) {
    if (!r[z][x] || !r[z][y]) continue;
    bool greatest = true;
    for (std::size_t w = 0; w < r.size() && greatest; ++w) {
      if (r[w][x] && r[w][y] && !r[w][z]) greatest = false;
    }
    if (greatest) return static_cast<int>(z);
  }
  return -1;
}

inline bool is_lattice(const Relation& r) {
  if (r.empty()) return false;
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = 0; y < r.size(); ++y) {
      if (lub(r, x, y) < 0 || glb(r, x, y) < 0) return false;
    }
  }
  return true;
}

inline Relation relation_of(const incalg::Poset& p) {
  Relation r(p.size(), std::vector<bool>(p.size(), false));
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) r[i][j] = p.leq(i, j);
  }
  return r;
}

}  // namespace oracle
