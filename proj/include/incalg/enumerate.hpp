#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "incalg/poset.hpp"

namespace incalg {

inline constexpr std::size_t kDefaultPosetCap = 7;
inline constexpr std::size_t kDefaultLatticeCap = 8;
/// Canonical codes store the strict upper triangle of the order matrix in 128 bits.
inline constexpr std::size_t kMaxCanonicalSize = 16;

/// Isomorphism-invariant code: the lexicographically least strict upper
/// triangle of the order matrix over all orderings compatible with a
/// colour-refinement partition of the elements.
struct CanonicalCode {
  std::size_t n = 0;
  std::array<std::uint64_t, 2> words{};
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_code(const Poset& p);

/// `p` relabelled into canonical order with labels "0".."n-1". Two posets are
/// isomorphic iff their canonical forms are equal.
Poset canonical_form(const Poset& p);

/// One representative per isomorphism class of n-element posets, in canonical
/// form, ordered by canonical code. Throws SizeCapExceeded when n > cap.
std::vector<Poset> enumerate_posets(std::size_t n, std::size_t cap = kDefaultPosetCap);

/// The isomorphism classes of n-element posets in which every element has at
/// most one upper cover (forests of rooted trees).
std::vector<Poset> enumerate_upward_linear_posets(std::size_t n, std::size_t cap = kDefaultPosetCap);

}  // namespace incalg
