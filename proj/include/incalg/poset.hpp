#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace incalg {

using Element = std::size_t;

inline constexpr std::size_t kMaxPosetSize = 64;

/// Subset of the carrier {0, ..., n-1} of a poset, n <= 64.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet singleton(Element x) { return ElementSet(std::uint64_t{1} << x); }

  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  [[nodiscard]] constexpr bool contains(Element x) const { return (bits_ >> x) & 1U; }
  [[nodiscard]] constexpr bool is_subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  [[nodiscard]] constexpr Element first() const { return static_cast<Element>(std::countr_zero(bits_)); }

  constexpr void insert(Element x) { bits_ |= std::uint64_t{1} << x; }
  constexpr void erase(Element x) { bits_ &= ~(std::uint64_t{1} << x); }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  constexpr ElementSet& operator|=(ElementSet b) {
    bits_ |= b.bits_;
    return *this;
  }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) = default;

  class iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend constexpr bool operator==(iterator a, iterator b) = default;

   private:
    std::uint64_t rest_ = 0;
  };
  [[nodiscard]] constexpr iterator begin() const { return iterator(bits_); }
  [[nodiscard]] constexpr iterator end() const { return iterator(0); }

  [[nodiscard]] std::vector<Element> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

using Cover = std::pair<Element, Element>;

/// A finite partial order. Elements are indexed topologically (x <= y implies
/// index(x) <= index(y)) and keep their labels. Immutable; copies share state.
class Poset {
 public:
  /// Empty poset.
  Poset();

  /// Builds the order generated by `covers` (label pairs a < b). Duplicate
  /// and non-reduced pairs are accepted; cycles raise CycleDetected.
  static Poset from_covers(const std::vector<std::string>& names,
                           const std::vector<std::pair<std::string, std::string>>& covers);
  /// Same, with pairs given as positions into `names`.
  static Poset from_relations(const std::vector<std::string>& names, const std::vector<Cover>& relations);
  /// From a full order given as up-sets: up[x] = { y : x <= y }. The relation
  /// must already be a partial order on topologically indexed elements.
  static Poset from_up_sets(std::vector<std::string> names, std::vector<ElementSet> up);

  [[nodiscard]] std::size_t size() const { return d_->names.size(); }
  [[nodiscard]] const std::string& name(Element x) const { return d_->names[x]; }
  [[nodiscard]] const std::vector<std::string>& names() const { return d_->names; }
  [[nodiscard]] std::optional<Element> index_of(const std::string& label) const;
  /// Like index_of, throwing UnknownElement.
  [[nodiscard]] Element element(const std::string& label) const;

  [[nodiscard]] bool leq(Element x, Element y) const { return d_->up[x].contains(y); }
  [[nodiscard]] bool less(Element x, Element y) const { return x != y && leq(x, y); }
  [[nodiscard]] bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  /// { y : x <= y }
  [[nodiscard]] ElementSet up_set(Element x) const { return d_->up[x]; }
  /// { y : y <= x }
  [[nodiscard]] ElementSet down_set(Element x) const { return d_->down[x]; }
  [[nodiscard]] ElementSet interval(Element a, Element b) const { return d_->up[a] & d_->down[b]; }
  [[nodiscard]] ElementSet upper_covers(Element x) const { return d_->upper[x]; }
  [[nodiscard]] ElementSet lower_covers(Element x) const { return d_->lower[x]; }
  [[nodiscard]] ElementSet carrier() const { return ElementSet::full(size()); }

  /// Cover pairs (x, y), x covered by y, sorted lexicographically by index.
  [[nodiscard]] const std::vector<Cover>& covers() const { return d_->covers; }
  /// Position of the cover x < y in covers(), or nullopt when y does not cover x.
  [[nodiscard]] std::optional<std::size_t> cover_index(Element x, Element y) const;

  [[nodiscard]] ElementSet minimal_elements(ElementSet s) const;
  [[nodiscard]] ElementSet maximal_elements(ElementSet s) const;
  [[nodiscard]] bool is_antichain(ElementSet s) const;

  /// The same labels with the order reversed. Index i becomes n-1-i.
  [[nodiscard]] Poset opposite() const;
  /// Induced subposet on `s`, keeping relative index order.
  [[nodiscard]] Poset induced(ElementSet s) const;
  /// Relabel: element x of the result is old element order[x]. `order` must
  /// be a topological ordering.
  [[nodiscard]] Poset permuted(const std::vector<Element>& order) const;
  /// Same order with labels 0..n-1.
  [[nodiscard]] Poset with_index_names() const;

  /// Structural equality (labels, order and indexing).
  friend bool operator==(const Poset& a, const Poset& b);

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<ElementSet> up;
    std::vector<ElementSet> down;
    std::vector<ElementSet> upper;
    std::vector<ElementSet> lower;
    std::vector<Cover> covers;
    std::map<std::string, Element> index;
    std::vector<std::int32_t> cover_slot;  // n*n, -1 when not a cover
  };
  explicit Poset(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

// ------------------------------------------------------------------ queries

ElementSet upper_covers(const Poset& p, Element x);
/// Downward closure of `a`.
ElementSet order_ideal_generated(const Poset& p, ElementSet a);
/// Every down-closed subset once, sorted by cardinality then bitmask.
std::vector<ElementSet> all_order_ideals(const Poset& p);
/// Every antichain (including the empty one), sorted by cardinality then bitmask.
std::vector<ElementSet> all_antichains(const Poset& p);
bool is_upward_linear(const Poset& p);
bool is_disjoint_union_of_chains(const Poset& p);

/// Lexicographically least order isomorphism p -> q, as a vector mapping each
/// element of p to its image in q, or nullopt.
std::optional<std::vector<Element>> are_isomorphic(const Poset& p, const Poset& q);

/// Cover relations (transitive reduction) as label pairs.
std::vector<std::pair<std::string, std::string>> transitive_reduction(const Poset& p);

}  // namespace incalg
