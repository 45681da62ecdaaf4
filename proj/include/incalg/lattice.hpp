#pragma once

#include <array>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "incalg/enumerate.hpp"
#include "incalg/poset.hpp"
#include "incalg/verdict.hpp"

namespace incalg {

/// Why a poset fails to be a lattice: the pair (x, y) lacks a least upper
/// bound (missing_join) or a greatest lower bound. The empty poset reports
/// x = y = 0 with `empty` set.
struct NotALattice {
  Element x = 0;
  Element y = 0;
  bool missing_join = true;
  bool empty = false;
};

class Lattice;
std::variant<Lattice, NotALattice> as_lattice(const Poset& p);

/// A poset in which every pair has a join and a meet. Copies share state.
class Lattice {
 public:
  [[nodiscard]] const Poset& poset() const { return d_->poset; }
  [[nodiscard]] std::size_t size() const { return d_->poset.size(); }
  /// Minimum m.
  [[nodiscard]] Element bottom() const { return d_->bottom; }
  /// Maximum M.
  [[nodiscard]] Element top() const { return d_->top; }
  [[nodiscard]] Element join(Element x, Element y) const { return d_->join[x * size() + y]; }
  [[nodiscard]] Element meet(Element x, Element y) const { return d_->meet[x * size() + y]; }
  /// Iterated join; the empty join is the minimum.
  [[nodiscard]] Element join_of(ElementSet s) const;
  /// Iterated meet; the empty meet is the maximum.
  [[nodiscard]] Element meet_of(ElementSet s) const;

 private:
  struct Data {
    Poset poset;
    std::vector<Element> join;
    std::vector<Element> meet;
    Element bottom = 0;
    Element top = 0;
  };
  explicit Lattice(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  friend std::variant<Lattice, NotALattice> as_lattice(const Poset& p);

  std::shared_ptr<const Data> d_;
};

/// as_lattice, throwing NotALatticeError with the offending pair in the message.
Lattice require_lattice(const Poset& p);
std::string describe(const Poset& p, const NotALattice& w);

/// A triple with (x ∧ y) ∨ z != (x ∨ z) ∧ (y ∨ z).
using Triple = std::array<Element, 3>;
Verdict<Triple> is_distributive(const Lattice& l);
std::string describe_triple(const Poset& p, const Triple& t);

/// Induced subposet on the join-irreducible elements.
Poset join_irreducibles(const Lattice& l);

/// Pairwise incomparable elements of a lattice, ordered by ascending index.
class Antichain {
 public:
  /// Throws NotAnAntichain.
  Antichain(Lattice l, ElementSet elements);

  [[nodiscard]] const Lattice& lattice() const { return lattice_; }
  [[nodiscard]] ElementSet elements() const { return elements_; }
  [[nodiscard]] const std::vector<Element>& ordered() const { return ordered_; }
  [[nodiscard]] std::size_t size() const { return ordered_.size(); }
  /// The elements selected by bit k of `mask` meaning ordered()[k].
  [[nodiscard]] ElementSet subset(std::uint64_t mask) const;

 private:
  Lattice lattice_;
  ElementSet elements_;
  std::vector<Element> ordered_;
};

struct SubsetPair {
  ElementSet s;
  ElementSet s_prime;
};

/// ∨S <= ∨S' forces S ⊆ S'. Witness search tries pairs of equal size first.
Verdict<SubsetPair> is_strong_antichain(const Antichain& c);
/// ∨S ∧ ∨S' = ∨(S ∩ S') for all S, S'. Also evaluates the local form
/// ∨S = ∧_{x ∉ S} ∨(S ∪ {x}) for |S| <= |C| - 2 and throws
/// InternalInconsistency if the two disagree.
Verdict<SubsetPair> is_boolean_antichain(const Antichain& c);
/// The local form alone; the witness has s_prime empty.
Verdict<ElementSet> boolean_reformulation(const Antichain& c);

/// min of the complement of [m, x]; I(x) is the antichain module of this set.
Antichain antichain_of_injective(const Lattice& l, Element x);

Verdict<Cover> cover_monotone(const Lattice& l);
bool is_divisor_lattice(const Lattice& l);

/// Lattices of order ideals; labels list the members, e.g. "{1,2}".
Lattice ideal_lattice(const Poset& p);

/// One lattice per isomorphism class of n-element lattices, in canonical
/// order. Throws SizeCapExceeded when n > cap.
std::vector<Lattice> enumerate_lattices(std::size_t n, std::size_t cap = kDefaultLatticeCap);

std::string format_set(const Poset& p, ElementSet s);

}  // namespace incalg
