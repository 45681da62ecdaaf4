#pragma once

#include <string>
#include <vector>

#include "incalg/lattice.hpp"
#include "incalg/matrix.hpp"
#include "incalg/poset.hpp"

namespace incalg {

/// A module over the incidence algebra of a poset: one vector space per
/// element and one matrix per cover x < y, acting M_x -> M_y. Constructors
/// check that parallel cover paths compose to the same map.
class PosetRep {
 public:
  /// The zero module over the empty poset.
  PosetRep() = default;
  /// `maps[i]` belongs to `base.covers()[i]` and has shape dims[y] x dims[x].
  /// Throws DimensionMismatch on bad shapes and Error when not functorial.
  PosetRep(Poset base, std::vector<std::size_t> dims, std::vector<Mat> maps, Field field = Field::rationals());

  static PosetRep zero(const Poset& base, Field field = Field::rationals());

  [[nodiscard]] const Poset& poset() const { return base_; }
  [[nodiscard]] Field field() const { return field_; }
  [[nodiscard]] std::size_t dim(Element x) const { return dims_[x]; }
  [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }
  [[nodiscard]] std::size_t total_dim() const;
  [[nodiscard]] bool is_zero() const { return total_dim() == 0; }
  [[nodiscard]] ElementSet support() const;

  /// Structure map along the i-th cover of the base poset.
  [[nodiscard]] const Mat& cover_map(std::size_t i) const { return maps_[i]; }
  [[nodiscard]] const std::vector<Mat>& cover_maps() const { return maps_; }
  /// M_x -> M_y for x <= y (identity when x = y). Throws NotComparable.
  [[nodiscard]] const Mat& path_map(Element x, Element y) const;

  [[nodiscard]] PosetRep change_field(Field f) const;

  friend bool operator==(const PosetRep& a, const PosetRep& b);

 private:
  Poset base_;
  std::vector<std::size_t> dims_;
  std::vector<Mat> maps_;
  Field field_ = Field::rationals();
  std::vector<Mat> paths_;  // n*n, empty (0x0 with non-matching dims) off the order
};

/// A natural transformation: one block source_x -> target_x per element.
class RepMap {
 public:
  /// Throws DimensionMismatch on shapes and Error when not natural.
  RepMap(PosetRep source, PosetRep target, std::vector<Mat> blocks);

  [[nodiscard]] const PosetRep& source() const { return source_; }
  [[nodiscard]] const PosetRep& target() const { return target_; }
  [[nodiscard]] const Mat& block(Element x) const { return blocks_[x]; }
  [[nodiscard]] const std::vector<Mat>& blocks() const { return blocks_; }
  [[nodiscard]] bool is_zero() const;

 private:
  PosetRep source_;
  PosetRep target_;
  std::vector<Mat> blocks_;
};

/// One-dimensional on `support` with identity maps inside it. The support
/// must be convex for this to be a module.
PosetRep thin_module(const Poset& p, ElementSet support, Field field = Field::rationals());

PosetRep projective(const Poset& p, Element x, Field field = Field::rationals());
PosetRep simple(const Poset& p, Element x, Field field = Field::rationals());
PosetRep injective(const Poset& p, Element x, Field field = Field::rationals());
/// Supported on [a, b]. Throws NotComparable unless a <= b.
PosetRep interval_module(const Poset& p, Element a, Element b, Field field = Field::rationals());
inline PosetRep interval_module(const Lattice& l, Element a, Element b, Field field = Field::rationals()) {
  return interval_module(l.poset(), a, b, field);
}
/// P(m) modulo the submodule generated at the antichain elements: supported
/// on the elements above none of them.
PosetRep antichain_module(const Antichain& c, Field field = Field::rationals());
/// The regular module, the direct sum of all P(x).
PosetRep regular_module(const Poset& p, Field field = Field::rationals());

std::vector<RepMap> hom_basis(const PosetRep& m, const PosetRep& n);
std::size_t hom_dim(const PosetRep& m, const PosetRep& n);

/// Same dimensions over the opposite poset with transposed maps.
PosetRep dual(const PosetRep& m);

struct SubRep {
  PosetRep module;
  RepMap inclusion;
};
struct QuotientRep {
  PosetRep module;
  RepMap projection;
};

SubRep kernel_of(const RepMap& f);
QuotientRep cokernel_of(const RepMap& f);
/// The submodule with the given subspace basis (columns) at each element.
/// The subspaces must be closed under the structure maps.
SubRep subrepresentation(const PosetRep& m, const std::vector<Mat>& bases);
PosetRep direct_sum(const std::vector<PosetRep>& parts);
/// dim of M_y modulo the images of all lower covers.
std::vector<std::size_t> top(const PosetRep& m);
SubRep radical(const PosetRep& m);
/// Basis (columns) of the radical at y.
Mat radical_basis(const PosetRep& m, Element y);

/// Debug dump: dims plus one matrix per cover.
std::string rep_to_json(const PosetRep& m, int indent = 2);

}  // namespace incalg
