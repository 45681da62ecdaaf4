#pragma once

#include <optional>
#include <string>
#include <vector>

#include "incalg/lattice.hpp"
#include "incalg/matrix.hpp"
#include "incalg/repr.hpp"

namespace incalg {

/// A complex of direct sums of indecomposable projectives
///   ... -> P_r -> P_{r-1} -> ... -> P_0 (-> M).
/// terms[r] lists the summand vertices of P_r. boundaries[r] (r >= 1) is a
/// |terms[r-1]| x |terms[r]| scalar matrix; entry (j, k) scales the canonical
/// map P(terms[r][k]) -> P(terms[r-1][j]) and is zero unless
/// terms[r-1][j] <= terms[r][k]. boundaries[0] is an empty placeholder.
struct ChainComplex {
  Poset poset;
  Field field = Field::rationals();
  std::vector<std::vector<Element>> terms;
  std::vector<Mat> boundaries;
  /// When resolving a module: the image in M of the generator of each
  /// summand of P_0, as a column vector in M at that summand's vertex.
  std::optional<PosetRep> resolved;
  std::vector<Mat> augmentation;

  /// Index of the last nonzero term; 0 for the empty complex.
  [[nodiscard]] std::size_t length() const;
  /// Summand positions k of term r with terms[r][k] <= y: the coordinates of
  /// P_r at vertex y.
  [[nodiscard]] std::vector<std::size_t> coordinates_below(std::size_t r, Element y) const;
  /// Summand positions k of term r with terms[r][k] >= x: the coordinates of
  /// Hom(P_r, P(x)).
  [[nodiscard]] std::vector<std::size_t> coordinates_above(std::size_t r, Element x) const;
};

/// One line per degree, `deg 2: P(5)^3`; boundary matrices follow when asked.
std::string format_complex(const ChainComplex& c, bool with_boundaries = false);

struct ProjectiveCover {
  std::vector<Element> vertices;
  /// Generator images, one column vector per summand.
  std::vector<Mat> generators;
};

ProjectiveCover projective_cover(const PosetRep& m);

/// Iterated minimal projective covers of syzygies. The default bound is the
/// number of elements, which no incidence algebra exceeds.
ChainComplex minimal_projective_resolution(const PosetRep& m, std::optional<std::size_t> max_len = std::nullopt);

/// True when d_{r-1} d_r = 0, the augmentation is onto and kills the image
/// of d_1, and every vertex of every degree has zero homology.
bool is_resolution(const ChainComplex& c);

/// No nonzero block between summands at the same vertex.
bool is_minimal_complex(const ChainComplex& c);

std::size_t pdim(const PosetRep& m);
std::size_t injdim(const PosetRep& m);

/// dim Ext^i(M, P(x)) from a resolution of M.
std::size_t ext_dim_projective(const ChainComplex& res, Element x, std::size_t i);
/// dim Ext^i(M, N) from a resolution of M.
std::size_t ext_dim(const ChainComplex& res, const PosetRep& n, std::size_t i);
std::size_t ext_dim(const PosetRep& m, const PosetRep& n, std::size_t i);
/// sum over x of dim Ext^i(M, P(x)), i.e. dim Ext^i(M, A).
std::size_t ext_regular_dim(const ChainComplex& res, std::size_t i);

/// Least i with Ext^i(M, A) != 0. Throws ZeroModule.
std::size_t grade(const ChainComplex& res);
std::size_t grade(const PosetRep& m);

/// min over x in [a, b] of |cov(x)|. Throws NotDistributive and NotComparable.
std::size_t grade_interval_combinatorial(const Lattice& l, Element a, Element b);

/// Degree r: one P(∨S) per subset S of size r (subsets ordered by their
/// position mask), with Koszul signs (-1)^{k+1} for deleting the k-th
/// smallest element. Checked to resolve M_C; InternalInconsistency if not.
ChainComplex antichain_resolution(const Antichain& c, Field field = Field::rationals());

/// Entry i, x: multiplicity of I(x) in the i-th term of the minimal
/// injective coresolution of M, i.e. dim Ext^i(S(x), M). Stops after the
/// first zero degree.
using Profile = std::vector<std::vector<std::size_t>>;
Profile injective_coresolution_profile(const PosetRep& m);
/// The same for the regular module, from resolutions of the simples.
Profile regular_coresolution_profile(const Poset& p, Field field = Field::rationals());
Profile regular_coresolution_profile(const std::vector<ChainComplex>& simple_resolutions);

/// Ext^v(M, A) as a module over the opposite poset: vertex x carries
/// Ext^v(M, P(x)) and x <= y in the base gives Ext^v(M, P(y)) -> Ext^v(M, P(x)).
PosetRep ext_as_opposite_module(const ChainComplex& res, std::size_t v);
PosetRep ext_as_opposite_module(const PosetRep& m, std::size_t v);

/// Element of the opposite poset corresponding to x.
inline Element opposite_index(const Poset& p, Element x) { return p.size() - 1 - x; }

}  // namespace incalg
