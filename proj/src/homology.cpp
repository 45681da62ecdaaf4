#include "incalg/homology.hpp"

#include <algorithm>
#include <sstream>

#include "incalg/errors.hpp"

namespace incalg {

std::size_t ChainComplex::length() const {
  for (std::size_t r = terms.size(); r-- > 0;) {
    if (!terms[r].empty()) return r;
  }
  return 0;
}

std::vector<std::size_t> ChainComplex::coordinates_below(std::size_t r, Element y) const {
  std::vector<std::size_t> out;
  if (r >= terms.size()) return out;
  for (std::size_t k = 0; k < terms[r].size(); ++k) {
    if (poset.leq(terms[r][k], y)) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> ChainComplex::coordinates_above(std::size_t r, Element x) const {
  std::vector<std::size_t> out;
  if (r >= terms.size()) return out;
  for (std::size_t k = 0; k < terms[r].size(); ++k) {
    if (poset.leq(x, terms[r][k])) out.push_back(k);
  }
  return out;
}

std::string format_complex(const ChainComplex& c, bool with_boundaries) {
  std::ostringstream os;
  for (std::size_t r = 0; r < c.terms.size(); ++r) {
    os << "deg " << r << ": ";
    if (c.terms[r].empty()) os << "0";
    // Runs of equal vertices collapse into powers.
    std::vector<std::pair<Element, std::size_t>> runs;
    for (const Element v : c.terms[r]) {
      if (!runs.empty() && runs.back().first == v) {
        ++runs.back().second;
      } else {
        runs.emplace_back(v, 1);
      }
    }
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (i > 0) os << " + ";
      os << "P(" << c.poset.name(runs[i].first) << ")";
      if (runs[i].second > 1) os << "^" << runs[i].second;
    }
    os << "\n";
    if (with_boundaries && r >= 1) os << "  d" << r << " = " << c.boundaries[r] << "\n";
  }
  return os.str();
}

ProjectiveCover projective_cover(const PosetRep& m) {
  ProjectiveCover cover;
  const Field f = m.field();
  for (Element y = 0; y < m.poset().size(); ++y) {
    if (m.dim(y) == 0) continue;
    const Mat gens = extend_basis(radical_basis(m, y), Mat::identity(m.dim(y), f));
    for (std::size_t t = 0; t < gens.cols(); ++t) {
      cover.vertices.push_back(y);
      cover.generators.push_back(gens.column(t));
    }
  }
  return cover;
}

namespace {

// Rows `rows` of a vector space with `size` coordinates, as a size x cols
// matrix holding `local` at those rows.
Mat embed(const Mat& local, const std::vector<std::size_t>& rows, std::size_t size) {
  Mat out(size, local.cols(), local.field());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < local.cols(); ++c) out(rows[i], c) = local(i, c);
  }
  return out;
}

// Augmentation at vertex y: columns M_{v_k -> y} g_k for summands below y.
Mat augmentation_at(const ChainComplex& c, Element y) {
  const PosetRep& m = *c.resolved;
  Mat out(m.dim(y), 0, c.field);
  for (const auto k : c.coordinates_below(0, y)) out = out.hstack(m.path_map(c.terms[0][k], y) * c.augmentation[k]);
  return out;
}

// d_r restricted to the coordinates of P_{r-1} and P_r at vertex y.
Mat boundary_at(const ChainComplex& c, std::size_t r, Element y) {
  const auto rows = c.coordinates_below(r - 1, y);
  const auto cols = c.coordinates_below(r, y);
  if (r >= c.terms.size()) return Mat(rows.size(), 0, c.field);
  return c.boundaries[r].select_rows(rows).select_columns(cols);
}

}  // namespace

ChainComplex minimal_projective_resolution(const PosetRep& m, std::optional<std::size_t> max_len) {
  const Poset& p = m.poset();
  const std::size_t n = p.size();
  const std::size_t bound = max_len.value_or(std::max<std::size_t>(n, 1));
  ChainComplex c;
  c.poset = p;
  c.field = m.field();
  c.resolved = m;
  auto cover = projective_cover(m);
  c.terms.push_back(std::move(cover.vertices));
  c.boundaries.emplace_back();
  c.augmentation = std::move(cover.generators);

  // Syzygy bases at each vertex, in the full coordinates of the latest term.
  std::vector<Mat> omega(n);
  for (Element y = 0; y < n; ++y) {
    const auto coords = c.coordinates_below(0, y);
    omega[y] = embed(kernel_basis(augmentation_at(c, y)), coords, c.terms[0].size());
  }
  for (std::size_t r = 0;; ++r) {
    const std::size_t width = c.terms[r].size();
    std::vector<Element> vertices;
    Mat d(width, 0, c.field);
    for (Element z = 0; z < n; ++z) {
      if (omega[z].cols() == 0) continue;
      // Inside P_r the inclusions between vertices are coordinate
      // inclusions, so the radical of the syzygy at z is the span of the
      // syzygies at the lower covers.
      Mat rad(width, 0, c.field);
      for (const Element y : p.lower_covers(z)) rad = rad.hstack(omega[y]);
      const Mat gens = extend_basis(rad, omega[z]);
      for (std::size_t t = 0; t < gens.cols(); ++t) vertices.push_back(z);
      d = d.hstack(gens);
    }
    if (vertices.empty()) break;
    if (r + 1 > bound) throw LengthExceeded("resolution longer than " + std::to_string(bound));
    c.terms.push_back(std::move(vertices));
    c.boundaries.push_back(std::move(d));
    for (Element y = 0; y < n; ++y) {
      const auto coords = c.coordinates_below(r + 1, y);
      omega[y] = embed(kernel_basis(boundary_at(c, r + 1, y)), coords, c.terms[r + 1].size());
    }
  }
  return c;
}

bool is_resolution(const ChainComplex& c) {
  for (std::size_t r = 2; r < c.terms.size(); ++r) {
    if (!(c.boundaries[r - 1] * c.boundaries[r]).is_zero()) return false;
  }
  for (Element y = 0; y < c.poset.size(); ++y) {
    for (std::size_t r = 1; r < c.terms.size(); ++r) {
      const Mat d = boundary_at(c, r, y);
      const std::size_t kernel = d.cols() - rank(d);
      const std::size_t incoming = r + 1 < c.terms.size() ? rank(boundary_at(c, r + 1, y)) : 0;
      if (kernel != incoming) return false;
    }
    if (c.resolved) {
      const Mat e = augmentation_at(c, y);
      if (rank(e) != c.resolved->dim(y)) return false;
      const std::size_t incoming = c.terms.size() > 1 ? rank(boundary_at(c, 1, y)) : 0;
      if (e.cols() - rank(e) != incoming) return false;
      if (c.terms.size() > 1 && !(e * boundary_at(c, 1, y)).is_zero()) return false;
    }
  }
  return true;
}

bool is_minimal_complex(const ChainComplex& c) {
  for (std::size_t r = 1; r < c.terms.size(); ++r) {
    for (std::size_t j = 0; j < c.terms[r - 1].size(); ++j) {
      for (std::size_t k = 0; k < c.terms[r].size(); ++k) {
        if (c.terms[r - 1][j] == c.terms[r][k] && !c.boundaries[r](j, k).is_zero()) return false;
      }
    }
  }
  return true;
}

std::size_t pdim(const PosetRep& m) { return minimal_projective_resolution(m).length(); }

std::size_t injdim(const PosetRep& m) { return pdim(dual(m)); }

// ------------------------------------------------------------------ Ext

namespace {

// rank of Hom(d_r, P(x)) : Hom(P_{r-1}, P(x)) -> Hom(P_r, P(x)).
std::size_t coboundary_rank(const ChainComplex& c, std::size_t r, Element x) {
  if (r == 0 || r >= c.terms.size()) return 0;
  return rank(c.boundaries[r].select_rows(c.coordinates_above(r - 1, x)).select_columns(c.coordinates_above(r, x)));
}

// Hom(d_{r+1}, N) : Hom(P_r, N) -> Hom(P_{r+1}, N) with Hom(P_r, N) = ⊕ N_{u_j}.
Mat cochain_map(const ChainComplex& c, const PosetRep& n, std::size_t r) {
  auto offsets = [&](std::size_t deg) {
    std::vector<std::size_t> off{0};
    if (deg < c.terms.size()) {
      for (const Element v : c.terms[deg]) off.push_back(off.back() + n.dim(v));
    }
    return off;
  };
  const auto src = offsets(r);
  const auto dst = offsets(r + 1);
  Mat out(dst.back(), src.back(), c.field);
  if (r + 1 >= c.terms.size()) return out;
  const Mat& d = c.boundaries[r + 1];
  for (std::size_t j = 0; j < c.terms[r].size(); ++j) {
    for (std::size_t k = 0; k < c.terms[r + 1].size(); ++k) {
      if (d(j, k).is_zero()) continue;
      const Mat block = n.path_map(c.terms[r][j], c.terms[r + 1][k]).scaled(d(j, k));
      for (std::size_t a = 0; a < block.rows(); ++a) {
        for (std::size_t b = 0; b < block.cols(); ++b) out(dst[k] + a, src[j] + b) = block(a, b);
      }
    }
  }
  return out;
}

}  // namespace

std::size_t ext_dim_projective(const ChainComplex& res, Element x, std::size_t i) {
  if (i >= res.terms.size()) return 0;
  const std::size_t cochains = res.coordinates_above(i, x).size();
  return cochains - coboundary_rank(res, i + 1, x) - coboundary_rank(res, i, x);
}

std::size_t ext_dim(const ChainComplex& res, const PosetRep& n, std::size_t i) {
  if (!(res.poset == n.poset())) throw DimensionMismatch("ext between modules over different posets");
  if (i >= res.terms.size()) return 0;
  const Mat out = cochain_map(res, n, i);
  const std::size_t kernel = out.cols() - rank(out);
  return kernel - (i == 0 ? 0 : rank(cochain_map(res, n, i - 1)));
}

std::size_t ext_dim(const PosetRep& m, const PosetRep& n, std::size_t i) {
  return ext_dim(minimal_projective_resolution(m), n, i);
}

std::size_t ext_regular_dim(const ChainComplex& res, std::size_t i) {
  std::size_t total = 0;
  for (Element x = 0; x < res.poset.size(); ++x) total += ext_dim_projective(res, x, i);
  return total;
}

std::size_t grade(const ChainComplex& res) {
  if (res.resolved && res.resolved->is_zero()) throw ZeroModule();
  if (res.terms.empty() || res.terms[0].empty()) throw ZeroModule();
  for (std::size_t i = 0; i <= res.length(); ++i) {
    if (ext_regular_dim(res, i) > 0) return i;
  }
  throw InternalInconsistency("Ext into the regular module vanishes in every degree up to pdim");
}

std::size_t grade(const PosetRep& m) {
  if (m.is_zero()) throw ZeroModule();
  return grade(minimal_projective_resolution(m));
}

std::size_t grade_interval_combinatorial(const Lattice& l, Element a, Element b) {
  const Poset& p = l.poset();
  if (const auto w = is_distributive(l); !w) throw NotDistributive("lattice is not distributive");
  if (!p.leq(a, b)) throw NotComparable("interval needs '" + p.name(a) + "' <= '" + p.name(b) + "'");
  std::size_t best = p.size();
  for (const Element x : p.interval(a, b)) best = std::min(best, p.upper_covers(x).size());
  return best;
}

// ------------------------------------------------------------------ antichain resolution

ChainComplex antichain_resolution(const Antichain& c, Field field) {
  const Lattice& l = c.lattice();
  const std::size_t k = c.size();
  ChainComplex out;
  out.poset = l.poset();
  out.field = field;
  std::vector<std::vector<std::uint64_t>> masks(k + 1);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) masks[std::popcount(s)].push_back(s);
  std::vector<std::size_t> slot(std::size_t{1} << k);
  for (const auto& level : masks) {
    for (std::size_t i = 0; i < level.size(); ++i) slot[level[i]] = i;
  }
  for (std::size_t r = 0; r <= k; ++r) {
    std::vector<Element> vertices;
    for (const auto s : masks[r]) vertices.push_back(l.join_of(c.subset(s)));
    out.terms.push_back(std::move(vertices));
    if (r == 0) {
      out.boundaries.emplace_back();
      continue;
    }
    Mat d(masks[r - 1].size(), masks[r].size(), field);
    for (std::size_t col = 0; col < masks[r].size(); ++col) {
      const auto s = masks[r][col];
      int position = 0;
      for (std::size_t bit = 0; bit < k; ++bit) {
        if (!((s >> bit) & 1U)) continue;
        ++position;
        d.set(slot[s & ~(std::uint64_t{1} << bit)], col, position % 2 == 1 ? 1 : -1);
      }
    }
    out.boundaries.push_back(std::move(d));
  }
  out.resolved = antichain_module(c, field);
  const Element m = l.bottom();
  Mat g(out.resolved->dim(m), 1, field);
  if (g.rows() == 1) g(0, 0) = Scalar::one(field);
  out.augmentation.push_back(std::move(g));
  if (!is_resolution(out)) {
    throw InternalInconsistency("antichain complex of " + format_set(l.poset(), c.elements()) + " is not a resolution");
  }
  return out;
}

// ------------------------------------------------------------------ coresolutions

Profile regular_coresolution_profile(const std::vector<ChainComplex>& simple_resolutions) {
  Profile out;
  const std::size_t n = simple_resolutions.size();
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<std::size_t> row(n);
    bool any = false;
    for (Element x = 0; x < n; ++x) {
      row[x] = ext_regular_dim(simple_resolutions[x], i);
      any = any || row[x] > 0;
    }
    if (!any) break;
    out.push_back(std::move(row));
  }
  return out;
}

Profile regular_coresolution_profile(const Poset& p, Field field) {
  std::vector<ChainComplex> res;
  for (Element x = 0; x < p.size(); ++x) res.push_back(minimal_projective_resolution(simple(p, x, field)));
  return regular_coresolution_profile(res);
}

Profile injective_coresolution_profile(const PosetRep& m) {
  const Poset& p = m.poset();
  std::vector<ChainComplex> res;
  for (Element x = 0; x < p.size(); ++x) res.push_back(minimal_projective_resolution(simple(p, x, m.field())));
  Profile out;
  for (std::size_t i = 0; i <= p.size(); ++i) {
    std::vector<std::size_t> row(p.size());
    bool any = false;
    for (Element x = 0; x < p.size(); ++x) {
      row[x] = ext_dim(res[x], m, i);
      any = any || row[x] > 0;
    }
    if (!any) break;
    out.push_back(std::move(row));
  }
  if (!m.is_zero() && out.size() != injdim(m) + 1) {
    throw InternalInconsistency("coresolution length disagrees with the injective dimension");
  }
  return out;
}

// ------------------------------------------------------------------ Ext as a module

PosetRep ext_as_opposite_module(const ChainComplex& res, std::size_t v) {
  const Poset& p = res.poset;
  const std::size_t n = p.size();
  const Poset op = p.opposite();
  if (v >= res.terms.size()) return PosetRep::zero(op, res.field);

  struct Cohomology {
    std::vector<std::size_t> coords;  // summands of P_v above x
    Mat boundaries;                   // coboundaries, in those coordinates
    Mat reps;                         // cocycles completing them to a basis
  };
  std::vector<Cohomology> h(n);
  for (Element x = 0; x < n; ++x) {
    auto& hx = h[x];
    hx.coords = res.coordinates_above(v, x);
    const std::size_t width = hx.coords.size();
    Mat delta(0, width, res.field);
    if (v + 1 < res.terms.size()) {
      delta = res.boundaries[v + 1].select_rows(hx.coords).select_columns(res.coordinates_above(v + 1, x)).transpose();
    }
    const Mat cocycles = kernel_basis(delta);
    hx.boundaries = Mat(width, 0, res.field);
    if (v >= 1) {
      hx.boundaries = image_basis(
          res.boundaries[v].select_rows(res.coordinates_above(v - 1, x)).select_columns(hx.coords).transpose());
    }
    hx.reps = extend_basis(hx.boundaries, cocycles);
  }

  std::vector<std::size_t> dims(n);
  for (Element x = 0; x < n; ++x) dims[opposite_index(p, x)] = h[x].reps.cols();
  std::vector<Mat> maps;
  for (const auto& [a, b] : op.covers()) {
    // a below b in the opposite order: base cover x < y with x = b', y = a'.
    const Element x = opposite_index(p, b);
    const Element y = opposite_index(p, a);
    // Cocycles at y live on a subset of the coordinates at x.
    std::vector<std::size_t> rows;
    for (const auto k : h[y].coords) {
      rows.push_back(static_cast<std::size_t>(std::lower_bound(h[x].coords.begin(), h[x].coords.end(), k) -
                                              h[x].coords.begin()));
    }
    const Mat image = embed(h[y].reps, rows, h[x].coords.size());
    const Mat coeffs = solve_or_throw(h[x].boundaries.hstack(h[x].reps), image);
    std::vector<std::size_t> keep;
    for (std::size_t t = 0; t < h[x].reps.cols(); ++t) keep.push_back(h[x].boundaries.cols() + t);
    maps.push_back(coeffs.select_rows(keep));
  }
  try {
    return PosetRep(op, std::move(dims), std::move(maps), res.field);
  } catch (const InternalInconsistency&) {
    throw;
  } catch (const Error& e) {
    throw InternalInconsistency(std::string("Ext module is not functorial: ") + e.what());
  }
}

PosetRep ext_as_opposite_module(const PosetRep& m, std::size_t v) {
  return ext_as_opposite_module(minimal_projective_resolution(m), v);
}

}  // namespace incalg
