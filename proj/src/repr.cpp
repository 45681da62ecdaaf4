#include "incalg/repr.hpp"

#include <numeric>

#include <json.hpp>

#include "incalg/errors.hpp"

namespace incalg {

PosetRep::PosetRep(Poset base, std::vector<std::size_t> dims, std::vector<Mat> maps, Field field)
    : base_(std::move(base)), dims_(std::move(dims)), maps_(std::move(maps)), field_(field) {
  const std::size_t n = base_.size();
  if (dims_.size() != n) throw DimensionMismatch("module needs one dimension per element");
  if (maps_.size() != base_.covers().size()) throw DimensionMismatch("module needs one map per cover");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const auto [x, y] = base_.covers()[i];
    if (maps_[i].rows() != dims_[y] || maps_[i].cols() != dims_[x]) {
      throw DimensionMismatch("map on cover " + base_.name(x) + " < " + base_.name(y) + " has the wrong shape");
    }
    if (!(maps_[i].field() == field_)) maps_[i] = maps_[i].change_field(field_);
  }
  // Compose along covers in topological order; every lower cover of y inside
  // [x, y] must give the same composite.
  paths_.assign(n * n, Mat());
  for (Element x = 0; x < n; ++x) {
    paths_[x * n + x] = Mat::identity(dims_[x], field_);
    for (const Element y : base_.up_set(x)) {
      if (y == x) continue;
      bool have = false;
      for (const Element z : base_.lower_covers(y) & base_.up_set(x)) {
        Mat via = maps_[*base_.cover_index(z, y)] * paths_[x * n + z];
        if (!have) {
          paths_[x * n + y] = std::move(via);
          have = true;
        } else if (!(via == paths_[x * n + y])) {
          throw Error("not a module: paths from '" + base_.name(x) + "' to '" + base_.name(y) + "' disagree");
        }
      }
    }
  }
}

PosetRep PosetRep::zero(const Poset& base, Field field) {
  std::vector<Mat> maps(base.covers().size(), Mat(0, 0, field));
  return PosetRep(base, std::vector<std::size_t>(base.size(), 0), std::move(maps), field);
}

std::size_t PosetRep::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

ElementSet PosetRep::support() const {
  ElementSet s;
  for (Element x = 0; x < dims_.size(); ++x) {
    if (dims_[x] > 0) s.insert(x);
  }
  return s;
}

const Mat& PosetRep::path_map(Element x, Element y) const {
  if (!base_.leq(x, y)) throw NotComparable("'" + base_.name(x) + "' is not below '" + base_.name(y) + "'");
  return paths_[x * base_.size() + y];
}

PosetRep PosetRep::change_field(Field f) const {
  std::vector<Mat> maps;
  maps.reserve(maps_.size());
  for (const auto& m : maps_) maps.push_back(m.change_field(f));
  return PosetRep(base_, dims_, std::move(maps), f);
}

bool operator==(const PosetRep& a, const PosetRep& b) {
  return a.base_ == b.base_ && a.field_ == b.field_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

RepMap::RepMap(PosetRep source, PosetRep target, std::vector<Mat> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  const Poset& p = source_.poset();
  if (!(p == target_.poset())) throw DimensionMismatch("module map between different posets");
  if (blocks_.size() != p.size()) throw DimensionMismatch("module map needs one block per element");
  for (Element x = 0; x < p.size(); ++x) {
    if (blocks_[x].rows() != target_.dim(x) || blocks_[x].cols() != source_.dim(x)) {
      throw DimensionMismatch("block at '" + p.name(x) + "' has the wrong shape");
    }
  }
  for (std::size_t i = 0; i < p.covers().size(); ++i) {
    const auto [x, y] = p.covers()[i];
    if (!(blocks_[y] * source_.cover_map(i) == target_.cover_map(i) * blocks_[x])) {
      throw Error("not natural on cover " + p.name(x) + " < " + p.name(y));
    }
  }
}

bool RepMap::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Mat& b) { return b.is_zero(); });
}

// ------------------------------------------------------------------ standard modules

PosetRep thin_module(const Poset& p, ElementSet support, Field field) {
  std::vector<std::size_t> dims(p.size(), 0);
  for (const Element x : support) dims[x] = 1;
  std::vector<Mat> maps;
  for (const auto& [x, y] : p.covers()) {
    Mat m(dims[y], dims[x], field);
    if (dims[x] == 1 && dims[y] == 1) m(0, 0) = Scalar::one(field);
    maps.push_back(std::move(m));
  }
  return PosetRep(p, std::move(dims), std::move(maps), field);
}

PosetRep projective(const Poset& p, Element x, Field field) { return thin_module(p, p.up_set(x), field); }

PosetRep simple(const Poset& p, Element x, Field field) { return thin_module(p, ElementSet::singleton(x), field); }

PosetRep injective(const Poset& p, Element x, Field field) { return thin_module(p, p.down_set(x), field); }

PosetRep interval_module(const Poset& p, Element a, Element b, Field field) {
  if (!p.leq(a, b)) throw NotComparable("interval needs '" + p.name(a) + "' <= '" + p.name(b) + "'");
  return thin_module(p, p.interval(a, b), field);
}

PosetRep antichain_module(const Antichain& c, Field field) {
  const Poset& p = c.lattice().poset();
  ElementSet killed;
  for (const Element x : c.elements()) killed |= p.up_set(x);
  return thin_module(p, p.carrier() - killed, field);
}

PosetRep regular_module(const Poset& p, Field field) {
  std::vector<PosetRep> parts;
  for (Element x = 0; x < p.size(); ++x) parts.push_back(projective(p, x, field));
  return direct_sum(parts);
}

// ------------------------------------------------------------------ Hom

namespace {

void require_same_base(const PosetRep& m, const PosetRep& n) {
  if (!(m.poset() == n.poset())) throw DimensionMismatch("modules over different posets");
  if (!(m.field() == n.field())) throw DimensionMismatch("modules over different fields");
}

}  // namespace

std::vector<RepMap> hom_basis(const PosetRep& m, const PosetRep& n) {
  require_same_base(m, n);
  const Poset& p = m.poset();
  const Field f = m.field();
  std::vector<std::size_t> offset(p.size() + 1, 0);
  for (Element x = 0; x < p.size(); ++x) offset[x + 1] = offset[x] + n.dim(x) * m.dim(x);
  const std::size_t unknowns = offset[p.size()];
  auto var = [&](Element x, std::size_t r, std::size_t c) { return offset[x] + r * m.dim(x) + c; };

  std::size_t equations = 0;
  for (const auto& [x, y] : p.covers()) equations += n.dim(y) * m.dim(x);
  Mat system(equations, unknowns, f);
  std::size_t row = 0;
  for (std::size_t i = 0; i < p.covers().size(); ++i) {
    const auto [x, y] = p.covers()[i];
    const Mat& a = m.cover_map(i);
    const Mat& b = n.cover_map(i);
    // (f_y a - b f_x)(r, c) = 0
    for (std::size_t r = 0; r < n.dim(y); ++r) {
      for (std::size_t c = 0; c < m.dim(x); ++c, ++row) {
        for (std::size_t k = 0; k < m.dim(y); ++k) {
          if (!a(k, c).is_zero()) system(row, var(y, r, k)) += a(k, c);
        }
        for (std::size_t l = 0; l < n.dim(x); ++l) {
          if (!b(r, l).is_zero()) system(row, var(x, l, c)) -= b(r, l);
        }
      }
    }
  }
  const Mat kernel = kernel_basis(system);
  std::vector<RepMap> out;
  for (std::size_t t = 0; t < kernel.cols(); ++t) {
    std::vector<Mat> blocks;
    for (Element x = 0; x < p.size(); ++x) {
      Mat b(n.dim(x), m.dim(x), f);
      for (std::size_t r = 0; r < n.dim(x); ++r) {
        for (std::size_t c = 0; c < m.dim(x); ++c) b(r, c) = kernel(var(x, r, c), t);
      }
      blocks.push_back(std::move(b));
    }
    out.emplace_back(m, n, std::move(blocks));
  }
  return out;
}

std::size_t hom_dim(const PosetRep& m, const PosetRep& n) { return hom_basis(m, n).size(); }

PosetRep dual(const PosetRep& m) {
  const Poset& p = m.poset();
  const Poset op = p.opposite();
  const std::size_t n = p.size();
  std::vector<std::size_t> dims(n);
  for (Element x = 0; x < n; ++x) dims[n - 1 - x] = m.dim(x);
  std::vector<Mat> maps;
  for (const auto& [a, b] : op.covers()) {
    maps.push_back(m.cover_map(*p.cover_index(n - 1 - b, n - 1 - a)).transpose());
  }
  return PosetRep(op, std::move(dims), std::move(maps), m.field());
}

SubRep subrepresentation(const PosetRep& m, const std::vector<Mat>& bases) {
  const Poset& p = m.poset();
  if (bases.size() != p.size()) throw DimensionMismatch("need one subspace per element");
  std::vector<std::size_t> dims(p.size());
  for (Element x = 0; x < p.size(); ++x) dims[x] = bases[x].cols();
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < p.covers().size(); ++i) {
    const auto [x, y] = p.covers()[i];
    auto a = solve(bases[y], m.cover_map(i) * bases[x]);
    if (!a) throw Error("subspaces are not closed under the map on " + p.name(x) + " < " + p.name(y));
    maps.push_back(std::move(*a));
  }
  PosetRep sub(p, std::move(dims), std::move(maps), m.field());
  return {sub, RepMap(sub, m, bases)};
}

SubRep kernel_of(const RepMap& f) {
  std::vector<Mat> bases;
  for (const auto& b : f.blocks()) bases.push_back(kernel_basis(b));
  return subrepresentation(f.source(), bases);
}

QuotientRep cokernel_of(const RepMap& f) {
  const PosetRep& n = f.target();
  const Poset& p = n.poset();
  std::vector<QuotientBasis> q;
  std::vector<std::size_t> dims;
  for (Element x = 0; x < p.size(); ++x) {
    q.push_back(quotient_basis(n.dim(x), image_basis(f.block(x))));
    dims.push_back(q.back().representatives.cols());
  }
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < p.covers().size(); ++i) {
    const auto [x, y] = p.covers()[i];
    maps.push_back(q[y].projection * n.cover_map(i) * q[x].representatives);
  }
  PosetRep quotient(p, std::move(dims), std::move(maps), n.field());
  std::vector<Mat> blocks;
  for (auto& e : q) blocks.push_back(std::move(e.projection));
  return {quotient, RepMap(n, quotient, std::move(blocks))};
}

PosetRep direct_sum(const std::vector<PosetRep>& parts) {
  if (parts.empty()) throw DimensionMismatch("direct sum of no modules has no base poset");
  const Poset& p = parts.front().poset();
  const Field f = parts.front().field();
  for (const auto& part : parts) require_same_base(parts.front(), part);
  std::vector<std::size_t> dims(p.size(), 0);
  for (const auto& part : parts) {
    for (Element x = 0; x < p.size(); ++x) dims[x] += part.dim(x);
  }
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < p.covers().size(); ++i) {
    const auto [x, y] = p.covers()[i];
    Mat m(dims[y], dims[x], f);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& part : parts) {
      const Mat& b = part.cover_map(i);
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
      }
      r0 += b.rows();
      c0 += b.cols();
    }
    maps.push_back(std::move(m));
  }
  return PosetRep(p, std::move(dims), std::move(maps), f);
}

Mat radical_basis(const PosetRep& m, Element y) {
  const Poset& p = m.poset();
  Mat images(m.dim(y), 0, m.field());
  for (const Element x : p.lower_covers(y)) images = images.hstack(m.cover_map(*p.cover_index(x, y)));
  return image_basis(images);
}

std::vector<std::size_t> top(const PosetRep& m) {
  std::vector<std::size_t> out(m.poset().size());
  for (Element y = 0; y < out.size(); ++y) out[y] = m.dim(y) - radical_basis(m, y).cols();
  return out;
}

SubRep radical(const PosetRep& m) {
  std::vector<Mat> bases;
  for (Element y = 0; y < m.poset().size(); ++y) bases.push_back(radical_basis(m, y));
  return subrepresentation(m, bases);
}

std::string rep_to_json(const PosetRep& m, int indent) {
  using json = nlohmann::json;
  const Poset& p = m.poset();
  json doc;
  doc["field"] = m.field().name();
  json dims = json::object();
  for (Element x = 0; x < p.size(); ++x) dims[p.name(x)] = m.dim(x);
  doc["dims"] = dims;
  json maps = json::array();
  for (std::size_t i = 0; i < p.covers().size(); ++i) {
    const auto [x, y] = p.covers()[i];
    const Mat& a = m.cover_map(i);
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c).to_string());
      rows.push_back(row);
    }
    maps.push_back({{"from", p.name(x)}, {"to", p.name(y)}, {"matrix", rows}});
  }
  doc["maps"] = maps;
  return doc.dump(indent);
}

}  // namespace incalg
