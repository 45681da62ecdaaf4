#include <doctest.h>

#include <random>

#include "incalg/catalog.hpp"
#include "incalg/errors.hpp"
#include "incalg/homology.hpp"
#include "incalg/repr.hpp"

using namespace incalg;

namespace {

Lattice lat(const std::string& name) { return require_lattice(named_example(name).poset); }

// A random map between sums of indecomposable projectives and injectives,
// built as a random combination of a Hom basis.
RepMap random_map(std::mt19937& rng, const Poset& p) {
  auto random_sum = [&] {
    std::vector<PosetRep> parts;
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) {
      const Element x = rng() % p.size();
      parts.push_back(rng() % 2 ? projective(p, x) : injective(p, x));
    }
    return direct_sum(parts);
  };
  const PosetRep m = random_sum();
  const PosetRep n = random_sum();
  std::vector<Mat> blocks;
  for (Element x = 0; x < p.size(); ++x) blocks.push_back(Mat::zero(n.dim(x), m.dim(x)));
  for (const auto& f : hom_basis(m, n)) {
    const Scalar c(static_cast<std::int64_t>(rng() % 5) - 2, Field::rationals());
    for (Element x = 0; x < p.size(); ++x) blocks[x] = blocks[x] + f.block(x).scaled(c);
  }
  return RepMap(m, n, blocks);
}

}  // namespace

TEST_CASE("projectives") {
  const Lattice l = lat("pentagon");
  const Poset& p = l.poset();
  CHECK(projective(p, l.top()) == simple(p, l.top()));
  CHECK(projective(p, l.bottom()).total_dim() == 5);
  CHECK(projective(p, l.bottom()).support() == p.carrier());
}

TEST_CASE("simples and injectives") {
  for (const char* name : {"pentagon", "b2", "m3", "hex6"}) {
    const Lattice l = lat(name);
    const Poset& p = l.poset();
    CHECK(injective(p, l.top()) == projective(p, l.bottom()));
    CHECK(injective(p, l.bottom()) == simple(p, l.bottom()));
    for (Element x = 0; x < p.size(); ++x) {
      CHECK(injective(p, x).total_dim() == p.interval(l.bottom(), x).size());
      CHECK(simple(p, x).total_dim() == 1);
    }
  }
}

TEST_CASE("interval modules") {
  const Lattice l = lat("hex6");
  const Poset& p = l.poset();
  for (Element x = 0; x < p.size(); ++x) {
    CHECK(interval_module(l, x, x) == simple(p, x));
    CHECK(interval_module(l, l.bottom(), x) == injective(p, x));
  }
  CHECK(interval_module(l, l.bottom(), l.top()) == projective(p, l.bottom()));
  CHECK_THROWS_AS(interval_module(l, p.element("3"), p.element("4")), NotComparable);
}

TEST_CASE("antichain modules") {
  const Lattice b2 = lat("b2");
  CHECK(antichain_module(Antichain(b2, {})) == projective(b2.poset(), b2.bottom()));
  CHECK(antichain_module(antichain_of_injective(b2, b2.bottom())) == simple(b2.poset(), b2.bottom()));
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& l : enumerate_lattices(n)) {
      for (Element x = 0; x < n; ++x) CHECK(antichain_module(antichain_of_injective(l, x)) == injective(l.poset(), x));
    }
  }
}

TEST_CASE("antichain module is the cokernel of the generated submodule") {
  const Lattice l = lat("hex6");
  const Poset& p = l.poset();
  const Antichain c(l, ElementSet::singleton(p.element("3")) | ElementSet::singleton(p.element("4")));
  std::vector<PosetRep> parts;
  for (const Element x : c.ordered()) parts.push_back(projective(p, x));
  const PosetRep src = direct_sum(parts);
  const PosetRep pm = projective(p, l.bottom());
  std::vector<Mat> blocks;
  for (Element y = 0; y < p.size(); ++y) {
    Mat b = Mat::zero(pm.dim(y), 0);
    for (const Element x : c.ordered()) {
      const auto basis = hom_basis(projective(p, x), pm);
      REQUIRE(basis.size() == 1);
      b = b.hstack(basis[0].block(y));
    }
    blocks.push_back(b);
  }
  const QuotientRep q = cokernel_of(RepMap(src, pm, blocks));
  const PosetRep mc = antichain_module(c);
  CHECK(q.module.dims() == mc.dims());
  for (std::size_t i = 0; i < p.covers().size(); ++i) {
    CHECK(q.module.cover_map(i).is_zero() == mc.cover_map(i).is_zero());
  }
}

TEST_CASE("hom dimensions") {
  for (const char* name : {"pentagon", "m3", "p8", "ul5"}) {
    const Poset p = named_example(name).poset;
    for (Element a = 0; a < p.size(); ++a) {
      for (Element b = 0; b < p.size(); ++b) {
        CHECK(hom_dim(projective(p, a), projective(p, b)) == (p.leq(b, a) ? 1U : 0U));
        CHECK(hom_dim(simple(p, a), simple(p, b)) == (a == b ? 1U : 0U));
      }
    }
  }
}

TEST_CASE("Hom(P(x), N) = dim N_x on random cokernels and kernels") {
  std::mt19937 rng(5);
  const Poset p = named_example("hex6").poset;
  for (int trial = 0; trial < 25; ++trial) {
    const RepMap f = random_map(rng, p);
    const PosetRep coker = cokernel_of(f).module;
    const PosetRep ker = kernel_of(f).module;
    for (Element x = 0; x < p.size(); ++x) {
      CHECK(hom_dim(projective(p, x), coker) == coker.dim(x));
      CHECK(hom_dim(projective(p, x), ker) == ker.dim(x));
      CHECK(ker.dim(x) == f.source().dim(x) - rank(f.block(x)));
      CHECK(coker.dim(x) == f.target().dim(x) - rank(f.block(x)));
    }
  }
}

TEST_CASE("dual") {
  const Poset p = named_example("pentagon").poset;
  const Poset op = p.opposite();
  for (Element x = 0; x < p.size(); ++x) {
    const Element ox = opposite_index(p, x);
    CHECK(dual(projective(p, x)) == injective(op, ox));
    CHECK(dual(simple(p, x)) == simple(op, ox));
    CHECK(dual(dual(injective(p, x))) == injective(p, x));
    for (Element y = 0; y < p.size(); ++y) {
      if (p.leq(x, y)) CHECK(dual(interval_module(p, x, y)) == interval_module(op, opposite_index(p, y), ox));
    }
  }
}

TEST_CASE("top and radical") {
  const Poset p = named_example("m3").poset;
  for (Element x = 0; x < p.size(); ++x) {
    std::vector<std::size_t> ind(p.size(), 0);
    ind[x] = 1;
    CHECK(top(projective(p, x)) == ind);
    CHECK(radical(simple(p, x)).module.is_zero());
    CHECK(radical(projective(p, x)).module.total_dim() == projective(p, x).total_dim() - 1);
  }
}

TEST_CASE("constructors validate") {
  const Poset b2 = named_example("b2").poset;
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < b2.covers().size(); ++i) maps.push_back(Mat{{i == 0 ? 2 : 1}});
  CHECK_THROWS_AS(PosetRep(b2, {1, 1, 1, 1}, maps), Error);
  CHECK_THROWS_AS(PosetRep(b2, {1, 1, 1}, maps), DimensionMismatch);
  const PosetRep s = simple(b2, 0);
  const PosetRep t = simple(b2, 1);
  CHECK_THROWS(RepMap(projective(b2, 0), projective(b2, 0), {Mat{{1}}, Mat{{2}}, Mat{{1}}, Mat{{1}}}));
  CHECK(hom_basis(s, t).empty());
  CHECK(rep_to_json(s).find("dims") != std::string::npos);
}

TEST_CASE("subrepresentation and direct sum") {
  const Poset p = named_example("an:3").poset;
  const PosetRep m = direct_sum({projective(p, 0), simple(p, 1)});
  CHECK(m.dims() == std::vector<std::size_t>{1, 2, 1});
  // the copy of P(1) inside P(0)
  const SubRep sub = subrepresentation(m, {Mat::zero(1, 0), Mat{{1}, {0}}, Mat{{1}}});
  CHECK(sub.module.dims() == std::vector<std::size_t>{0, 1, 1});
}
