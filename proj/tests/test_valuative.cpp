#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logmod/error.hpp"
#include "logmod/ideal.hpp"
#include "logmod/oracle.hpp"
#include "logmod/valuative.hpp"
#include "support.hpp"

using namespace logmod;
using namespace logmod::test;

namespace {

LatticeMonoid with_units(std::size_t sharp_rank, std::size_t unit_rank)
{
  const std::size_t n = sharp_rank + unit_rank;
  Matrix gens;
  for (std::size_t i = 0; i < sharp_rank; ++i)
    gens.push_back(unit_vec(n, i));
  for (std::size_t i = sharp_rank; i < n; ++i) {
    gens.push_back(unit_vec(n, i));
    gens.push_back(-unit_vec(n, i));
  }
  return LatticeMonoid(n, gens);
}

} // namespace

TEST_CASE("dual cone rays")
{
  CHECK(dual_cone_rays(LatticeMonoid::free(2)) == M({{0, 1}, {1, 0}}));
  CHECK(dual_cone_rays(LatticeMonoid(2, M({{1, 0}, {1, 2}}))) == M({{0, 1}, {2, -1}}));
  CHECK(dual_cone_rays(LatticeMonoid(2, M({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}))).empty());
  // Rank-one monoid in Z^2: functionals are only seen on the line (1,1).
  CHECK(dual_cone_rays(LatticeMonoid(2, M({{1, 1}}))) == M({{1, 1}}));
}

TEST_CASE("dual cone rays against the box oracle")
{
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + trial % 2;
    Matrix gens;
    for (std::size_t k = 0; k < n + 1; ++k)
      gens.push_back(random_vec(rng, n, -3, 3));
    LatticeMonoid m(n, gens);
    if (m.gp_lattice().rank() != n)
      continue;
    auto slow = oracle::dual_rays(m.generators(), n, 20);
    REQUIRE(slow.has_value());
    CHECK(dual_cone_rays(m) == *slow);
  }
}

TEST_CASE("valuative extension")
{
  auto n2 = LatticeMonoid::free(2);
  auto v = valuative_extension(n2);
  CHECK(v.valuation.functional == V({1, 1}));
  CHECK(v.monoid == LatticeMonoid(2, M({{1, 0}, {0, 1}, {1, -1}, {-1, 1}})));
  CHECK(v.monoid.unit_lattice() == Lattice(2, M({{1, -1}})));

  auto n = LatticeMonoid::free(1);
  auto w = valuative_extension(n);
  CHECK(w.valuation.functional == V({1}));
  CHECK(w.monoid == n);

  LatticeMonoid half(2, M({{1, 0}, {-1, 0}, {0, 1}}));
  auto h = valuative_extension(half);
  CHECK(h.valuation.functional == V({0, 1}));
  CHECK(h.monoid == half);
  CHECK(h.monoid.unit_lattice() == Lattice(2, M({{1, 0}})));

  auto group = valuative_extension(with_units(0, 2));
  CHECK(group.trivial);
  CHECK(group.monoid == with_units(0, 2));

  try {
    valuative_extension(LatticeMonoid(1, M({{2}, {3}})));
    FAIL("expected NotSaturated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSaturated);
  }
}

TEST_CASE("valuative extension invariants on random monoids")
{
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 2;
    Matrix gens;
    for (std::size_t k = 0; k < n + 1; ++k)
      gens.push_back(random_vec(rng, n, -3, 3));
    auto p = saturate(LatticeMonoid(n, gens));
    auto v = valuative_extension(p);
    CHECK(v.monoid.contains(p));
    CHECK(v.monoid.gp_lattice() == p.gp_lattice());
    CHECK(v.monoid.sharp_rank() <= 1);
    for (const auto& g : p.generators())
      CHECK(v.monoid.unit_lattice().contains(g) == p.unit_lattice().contains(g));
  }
}

TEST_CASE("quasi-compactness criterion")
{
  CHECK(qc_finite_subcover_check(LatticeMonoid::free(1)));
  CHECK_FALSE(qc_finite_subcover_check(LatticeMonoid::free(2)));
  CHECK(qc_finite_subcover_check(with_units(0, 2)));
  CHECK(qc_finite_subcover_check(with_units(1, 1)));
  CHECK_FALSE(qc_finite_subcover_check(with_units(2, 1)));
  CHECK_FALSE(qc_finite_subcover_check(LatticeMonoid::free(3)));
}

TEST_CASE("criterion is invariant under automorphisms and extra units")
{
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix gens;
    for (int k = 0; k < 3; ++k)
      gens.push_back(random_vec(rng, 2, -2, 2));
    auto p = saturate(LatticeMonoid(2, gens));
    bool base = qc_finite_subcover_check(p);
    Matrix moved, lifted;
    for (const auto& g : p.generators()) {
      moved.push_back(V({0, 0}) + Vec{g[0] + 2 * g[1], g[1]});
      lifted.push_back(Vec{g[0], g[1], 0});
    }
    lifted.push_back(V({0, 0, 1}));
    lifted.push_back(V({0, 0, -1}));
    CHECK(qc_finite_subcover_check(LatticeMonoid(2, moved)) == base);
    CHECK(qc_finite_subcover_check(LatticeMonoid(3, lifted)) == base);
  }
}

TEST_CASE("uncovered valuations")
{
  auto n2 = LatticeMonoid::free(2);
  auto one = witness_uncovered_valuation(n2, {half_space_submonoid(n2, V({1, 1}))});
  CHECK_FALSE(one.covered);
  REQUIRE(one.witness);
  CHECK(one.witness->functional == V({1, 2}));

  std::vector<ValuativeSubmonoid> three{half_space_submonoid(n2, V({1, 0})), half_space_submonoid(n2, V({0, 1})),
                                        half_space_submonoid(n2, V({1, 1}))};
  auto w = witness_uncovered_valuation(n2, three);
  REQUIRE(w.witness);
  CHECK(w.witness->functional == V({1, 2}));

  auto n = LatticeMonoid::free(1);
  CHECK(witness_uncovered_valuation(n, {half_space_submonoid(n, V({1}))}).covered);
  auto empty = witness_uncovered_valuation(n, {});
  CHECK_FALSE(empty.covered);
  CHECK(empty.witness->functional == V({1}));
}

TEST_CASE("random families never cover a monoid of sharp rank two or more")
{
  std::mt19937_64 rng(2024);
  std::vector<LatticeMonoid> monoids{LatticeMonoid::free(2), LatticeMonoid::free(3), with_units(2, 1),
                                     saturate(LatticeMonoid(2, M({{1, 0}, {1, 3}})))};
  for (const auto& p : monoids) {
    Matrix rays = dual_cone_rays(p);
    for (int fam = 0; fam < 10; ++fam) {
      std::vector<ValuativeSubmonoid> family;
      std::size_t size = 1 + rng() % 8;
      for (std::size_t k = 0; k < size; ++k) {
        Vec v = zero_vec(p.ambient_rank());
        for (const auto& r : rays)
          v += Int(static_cast<long>(rng() % 4)) * r;
        family.push_back(half_space_submonoid(p, v));
      }
      auto res = witness_uncovered_valuation(p, family);
      REQUIRE_FALSE(res.covered);
      const Vec& v = res.witness->functional;
      CHECK(res.witness->primitive);
      for (const auto& g : p.nonunit_generators())
        CHECK(dot(v, g) > 0);
      for (const auto& f : family) {
        // not a nonnegative multiple: some pair of coordinates disagrees
        const Vec& u = f.valuation.functional;
        bool proportional = true;
        for (std::size_t i = 0; i < v.size(); ++i)
          for (std::size_t j = 0; j < v.size(); ++j)
            if (v[i] * u[j] != v[j] * u[i])
              proportional = false;
        CHECK_FALSE((proportional && !is_zero(u)));
      }
    }
  }
}

TEST_CASE("monomial point covers")
{
  auto n2 = LatticeMonoid::free(2);
  auto charts = blowup_charts(MonoidIdeal::maximal(n2));
  Matrix quadrant = M({{1, 0}, {0, 1}});
  CHECK(covers_monomial_points(2, quadrant, {charts[0].cone, charts[1].cone}).covered);

  auto partial = covers_monomial_points(2, quadrant, {charts[1].cone});
  CHECK_FALSE(partial.covered);
  REQUIRE(partial.witness);
  CHECK_FALSE(charts[1].cone.contains(*partial.witness));
  CHECK(dual_cone(n2).contains(*partial.witness));

  CHECK(covers_monomial_points(2, {}, {}).covered);
  try {
    covers_monomial_points(2, quadrant, {Cone::from_generators(2, M({{-1, 0}}))});
    FAIL("expected InvalidSubcone");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSubcone);
  }
}

TEST_CASE("blow-up fans cover the dual cone")
{
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + trial % 2;
    Matrix gens;
    for (std::size_t k = 0; k < n + 1; ++k)
      gens.push_back(random_vec(rng, n, 0, 3));
    auto base = saturate(LatticeMonoid(n, gens));
    Matrix ideal_gens;
    for (int k = 0; k < 3; ++k) {
      Vec x = zero_vec(n);
      for (const auto& g : base.generators())
        x += Int(static_cast<long>(rng() % 3)) * g;
      ideal_gens.push_back(x);
    }
    auto charts = blowup_charts(MonoidIdeal(base, ideal_gens));
    std::vector<Cone> cones;
    for (const auto& c : charts)
      cones.push_back(c.cone);
    CHECK(covers_monomial_points(n, dual_cone(base).generators(), cones).covered);
    if (base.is_sharp() && base.gp_lattice().rank() == n) {
      Matrix sigma_rays = dual_cone_rays(base);
      std::vector<Matrix> pieces;
      for (const auto& c : cones)
        pieces.push_back(c.generators());
      auto sample = oracle::uncovered_point(sigma_rays, pieces, n, 6);
      REQUIRE(sample.has_value());
      CHECK_FALSE(sample->has_value());
    }
  }
}
