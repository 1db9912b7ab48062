#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logmod/error.hpp"
#include "logmod/hilbert.hpp"
#include "logmod/monoid.hpp"
#include "logmod/oracle.hpp"
#include "support.hpp"

using namespace logmod;
using namespace logmod::test;

TEST_CASE("membership")
{
  LatticeMonoid m(2, M({{1, 0}, {1, 2}}));
  CHECK(m.contains(V({2, 2})));
  CHECK_FALSE(m.contains(V({1, 1})));
  CHECK(m.contains(V({0, 0})));
  CHECK_THROWS_AS(m.contains(V({1})), Error);
  CHECK(oracle::contains(m.generators(), V({1, 1})) == false);
  CHECK(oracle::contains(m.generators(), V({3, 4})) == true);
}

TEST_CASE("normalization removes redundant generators")
{
  LatticeMonoid m(2, M({{1, 0}, {0, 1}, {1, 1}, {2, 3}, {0, 0}, {1, 0}}));
  CHECK(m.generators() == M({{0, 1}, {1, 0}}));
  LatticeMonoid g(1, M({{1}, {-1}, {3}}));
  CHECK(g.generators() == M({{-1}, {1}}));
  CHECK(g.is_group());
}

TEST_CASE("saturation")
{
  LatticeMonoid ns(1, M({{2}, {3}}));
  CHECK(ns.generators() == M({{2}, {3}}));
  CHECK_FALSE(ns.is_saturated());
  CHECK(saturate(ns).generators() == M({{1}}));

  auto n2 = LatticeMonoid::free(2);
  CHECK(saturate(n2) == n2);

  // (1,1) is not in the group generated by (1,0) and (1,2).
  LatticeMonoid m(2, M({{1, 0}, {1, 2}}));
  CHECK(m.is_saturated());
  CHECK(saturate(m) == m);
  LatticeMonoid wide(2, M({{1, 0}, {1, 2}, {1, 3}}));
  CHECK_FALSE(wide.is_saturated());
  CHECK(saturate(wide).generators() == M({{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
  CHECK(saturate(wide).is_saturated());
}

TEST_CASE("sharpening")
{
  LatticeMonoid m(2, M({{1, 0}, {-1, 0}, {0, 1}}));
  auto s = sharpen(m);
  CHECK(s.units == Lattice(2, M({{1, 0}})));
  CHECK(s.sharp.ambient_rank() == 1);
  CHECK(s.sharp == LatticeMonoid::free(1));
  CHECK(s.sharp.is_sharp());

  auto t = sharpen(LatticeMonoid::free(2));
  CHECK(t.units.rank() == 0);
  CHECK(t.sharp == LatticeMonoid::free(2));

  auto g = sharpen(LatticeMonoid(2, M({{1, 0}, {-1, 0}, {0, 1}, {0, -1}})));
  CHECK(g.units == Lattice::full(2));
  CHECK(g.sharp.ambient_rank() == 0);
  CHECK(g.sharp.generators().empty());
}

TEST_CASE("localization at a face")
{
  auto n2 = LatticeMonoid::free(2);
  auto loc = localize_at_face(n2, LatticeMonoid(2, M({{1, 0}})));
  CHECK(loc.generators() == M({{-1, 0}, {0, 1}, {1, 0}}));
  CHECK(loc.unit_lattice() == Lattice(2, M({{1, 0}})));

  CHECK(localize_at_face(n2, LatticeMonoid(2, {})) == n2);
  auto whole = localize_at_face(n2, n2);
  CHECK(whole.is_group());
  CHECK(whole.gp_lattice() == Lattice::full(2));

  CHECK_THROWS_AS(localize_at_face(n2, LatticeMonoid(2, M({{1, 1}}))), Error);
  try {
    localize_at_face(n2, LatticeMonoid(2, M({{1, 1}})));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAFace);
  }
}

TEST_CASE("intersection with a subgroup")
{
  auto n2 = LatticeMonoid::free(2);
  auto even = intersect_with_subgroup(n2, Lattice(2, M({{1, 1}, {2, 0}})));
  CHECK(even.generators() == M({{0, 2}, {1, 1}, {2, 0}}));
  CHECK(intersect_with_subgroup(n2, n2.gp_lattice()) == n2);

  auto sat = saturate(LatticeMonoid(2, M({{1, 0}, {1, 2}})));
  CHECK(intersect_with_subgroup(sat, Lattice(2, M({{2, 2}}))).generators() == M({{2, 2}}));
  auto full = saturate(LatticeMonoid(2, M({{1, 0}, {1, 2}, {0, 1}, {1, 1}})));
  CHECK(intersect_with_subgroup(full, Lattice(2, M({{1, 1}}))).generators() == M({{1, 1}}));

  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalError;
  };
  CHECK(code_of([&] { intersect_with_subgroup(LatticeMonoid(1, M({{2}, {3}})), Lattice::full(1)); }) ==
        ErrorCode::NotSaturated);
  CHECK(code_of([&] { intersect_with_subgroup(LatticeMonoid(2, M({{1, 0}})), Lattice::full(2)); }) ==
        ErrorCode::SubgroupNotContained);
}

TEST_CASE("units are the generators on the lineality space")
{
  LatticeMonoid m(3, M({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {1, 1, 2}}));
  CHECK(m.unit_generators() == M({{-1, 0, 0}, {1, 0, 0}}));
  CHECK(m.sharp_rank() == 2);
  for (const auto& u : m.unit_lattice().basis()) {
    CHECK(m.contains(u));
    CHECK(m.contains(-u));
  }
}

namespace {

Matrix random_rays(std::mt19937_64& rng, std::size_t n, std::size_t count)
{
  Matrix rays;
  while (rays.size() < count) {
    Vec v = random_vec(rng, n, -5, 5);
    if (!is_zero(v))
      rays.push_back(v);
  }
  return rays;
}

} // namespace

TEST_CASE("saturate is idempotent and extensive")
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 2;
    LatticeMonoid m(n, random_rays(rng, n, n + 1));
    auto s = saturate(m);
    CHECK(s.contains(m));
    CHECK(saturate(s) == s);
    CHECK(s.cone() == m.cone());
    CHECK(s.gp_lattice() == m.gp_lattice());
  }
}

TEST_CASE("hilbert basis agrees with box enumeration")
{
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 30) {
    std::size_t n = 2 + checked % 2;
    Matrix rays = random_rays(rng, n, n + (checked % 3));
    Cone c = Cone::from_generators(n, rays);
    if (!c.is_pointed())
      continue;
    auto fast = hilbert_basis(rays, Lattice::full(n).basis());
    auto slow = oracle::hilbert_basis(rays, Lattice::full(n).basis());
    REQUIRE(slow.has_value());
    CHECK(fast == *slow);
    ++checked;
  }
}

TEST_CASE("hilbert basis is irreducible and minimal")
{
  std::mt19937_64 rng(9);
  int checked = 0;
  while (checked < 20) {
    Matrix rays = random_rays(rng, 3, 4);
    if (!Cone::from_generators(3, rays).is_pointed())
      continue;
    auto hb = hilbert_basis(rays, Lattice::full(3).basis());
    for (std::size_t i = 0; i < hb.size(); ++i) {
      Matrix rest = hb;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      CHECK_FALSE(LatticeMonoid::from_minimal(3, rest).contains(hb[i]));
    }
    ++checked;
  }
}

TEST_CASE("membership agrees with coefficient search")
{
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix gens;
    for (int k = 0; k < 3; ++k) {
      Vec v = random_vec(rng, 2, 0, 4);
      v[0] += 1;
      gens.push_back(v);
    }
    LatticeMonoid m(2, gens);
    for (int q = 0; q < 10; ++q) {
      Vec x = random_vec(rng, 2, -1, 9);
      auto expect = oracle::contains(gens, x);
      REQUIRE(expect.has_value());
      CHECK(m.contains(x) == *expect);
    }
  }
}

TEST_CASE("intersection agrees with box enumeration")
{
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 15) {
    Matrix rays = random_rays(rng, 2, 3);
    if (!Cone::from_generators(2, rays).is_pointed())
      continue;
    auto m = saturate(LatticeMonoid(2, rays));
    if (m.gp_lattice().rank() < 2)
      continue;
    Lattice sub(2, {random_vec(rng, 2, -3, 3), random_vec(rng, 2, -3, 3)});
    if (sub.rank() == 0 || !m.gp_lattice().contains(sub))
      continue;
    auto fast = intersect_with_subgroup(m, sub);
    Matrix gens = fast.generators();
    long bound = 2;
    for (const auto& g : gens) {
      auto c = sub.coordinates(g);
      for (const auto& x : *c)
        bound = std::max(bound, 2 * abs(static_cast<long>(x)) + 2);
    }
    auto slow = oracle::box_hilbert_basis(m.generators(), sub.basis(), bound);
    REQUIRE(slow.has_value());
    CHECK(gens == *slow);
    ++checked;
  }
}

TEST_CASE("intersection with the whole group is the identity")
{
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = saturate(LatticeMonoid(3, random_rays(rng, 3, 3)));
    CHECK(intersect_with_subgroup(m, m.gp_lattice()) == m);
  }
}
