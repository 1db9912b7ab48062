#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logmod/error.hpp"
#include "logmod/oracle.hpp"
#include "logmod/zr.hpp"
#include "support.hpp"

using namespace logmod;
using namespace logmod::test;

namespace {

std::size_t chain_oracle(const RationalFan& fan)
{
  auto faces = fan.faces();
  std::vector<std::vector<bool>> below(faces.size(), std::vector<bool>(faces.size(), false));
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = 0; j < faces.size(); ++j)
      below[i][j] = i != j && faces[i].contains(faces[j]) && !(faces[i] == faces[j]);
  return oracle::longest_chain(faces.size(), below) - 1;
}

LatticeMonoid sharp_monoid(std::size_t d)
{
  Matrix gens;
  for (std::size_t i = 0; i < d; ++i)
    gens.push_back(unit_vec(d, i));
  return LatticeMonoid(d, gens);
}

Stratum stratum(std::string name, std::size_t dim, LatticeMonoid m) { return {std::move(name), dim, std::move(m)}; }

} // namespace

TEST_CASE("stages of the quadrant")
{
  auto n2 = LatticeMonoid::free(2);
  SubdivisionTower t(n2);
  CHECK(t.current().cones().size() == 1);
  CHECK(poset_krull_dim(t.current()) == 2);

  auto m = MonoidIdeal::maximal(n2);
  auto t1 = subdivision_stage(t, m);
  CHECK(t1.current().cones().size() == 2);
  CHECK(poset_krull_dim(t1.current()) == 2);

  auto same = subdivision_stage(t1, MonoidIdeal::unit(n2));
  CHECK(same.current() == t1.current());

  auto chart = t1.chart_monoid(0);
  CHECK(chart.generators() == M({{-1, 1}, {1, 0}}));
  auto t2 = subdivision_stage(t1, MonoidIdeal::maximal(chart), 0);
  CHECK(t2.current().cones().size() == 3);
  CHECK(t2.stages().back().parent.size() == 3);
  CHECK(poset_krull_dim(t2.current()) == 2);
}

TEST_CASE("poset dimension of small fans")
{
  CHECK(poset_krull_dim(RationalFan::of_cone(Cone::zero(2))) == 0);
  CHECK(poset_krull_dim(RationalFan::of_cone(Cone::from_generators(3, M({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})))) == 3);
  // dual cone of a rank-one monoid in Z^2 has a line of lineality
  CHECK(poset_krull_dim(RationalFan::of_cone(dual_cone(LatticeMonoid(2, M({{1, 1}}))))) == 1);
}

TEST_CASE("fans are validated")
{
  Cone quadrant = Cone::from_generators(2, M({{1, 0}, {0, 1}}));
  Cone a = Cone::from_generators(2, M({{1, 0}, {1, 1}}));
  Cone b = Cone::from_generators(2, M({{1, 2}, {0, 1}}));
  Cone overlap = Cone::from_generators(2, M({{2, 1}, {0, 1}}));
  CHECK_NOTHROW(RationalFan(quadrant, {a, b}));
  CHECK_THROWS_AS(RationalFan(quadrant, {a, overlap}), Error);
  CHECK_THROWS_AS(RationalFan(a, {quadrant}), Error);
}

TEST_CASE("random towers keep their dimension")
{
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + trial % 2;
    Matrix gens;
    for (std::size_t k = 0; k < n + 1; ++k)
      gens.push_back(random_vec(rng, n, 0, 3));
    auto base = saturate(LatticeMonoid(n, gens));
    SubdivisionTower t(base);
    const std::size_t expected = poset_krull_dim(t.current());
    CHECK(expected == chain_oracle(t.current()));
    for (int stage = 0; stage < 5; ++stage) {
      Matrix ideal;
      for (int k = 0; k < 2; ++k) {
        Vec x = zero_vec(n);
        for (const auto& g : base.generators())
          x += Int(static_cast<long>(rng() % 3)) * g;
        ideal.push_back(x);
      }
      t = subdivision_stage(t, MonoidIdeal(base, ideal));
      CHECK(poset_krull_dim(t.current()) == expected);
      CHECK(chain_oracle(t.current()) == expected);
      CHECK(check_support(t.current().support(), t.current().cones()).covered);
    }
  }
}

TEST_CASE("parallel and serial refinement agree")
{
  auto n3 = LatticeMonoid::free(3);
  SubdivisionTower t(n3);
  auto a = subdivision_stage(t, MonoidIdeal(n3, M({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})), std::nullopt, true);
  a = subdivision_stage(a, MonoidIdeal(n3, M({{2, 0, 0}, {0, 1, 1}})), std::nullopt, true);
  auto b = subdivision_stage(t, MonoidIdeal(n3, M({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})), std::nullopt, false);
  b = subdivision_stage(b, MonoidIdeal(n3, M({{2, 0, 0}, {0, 1, 1}})), std::nullopt, false);
  CHECK(a.current() == b.current());
  CHECK(a.stages().back().parent == b.stages().back().parent);
}

TEST_CASE("dot output")
{
  auto n2 = LatticeMonoid::free(2);
  auto t = subdivision_stage(SubdivisionTower(n2), MonoidIdeal::maximal(n2));
  auto dot_fan = fan_to_dot(t.current());
  CHECK(dot_fan.find("digraph fan") == 0);
  CHECK(dot_fan.find("cone((1,0),(1,1))") != std::string::npos);
  auto dot_tower = tower_to_dot(t);
  CHECK(dot_tower.find("s0c0 -> s1c1") != std::string::npos);
}

TEST_CASE("log dimension")
{
  auto trivial = LatticeMonoid(0, {});
  CHECK(log_dim(Stratification({stratum("point", 0, sharp_monoid(1))})) == 0);
  CHECK(log_dim(Stratification({stratum("point", 0, sharp_monoid(2))})) == 1);
  CHECK(log_dim(Stratification({stratum("torus", 2, trivial), stratum("x-axis", 1, sharp_monoid(1)),
                                stratum("y-axis", 1, sharp_monoid(1)), stratum("origin", 0, sharp_monoid(2))})) ==
        2);
  CHECK_THROWS_AS(log_dim(Stratification({})), Error);
  CHECK_THROWS_AS(Stratification({stratum("a", 0, trivial), stratum("a", 1, trivial)}), Error);
  CHECK_THROWS_AS(Stratification({stratum("a", 0, LatticeMonoid(1, M({{1}, {-1}})))}), Error);
}

TEST_CASE("toric stratifications")
{
  for (std::size_t d = 1; d <= 4; ++d)
    CHECK(log_dim(toric_stratification(sharp_monoid(d))) == d);
  auto cone2 = saturate(LatticeMonoid(2, M({{1, 0}, {1, 3}})));
  auto s = toric_stratification(cone2);
  CHECK(s.strata().size() == 4);
  CHECK(log_dim(s) == 2);
  // three rays in rank 3, not simplicial
  auto p = saturate(LatticeMonoid(3, M({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}})));
  CHECK(log_dim(toric_stratification(p)) == 3);
}

TEST_CASE("log dimension is monotone")
{
  std::mt19937_64 rng(8);
  std::vector<Stratum> strata;
  std::size_t last = 0;
  for (int k = 0; k < 10; ++k) {
    std::size_t d = rng() % 3;
    strata.push_back(stratum("s" + std::to_string(k), rng() % 4, sharp_monoid(d)));
    std::size_t now = log_dim(Stratification(strata));
    CHECK(now >= last);
    last = now;
  }
}
