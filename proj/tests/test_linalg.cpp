#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logmod/cone.hpp"
#include "logmod/error.hpp"
#include "logmod/hilbert.hpp"
#include "logmod/lattice.hpp"
#include "logmod/linalg.hpp"
#include "support.hpp"

using namespace logmod;
using namespace logmod::test;

TEST_CASE("hermite basis is canonical")
{
  auto a = linalg::hermite_basis(M({{2, 0}, {1, 1}, {0, 2}}), 2);
  auto b = linalg::hermite_basis(M({{1, 1}, {0, 2}}), 2);
  CHECK(a == b);
  CHECK(a == M({{1, 1}, {0, 2}}));
}

TEST_CASE("integer kernel is a lattice basis")
{
  // x + 2y + 3z = 0
  auto k = linalg::integer_kernel(M({{1, 2, 3}}), 3);
  CHECK(k.size() == 2);
  for (const auto& v : k)
    CHECK(dot(V({1, 2, 3}), v) == 0);
  Lattice l(3, k);
  CHECK(l.contains(V({-2, 1, 0})));
  CHECK(l.contains(V({-3, 0, 1})));
  CHECK(l.contains(V({1, 1, -1})));
}

TEST_CASE("saturation and completion")
{
  auto s = linalg::saturate_lattice(M({{2, 2}}), 2);
  CHECK(s == M({{1, 1}}));
  auto w = linalg::complete_basis(M({{1, 1}}), 2);
  CHECK(w.size() == 2);
  CHECK(w[0] == V({1, 1}));
  auto det = linalg::determinant(w);
  CHECK((det == 1 || det == -1));
}

TEST_CASE("lattice membership and coordinates")
{
  Lattice even(2, M({{2, 0}, {1, 1}}));
  CHECK(even.contains(V({3, 1})));
  CHECK_FALSE(even.contains(V({1, 0})));
  auto c = even.coordinates(V({3, 1}));
  REQUIRE(c);
  CHECK(combine(*c, even.basis(), 2) == V({3, 1}));
  CHECK(even.saturation() == Lattice::full(2));
}

TEST_CASE("cone representations")
{
  auto c = Cone::from_generators(2, M({{1, 0}, {1, 2}}));
  CHECK(c.facets() == M({{0, 1}, {2, -1}}));
  CHECK(c.rays() == M({{1, 0}, {1, 2}}));
  CHECK(c.dim() == 2);
  CHECK(c.is_pointed());
  CHECK(c.contains(V({1, 1})));
  CHECK_FALSE(c.contains(V({0, 1})));

  auto half = Cone::from_generators(2, M({{1, 0}, {-1, 0}, {0, 1}}));
  CHECK(half.lineality() == M({{1, 0}}));
  CHECK(half.rays() == M({{0, 1}}));
  CHECK(half.facets() == M({{0, 1}}));

  auto ray = Cone::from_generators(3, M({{1, 1, 0}}));
  CHECK(ray.dim() == 1);
  CHECK(ray.equations().size() == 2);

  CHECK(Cone::zero(2).dim() == 0);
  CHECK(Cone::whole(2).lineality_dim() == 2);
}

TEST_CASE("faces of the quadrant")
{
  auto q = Cone::from_generators(2, M({{1, 0}, {0, 1}}));
  auto faces = q.faces();
  CHECK(faces.size() == 4);
  auto x = Cone::from_generators(2, M({{1, 0}}));
  CHECK(x.is_face_of(q));
  auto diag = Cone::from_generators(2, M({{1, 1}}));
  CHECK_FALSE(diag.is_face_of(q));
}

TEST_CASE("hilbert basis small cases")
{
  CHECK(hilbert_basis(M({{1, 0}, {0, 1}}), M({{1, 0}, {0, 1}})) == M({{0, 1}, {1, 0}}));
  CHECK(hilbert_basis(M({{1, 0}, {1, 2}}), M({{1, 0}, {0, 1}})) == M({{1, 0}, {1, 1}, {1, 2}}));
  CHECK(hilbert_basis(M({{1, 0}, {1, 3}}), M({{1, 0}, {0, 1}})) ==
        M({{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
  CHECK_THROWS_AS(hilbert_basis(M({{1, 0}, {-1, 0}}), M({{1, 0}, {0, 1}})), Error);
}

TEST_CASE("hilbert basis in a sublattice")
{
  // quadrant in the lattice x + y even
  CHECK(hilbert_basis(M({{1, 0}, {0, 1}}), M({{1, 1}, {0, 2}})) == M({{0, 2}, {1, 1}, {2, 0}}));
}

TEST_CASE("serial and parallel candidate kernels agree")
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix rays;
    for (int i = 0; i < 4; ++i)
      rays.push_back(random_vec(rng, 3, 0, 4));
    auto c = Cone::from_generators(3, rays);
    if (c.dim() != 3 || !c.is_pointed())
      continue;
    CHECK(detail::pointed_hilbert_basis(rays, 3, true) == detail::pointed_hilbert_basis(rays, 3, false));
  }
}
