#include "logmod/hilbert.hpp"

#include <algorithm>

#include "logmod/error.hpp"
#include "logmod/linalg.hpp"

namespace logmod {

Matrix SaturatedGenerators::all() const
{
  Matrix g = pointed;
  for (const auto& u : units) {
    g.push_back(u);
    g.push_back(-u);
  }
  return g;
}

namespace detail {

namespace {

std::vector<std::vector<std::size_t>> independent_subsets(const Matrix& rays, std::size_t m)
{
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (idx.size() == m) {
      Matrix v;
      for (auto i : idx)
        v.push_back(rays[i]);
      if (linalg::determinant(v) != 0)
        out.push_back(idx);
      return;
    }
    for (std::size_t i = start; i + (m - idx.size()) <= rays.size(); ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Nonzero lattice points of the half-open parallelepiped spanned by `v`.
void parallelepiped_points(const Matrix& v, std::size_t m, Matrix& out)
{
  Int det = linalg::determinant(v);
  auto inv = linalg::inverse(v);
  Matrix adj(m, Vec(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      adj[i][j] = boost::multiprecision::numerator(Rat(inv[i][j] * det));
  Matrix h = linalg::hermite_basis(v, m);
  Vec diag(m);
  for (std::size_t i = 0; i < m; ++i)
    diag[i] = h[i][i];

  // Coset representatives 0 <= x_i < diag_i of Z^m / (lattice of v).
  Vec x = zero_vec(m);
  while (true) {
    Vec p = x;
    for (std::size_t i = 0; i < m; ++i) {
      Int c = 0;
      for (std::size_t j = 0; j < m; ++j)
        c += x[j] * adj[j][i];
      Int f = floor_div(c, det);
      if (f != 0)
        p -= f * v[i];
    }
    if (!is_zero(p))
      out.push_back(std::move(p));
    std::size_t k = 0;
    while (k < m) {
      ++x[k];
      if (x[k] < diag[k])
        break;
      x[k] = 0;
      ++k;
    }
    if (k == m)
      break;
  }
}

} // namespace

Matrix pointed_hilbert_basis(const Matrix& generators, std::size_t m, bool parallel)
{
  if (m == 0)
    return {};
  Cone cone = Cone::from_generators(m, generators);
  ensure(cone.is_pointed() && cone.dim() == m, "pointed_hilbert_basis: cone must be full and pointed");
  const Matrix& rays = cone.rays();
  Vec grading = zero_vec(m);
  for (const auto& a : cone.facets())
    grading += a;

  auto subsets = independent_subsets(rays, m);
  std::vector<Matrix> local(subsets.size());

  auto work = [&](std::size_t s) {
    Matrix v;
    for (auto i : subsets[s])
      v.push_back(rays[i]);
    parallelepiped_points(v, m, local[s]);
  };
  const long count = static_cast<long>(subsets.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long s = 0; s < count; ++s)
      work(static_cast<std::size_t>(s));
  } else {
    for (long s = 0; s < count; ++s)
      work(static_cast<std::size_t>(s));
  }

  Matrix candidates = rays;
  for (auto& l : local)
    candidates.insert(candidates.end(), std::make_move_iterator(l.begin()),
                      std::make_move_iterator(l.end()));
  sort_unique(candidates);

  std::vector<std::pair<Int, std::size_t>> order;
  order.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    order.emplace_back(dot(grading, candidates[i]), i);
  std::sort(order.begin(), order.end());

  Matrix kept;
  std::vector<Int> kept_deg;
  for (const auto& [deg, i] : order) {
    const Vec& x = candidates[i];
    bool reducible = false;
    for (std::size_t k = 0; k < kept.size() && !reducible; ++k)
      if (kept_deg[k] < deg && cone.contains(x - kept[k]))
        reducible = true;
    if (!reducible) {
      kept.push_back(x);
      kept_deg.push_back(deg);
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

} // namespace detail

SaturatedGenerators saturated_generators(const Cone& cone0, const Lattice& lattice)
{
  const std::size_t n = cone0.ambient_rank();
  if (lattice.ambient_rank() != n)
    fail(ErrorCode::DimensionMismatch, "cone and lattice live in different ambient spaces");

  SaturatedGenerators out;
  if (lattice.rank() == 0)
    return out;

  // Restrict to span(lattice), then to the sublattice inside span(cone).
  Cone cone = cone0.intersect(Cone::from_inequalities(n, {}, lattice.orthogonal_complement()));
  Lattice sub = lattice.intersect_span(cone.generators());
  const std::size_t m = sub.rank();
  if (m == 0)
    return out;
  const Matrix& b = sub.basis();

  auto coords = [&](const Vec& x) {
    auto c = linalg::scaled_coordinates(b, x, n);
    ensure(c.has_value(), "saturated_generators: generator outside lattice span");
    return primitive(std::move(*c));
  };
  Matrix rays_m;
  for (const auto& r : cone.rays())
    rays_m.push_back(coords(r));
  Matrix lin_m;
  for (const auto& l : cone.lineality())
    lin_m.push_back(coords(l));
  lin_m = linalg::saturate_lattice(lin_m, m);
  const std::size_t l = lin_m.size();

  Matrix w = linalg::complete_basis(lin_m, m);
  auto winv = linalg::inverse(w);

  Matrix projected;
  for (const auto& r : rays_m) {
    std::vector<Rat> z(m, Rat(0));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < m; ++i)
        z[j] += Rat(r[i]) * winv[i][j];
    Int den = 1;
    for (std::size_t j = l; j < m; ++j)
      den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(z[j]));
    Vec p(m - l);
    for (std::size_t j = l; j < m; ++j)
      p[j - l] = boost::multiprecision::numerator(Rat(z[j] * den));
    projected.push_back(primitive(std::move(p)));
  }

  Matrix hb = detail::pointed_hilbert_basis(projected, m - l);

  Matrix complement(w.begin() + static_cast<std::ptrdiff_t>(l), w.end());
  Matrix lift = multiply(complement, b, n);
  for (const auto& h : hb)
    out.pointed.push_back(combine(h, lift, n));
  for (const auto& u : lin_m)
    out.units.push_back(combine(u, b, n));
  std::sort(out.pointed.begin(), out.pointed.end());
  out.units = linalg::hermite_basis(out.units, n);
  return out;
}

Matrix hilbert_basis(const Matrix& rays, const Matrix& lattice_basis)
{
  if (rays.empty() && lattice_basis.empty())
    return {};
  const std::size_t n = !rays.empty() ? rays.front().size() : lattice_basis.front().size();
  for (const auto& r : rays)
    if (r.size() != n)
      fail(ErrorCode::DimensionMismatch, "ray " + to_string(r) + " has wrong length");
  for (const auto& r : lattice_basis)
    if (r.size() != n)
      fail(ErrorCode::DimensionMismatch, "lattice vector " + to_string(r) + " has wrong length");
  if (linalg::rank(lattice_basis, n) != lattice_basis.size())
    fail(ErrorCode::InvalidInput, "lattice basis is not linearly independent");
  Cone cone = Cone::from_generators(n, rays);
  if (!cone.is_pointed())
    fail(ErrorCode::NotPointed, "cone contains a line; split off the unit lattice first");
  return saturated_generators(cone, Lattice(n, lattice_basis)).pointed;
}

} // namespace logmod
