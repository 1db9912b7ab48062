#include "logmod/hom.hpp"

#include "logmod/error.hpp"
#include "logmod/hilbert.hpp"
#include "logmod/linalg.hpp"

namespace logmod {

MonoidHom::MonoidHom(LatticeMonoid source, LatticeMonoid target, Matrix matrix)
  : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
  const std::size_t m = source_.ambient_rank();
  const std::size_t n = target_.ambient_rank();
  if (matrix_.size() != n)
    fail(ErrorCode::DimensionMismatch, "matrix needs " + std::to_string(n) + " rows");
  for (const auto& row : matrix_)
    if (row.size() != m)
      fail(ErrorCode::DimensionMismatch, "matrix rows need " + std::to_string(m) + " entries");
  for (const auto& g : source_.generators()) {
    Vec y = logmod::apply(matrix_, g);
    if (!target_.contains(y))
      fail(ErrorCode::IllFormedHom,
           "generator " + to_string(g) + " maps to " + to_string(y) + " outside the target");
  }
}

namespace {

Matrix images(const MonoidHom& h, const Matrix& xs)
{
  Matrix out;
  for (const auto& x : xs)
    out.push_back(h(x));
  return out;
}

// {x in gp(P) : h(x) in U_Q} as a lattice.
Lattice unit_preimage(const MonoidHom& h)
{
  const std::size_t n = h.source().ambient_rank();
  const Matrix& g = h.source().gp_lattice().basis();
  const Matrix& u = h.target().unit_lattice().basis();
  const std::size_t d = g.size(), l = u.size();
  // Columns: T g_1 .. T g_d, -u_1 .. -u_l; rows: target coordinates.
  Matrix tg = images(h, g);
  const std::size_t t = h.target().ambient_rank();
  Matrix a(t, Vec(d + l));
  for (std::size_t r = 0; r < t; ++r) {
    for (std::size_t j = 0; j < d; ++j)
      a[r][j] = tg[j][r];
    for (std::size_t j = 0; j < l; ++j)
      a[r][d + j] = -u[j][r];
  }
  Matrix xs;
  for (const auto& k : linalg::integer_kernel(a, d + l)) {
    Vec c(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(d));
    xs.push_back(combine(c, g, n));
  }
  return Lattice(n, xs);
}

} // namespace

LatticeMonoid preimage_of_target(const MonoidHom& h)
{
  const LatticeMonoid& p = h.source();
  const LatticeMonoid& q = h.target();
  const std::size_t n = p.ambient_rank();

  if (q.is_saturated()) {
    // Pull back the inequalities of cone(Q); the lattice is gp(P).
    Matrix ineqs = multiply(q.cone().facets(), h.matrix(), n);
    Matrix eqs = multiply(q.cone().equations(), h.matrix(), n);
    auto sg = saturated_generators(Cone::from_inequalities(n, ineqs, eqs), p.gp_lattice());
    return LatticeMonoid(n, sg.all());
  }

  // Non-saturated target: the preimage is the projection of the saturated
  // monoid {(a, c) : T(aG) = sum c_j q_j, c >= 0} to x = aG.
  const Matrix& g = p.gp_lattice().basis();
  const Matrix& qs = q.generators();
  const std::size_t d = g.size(), r = qs.size(), t = q.ambient_rank();
  Matrix tg = images(h, g);
  Matrix a(t, Vec(d + r));
  for (std::size_t row = 0; row < t; ++row) {
    for (std::size_t j = 0; j < d; ++j)
      a[row][j] = tg[j][row];
    for (std::size_t j = 0; j < r; ++j)
      a[row][d + j] = -qs[j][row];
  }
  Lattice lam(d + r, linalg::integer_kernel(a, d + r));
  Matrix nonneg;
  for (std::size_t j = 0; j < r; ++j)
    nonneg.push_back(unit_vec(d + r, d + j));
  auto sg = saturated_generators(Cone::from_inequalities(d + r, nonneg), lam);
  Matrix xs;
  for (const auto& y : sg.all()) {
    Vec c(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(d));
    xs.push_back(combine(c, g, n));
  }
  return LatticeMonoid(n, xs);
}

HomClassification classify_hom(const MonoidHom& h)
{
  const LatticeMonoid& p = h.source();
  const LatticeMonoid& q = h.target();
  HomClassification c;

  const std::size_t t = q.ambient_rank();
  Matrix gp_images = images(h, p.gp_lattice().basis());
  c.gp_injective = linalg::rank(gp_images, t) == p.gp_lattice().rank();
  // For integral monoids a kernel element x = a - b with a, b in P identifies
  // a and b, so injectivity on P is injectivity on gp(P).
  c.injective = c.gp_injective;
  c.gp_surjective = Lattice(t, gp_images) == q.gp_lattice();
  c.gp_iso = c.gp_injective && c.gp_surjective;

  c.local = true;
  for (const auto& g : p.nonunit_generators())
    if (q.unit_lattice().contains(h(g))) {
      c.local = false;
      break;
    }

  c.exact = p.contains(preimage_of_target(h));

  Matrix gen_images = images(h, p.generators());
  if (c.injective) {
    Cone image_cone = Cone::from_generators(t, gen_images);
    c.kummer = true;
    for (const auto& g : q.generators())
      if (!image_cone.contains(g)) {
        c.kummer = false;
        break;
      }
  }

  Matrix with_units = gen_images;
  for (const auto& u : q.unit_lattice().basis()) {
    with_units.push_back(u);
    with_units.push_back(-u);
  }
  bool onto = LatticeMonoid(t, with_units).contains(q);
  c.sharp_iso = onto && unit_preimage(h) == p.unit_lattice();
  return c;
}

} // namespace logmod
