#include "logmod/valuative.hpp"

#include <algorithm>

#include "logmod/error.hpp"
#include "logmod/hilbert.hpp"

namespace logmod {

namespace {

Cone dual_in_span(const LatticeMonoid& m)
{
  return Cone::from_inequalities(m.ambient_rank(), m.generators(),
                                 m.gp_lattice().orthogonal_complement());
}

// v = c w on gp(P) for some c >= 0.
bool nonneg_multiple_on(const Lattice& gp, const Vec& v, const Vec& w)
{
  Vec a, b;
  for (const auto& x : gp.basis()) {
    a.push_back(dot(v, x));
    b.push_back(dot(w, x));
  }
  if (is_zero(a))
    return true;
  if (is_zero(b))
    return false;
  // a = c b with c > 0: all 2x2 minors vanish and signs agree.
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i])
        return false;
    if (a[i] != 0 && (a[i] > 0) != (b[i] > 0))
      return false;
    if ((a[i] == 0) != (b[i] == 0))
      return false;
  }
  return true;
}

} // namespace

Matrix dual_cone_rays(const LatticeMonoid& m)
{
  Cone d = dual_in_span(m);
  Matrix rays = d.rays();
  std::sort(rays.begin(), rays.end());
  return rays;
}

ValuativeSubmonoid half_space_submonoid(const LatticeMonoid& p, const Vec& v)
{
  const std::size_t n = p.ambient_rank();
  if (v.size() != n)
    fail(ErrorCode::DimensionMismatch, "functional " + to_string(v) + " has wrong length");
  for (const auto& g : p.generators())
    if (dot(v, g) < 0)
      fail(ErrorCode::InvalidInput, "functional " + to_string(v) + " is negative on " + to_string(g));
  const Lattice& gp = p.gp_lattice();
  Cone half = Cone::from_inequalities(n, {v}, gp.orthogonal_complement());
  auto sg = saturated_generators(half, gp);
  ValuativeSubmonoid out{p, MonomialValuation::of(v),
                         LatticeMonoid::from_minimal(n, sg.all(), Saturation::Yes), false};
  out.trivial = std::all_of(gp.basis().begin(), gp.basis().end(),
                            [&](const Vec& b) { return dot(v, b) == 0; });
  return out;
}

ValuativeSubmonoid valuative_extension(const LatticeMonoid& p)
{
  if (!p.is_saturated())
    fail(ErrorCode::NotSaturated, to_string(p) + " is not saturated");
  const std::size_t n = p.ambient_rank();
  Matrix rays = dual_cone_rays(p);
  if (p.is_group() || rays.empty())
    return half_space_submonoid(p, zero_vec(n));

  Vec v = zero_vec(n);
  for (const auto& r : rays)
    v += r;
  Matrix nonunits = p.nonunit_generators();
  auto vanishes_somewhere = [&](const Vec& w) {
    return std::any_of(nonunits.begin(), nonunits.end(), [&](const Vec& g) { return dot(w, g) == 0; });
  };
  if (vanishes_somewhere(v))
    v += rays.front();
  v = primitive(std::move(v));
  ensure(!vanishes_somewhere(v), "valuative_extension: functional not strictly positive");

  ValuativeSubmonoid out = half_space_submonoid(p, v);
  const LatticeMonoid& big = out.monoid;
  ensure(big.contains(p), "valuative_extension: V does not contain P");
  ensure(big.gp_lattice() == p.gp_lattice(), "valuative_extension: group changed");
  ensure(big.sharp_rank() <= 1, "valuative_extension: V is not valuative");
  for (const auto& g : p.generators()) {
    bool unit_in_v = big.unit_lattice().contains(g);
    bool unit_in_p = p.unit_lattice().contains(g);
    ensure(unit_in_v == unit_in_p, "valuative_extension: V^x ∩ P differs from P^x");
  }
  return out;
}

bool qc_finite_subcover_check(const LatticeMonoid& p) { return p.sharp_rank() <= 1; }

ValuationCover witness_uncovered_valuation(const LatticeMonoid& p,
                                           const std::vector<ValuativeSubmonoid>& family)
{
  const std::size_t n = p.ambient_rank();
  for (const auto& f : family)
    if (!(f.base == p))
      fail(ErrorCode::InvalidInput, "family member has a different base monoid");
  const Lattice& gp = p.gp_lattice();
  auto through_member = [&](const Vec& v) {
    return std::any_of(family.begin(), family.end(), [&](const ValuativeSubmonoid& f) {
      return nonneg_multiple_on(gp, v, f.valuation.functional);
    });
  };

  ValuationCover out;
  const std::size_t rank = p.sharp_rank();
  Matrix rays = dual_cone_rays(p);
  if (rank == 0) {
    out.covered = !family.empty();
    if (!out.covered)
      out.witness = MonomialValuation::of(zero_vec(n));
    return out;
  }
  if (rank == 1) {
    const Vec& r = rays.front();
    out.covered = through_member(r);
    if (!out.covered)
      out.witness = MonomialValuation::of(r);
    return out;
  }

  Vec w = zero_vec(n);
  for (const auto& r : rays)
    w += r;
  std::optional<Vec> found;
  if (!through_member(w))
    found = w;
  for (Int k = 1; !found; ++k)
    for (const auto& r : rays) {
      Vec c = w + k * r;
      if (!through_member(c)) {
        found = c;
        break;
      }
    }
  Vec v = primitive(*found);
  for (const auto& g : p.nonunit_generators())
    ensure(dot(v, g) > 0, "witness is not strictly positive on the monoid");
  ensure(!through_member(v), "witness factors through a family member");
  out.witness = MonomialValuation::of(v);
  return out;
}

SupportCheck covers_monomial_points(std::size_t ambient_rank, const Matrix& sigma_rays,
                                    const std::vector<Cone>& subcones)
{
  for (const auto& r : sigma_rays)
    if (r.size() != ambient_rank)
      fail(ErrorCode::DimensionMismatch, "ray " + to_string(r) + " has wrong length");
  Cone sigma = Cone::from_generators(ambient_rank, sigma_rays);
  auto out = check_support(sigma, subcones);
  if (out.witness) {
    ensure(sigma.contains(*out.witness), "cover witness outside sigma");
    for (const auto& c : subcones)
      ensure(!c.contains(*out.witness), "cover witness inside a subcone");
  }
  return out;
}

} // namespace logmod
