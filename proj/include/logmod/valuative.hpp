#pragma once

#include <optional>
#include <vector>

#include "logmod/fan.hpp"
#include "logmod/monoid.hpp"
#include "logmod/valuation.hpp"

namespace logmod {

/// Primitive extreme rays of the dual cone of M, taken inside span(gp(M))
/// (functionals are only determined on gp(M)). Empty for groups.
Matrix dual_cone_rays(const LatticeMonoid& m);

/// V = {x in gp(P) : <v, x> >= 0} for a functional v nonnegative on P.
struct ValuativeSubmonoid {
  LatticeMonoid base;
  MonomialValuation valuation;
  LatticeMonoid monoid;
  /// v vanishes on gp(P), so V is the whole group
  bool trivial = false;
};

/// Half-space monoid of v over P. Throws InvalidInput if v is negative on P.
ValuativeSubmonoid half_space_submonoid(const LatticeMonoid& p, const Vec& v);

/// A valuative V ⊇ P with V^x ∩ P = P^x, cut out by a functional strictly
/// positive on the non-units of P. P must be saturated (NotSaturated).
ValuativeSubmonoid valuative_extension(const LatticeMonoid& p);

/// Sharp rank at most one.
bool qc_finite_subcover_check(const LatticeMonoid& p);

struct ValuationCover {
  bool covered = false;
  std::optional<MonomialValuation> witness;
};

/// Either every valuation of P factors through a member of the family, or a
/// primitive valuation, positive on the non-units of P, through none of them.
ValuationCover witness_uncovered_valuation(const LatticeMonoid& p,
                                           const std::vector<ValuativeSubmonoid>& family);

/// Does the union of the subcones equal cone(sigma_rays)? Subcones must lie
/// inside it (InvalidSubcone).
SupportCheck covers_monomial_points(std::size_t ambient_rank, const Matrix& sigma_rays,
                                    const std::vector<Cone>& subcones);

} // namespace logmod
