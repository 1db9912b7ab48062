#pragma once

#include <vector>

#include "logmod/cone.hpp"
#include "logmod/monoid.hpp"
#include "logmod/valuation.hpp"

namespace logmod {

/// A finitely generated ideal I = generators + base of a monoid.
///
/// Generators are normalized on construction: g is dropped when g - g' lies
/// in the base for another generator g'. Of several generators differing by
/// units only the lexicographically smallest survives. Every generator must
/// lie in the base (InvalidInput).
class MonoidIdeal {
public:
  MonoidIdeal(LatticeMonoid base, Matrix generators);

  static MonoidIdeal unit(const LatticeMonoid& base);
  /// generated by the non-unit generators of the base
  static MonoidIdeal maximal(const LatticeMonoid& base);

  const LatticeMonoid& base() const { return base_; }
  const Matrix& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }

  bool contains(const Vec& x) const;

  friend bool operator==(const MonoidIdeal& a, const MonoidIdeal& b)
  {
    return a.base_ == b.base_ && a.generators_ == b.generators_;
  }

private:
  LatticeMonoid base_;
  Matrix generators_;
};

/// Ideal generated by pairwise sums. Throws BaseMismatch for different bases.
MonoidIdeal ideal_product(const MonoidIdeal& i, const MonoidIdeal& j);

struct BlowupChart {
  Vec generator;
  /// saturation of base + {b - a : b in I}
  LatticeMonoid monoid;
  /// {v in the dual cone : <a, v> <= <b, v> for every generator b}
  Cone cone;
  /// cone has lower dimension than the dual cone of the base
  bool redundant = false;
};

/// Chart of the blow-up at any element a of I.
BlowupChart chart_at(const MonoidIdeal& ideal, const Vec& a);

/// One chart per generator, in generator order. The chart cones are checked
/// to form a fan whose support is the dual cone of the base.
std::vector<BlowupChart> blowup_charts(const MonoidIdeal& ideal, bool parallel = true);

/// {v : <v, g> >= 0 for the base generators}, lineality included.
Cone dual_cone(const LatticeMonoid& m);

struct GpIsoFactorization {
  MonoidIdeal ideal;
  Vec s;
};

/// For saturated Q ⊆ P with gp(Q) = gp(P): an ideal I of Q and s in I whose
/// blow-up chart at s is P.
GpIsoFactorization factor_gp_iso_extension(const LatticeMonoid& q, const LatticeMonoid& p);

/// Chart of the generator minimizing <a, v>, ties to the lexicographically
/// smallest generator. v must be nonnegative on the base.
BlowupChart lift_valuative_through_blowup(const MonoidIdeal& ideal, const MonomialValuation& v);

} // namespace logmod
