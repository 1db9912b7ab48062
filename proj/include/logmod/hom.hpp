#pragma once

#include "logmod/monoid.hpp"

namespace logmod {

/// Integer-linear map Z^m -> Z^n (matrix is n x m) sending every source
/// generator into the target monoid. Checked on construction.
class MonoidHom {
public:
  MonoidHom(LatticeMonoid source, LatticeMonoid target, Matrix matrix);

  const LatticeMonoid& source() const { return source_; }
  const LatticeMonoid& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  Vec operator()(const Vec& x) const { return logmod::apply(matrix_, x); }

private:
  LatticeMonoid source_;
  LatticeMonoid target_;
  Matrix matrix_;
};

struct HomClassification {
  bool injective = false;
  bool gp_injective = false;
  bool gp_surjective = false;
  bool gp_iso = false;
  bool local = false;
  bool exact = false;
  bool kummer = false;
  bool sharp_iso = false;

  friend bool operator==(const HomClassification&, const HomClassification&) = default;
};

HomClassification classify_hom(const MonoidHom& h);

/// {x in gp(source) : h(x) in target}, the preimage of the target.
LatticeMonoid preimage_of_target(const MonoidHom& h);

} // namespace logmod
