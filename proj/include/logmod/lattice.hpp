#pragma once

#include <optional>

#include "logmod/integer.hpp"

namespace logmod {

/// A subgroup of Z^n, stored by its canonical row Hermite basis. Two lattices
/// are equal iff their bases are equal.
class Lattice {
public:
  Lattice() = default;
  Lattice(std::size_t ambient_rank, Matrix generators);

  static Lattice full(std::size_t ambient_rank);
  static Lattice zero(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Vec& x) const;
  bool contains(const Lattice& other) const;

  /// Integer coordinates with respect to `basis()`.
  std::optional<Vec> coordinates(const Vec& x) const;

  /// span_Q(L) intersected with Z^n.
  Lattice saturation() const;
  bool is_saturated() const { return saturation() == *this; }

  /// Lattice basis of the vectors in Z^n orthogonal to every element.
  Matrix orthogonal_complement() const;

  /// L intersected with the rational span of `rows`.
  Lattice intersect_span(const Matrix& rows) const;

  friend bool operator==(const Lattice& a, const Lattice& b)
  {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

} // namespace logmod
