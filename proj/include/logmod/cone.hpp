#pragma once

#include <vector>

#include "logmod/integer.hpp"

namespace logmod {

/// Rational polyhedral cone in Q^n, held in both representations.
///
/// V-representation: `rays()` are the primitive extreme rays of the pointed
/// part, chosen orthogonal to the lineality space, and `lineality()` is a
/// Hermite lattice basis of the lineality space intersected with Z^n.
///
/// H-representation: `facets()` are primitive facet normals a with a.x >= 0,
/// chosen inside the linear span of the cone, and `equations()` is a Hermite
/// lattice basis of the orthogonal complement of the span.
///
/// Both representations are canonical, so equality compares them directly.
class Cone {
public:
  Cone() = default;

  static Cone from_generators(std::size_t ambient_rank, const Matrix& generators);
  static Cone from_inequalities(std::size_t ambient_rank, const Matrix& inequalities,
                                const Matrix& equations = {});
  static Cone zero(std::size_t ambient_rank) { return from_generators(ambient_rank, {}); }
  static Cone whole(std::size_t ambient_rank) { return from_inequalities(ambient_rank, {}); }

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t dim() const { return ambient_ - equations_.size(); }
  std::size_t lineality_dim() const { return lineality_.size(); }
  bool is_pointed() const { return lineality_.empty(); }

  const Matrix& rays() const { return rays_; }
  const Matrix& lineality() const { return lineality_; }
  const Matrix& facets() const { return facets_; }
  const Matrix& equations() const { return equations_; }

  /// rays plus both signs of each lineality basis vector
  Matrix generators() const;

  bool contains(const Vec& x) const;
  bool contains(const Cone& other) const;
  /// x in the relative interior
  bool contains_relative_interior(const Vec& x) const;

  Cone intersect(const Cone& other) const;
  Cone dual() const;

  /// Smallest face containing every vector in `points` (which must lie in the cone).
  Cone face_containing(const Matrix& points) const;

  bool is_face_of(const Cone& other) const;

  /// All faces, including the cone itself and its minimal face (the lineality space).
  std::vector<Cone> faces() const;

  /// Integer vector in the relative interior (sum of the extreme rays).
  Vec interior_point() const;

  friend bool operator==(const Cone& a, const Cone& b)
  {
    return a.ambient_ == b.ambient_ && a.facets_ == b.facets_ && a.equations_ == b.equations_;
  }
  friend bool operator<(const Cone& a, const Cone& b)
  {
    if (a.rays_ != b.rays_)
      return a.rays_ < b.rays_;
    return a.lineality_ < b.lineality_;
  }

private:
  std::size_t ambient_ = 0;
  Matrix rays_;
  Matrix lineality_;
  Matrix facets_;
  Matrix equations_;
};

namespace detail {

struct RaysAndLineality {
  Matrix rays;
  Matrix lineality;
};

/// Extreme rays (orthogonal to the lineality space) and lineality lattice basis
/// of {x : A x >= 0, E x = 0}, by enumeration of active sets.
RaysAndLineality extreme_rays(std::size_t n, const Matrix& ineqs, const Matrix& eqs);

} // namespace detail

} // namespace logmod
