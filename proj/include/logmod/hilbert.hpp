#pragma once

#include "logmod/cone.hpp"
#include "logmod/integer.hpp"
#include "logmod/lattice.hpp"

namespace logmod {

/// Unique minimal generating set of cone(rays) ∩ lattice, sorted
/// lexicographically. The cone must be pointed (throws NotPointed) and the
/// lattice basis linearly independent (throws InvalidInput).
Matrix hilbert_basis(const Matrix& rays, const Matrix& lattice_basis);

/// Generators of the saturated monoid cone ∩ lattice, split into a basis of
/// the unit group (lineality ∩ lattice) and lifts of the Hilbert basis of the
/// pointed quotient. The monoid is generated by ±units together with `pointed`.
struct SaturatedGenerators {
  Matrix units;
  Matrix pointed;

  Matrix all() const;
};

SaturatedGenerators saturated_generators(const Cone& cone, const Lattice& lattice);

namespace detail {

/// Hilbert basis of a full-dimensional pointed cone in Z^m given by its
/// generators. Candidates come from the fundamental parallelepipeds of every
/// simplicial subcone spanned by extreme rays; those are then reduced by a
/// grading. `parallel` selects the OpenMP kernel for candidate generation.
Matrix pointed_hilbert_basis(const Matrix& generators, std::size_t m, bool parallel = true);

} // namespace detail

} // namespace logmod
