#pragma once

// Exact linear algebra over Z and Q on small dense matrices.

#include <optional>
#include <vector>

#include "logmod/integer.hpp"

namespace logmod::linalg {

std::size_t rank(const Matrix& rows, std::size_t ncols);

/// Basis of {x in Q^n : A x = 0}, each vector scaled to be primitive in Z^n.
/// This spans the kernel rationally; it is not necessarily a lattice basis of
/// the integer kernel.
Matrix kernel(const Matrix& a, std::size_t ncols);

/// Lattice basis of {x in Z^n : A x = 0}.
Matrix integer_kernel(const Matrix& a, std::size_t ncols);

/// Canonical row Hermite normal form of the lattice spanned by `gens`:
/// positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped, so the result is a basis.
Matrix hermite_basis(Matrix gens, std::size_t ncols);

/// Lattice basis of span_Q(rows) intersected with Z^n.
Matrix saturate_lattice(const Matrix& rows, std::size_t ncols);

/// Given a basis of a saturated sublattice, return a unimodular n x n matrix
/// whose first rows are exactly `rows`.
Matrix complete_basis(const Matrix& rows, std::size_t ncols);

/// Some solution of A x = b over Q, or nullopt if the system is inconsistent.
std::optional<std::vector<Rat>> solve(const Matrix& a, const Vec& b, std::size_t ncols);

/// Inverse of a square nonsingular integer matrix over Q.
std::vector<std::vector<Rat>> inverse(const Matrix& m);

Int determinant(const Matrix& m);

/// Integer coordinates c with c * basis = x, if they exist. `basis` rows must
/// be linearly independent.
std::optional<Vec> integer_coordinates(const Matrix& basis, const Vec& x, std::size_t ncols);

/// Rational coordinates c with c * basis = x, scaled by a positive integer
/// to be integral. Returns nullopt if x is not in the rational span.
std::optional<Vec> scaled_coordinates(const Matrix& basis, const Vec& x, std::size_t ncols);

/// Extended gcd: returns g = gcd(a, b) >= 0 and sets x, y with a x + b y = g.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

} // namespace logmod::linalg
