#pragma once

// Brute-force reference implementations, kept deliberately separate from the
// fast paths: machine-word arithmetic, Caratheodory cone membership instead
// of facet inequalities, bounding-box enumeration instead of parallelepipeds,
// and bounded coefficient search instead of cone-pruned DFS. Each function
// returns nullopt when the input is outside the range it can decide (cone not
// pointed, entries too large, box too big).

#include <optional>
#include <vector>

#include "logmod/integer.hpp"

namespace logmod::oracle {

using I64 = long long;
using IVec = std::vector<I64>;
using IMatrix = std::vector<IVec>;

std::optional<IVec> narrow(const Vec& v);
std::optional<IMatrix> narrow(const Matrix& m);
Vec widen(const IVec& v);

/// Cone membership by Caratheodory: x lies in cone(G) iff it is a nonnegative
/// combination of some linearly independent subset of G spanning span(G).
class ConeMembership {
public:
  ConeMembership(std::size_t n, const IMatrix& generators);
  bool contains(const IVec& x) const;
  std::size_t rank() const { return rank_; }

private:
  struct Basis {
    std::vector<std::size_t> gens;
    std::vector<std::size_t> coords;
    I64 det;
    IMatrix adj;  // lambda * det = adj * x[coords]
  };
  std::size_t n_;
  IMatrix gens_;
  std::size_t rank_ = 0;
  std::vector<Basis> bases_;
};

/// Small integer functional positive on every generator, by exhaustive search.
std::optional<IVec> find_grading(const IMatrix& generators, std::size_t n);

/// Membership in the monoid generated by `gens` via exhaustive coefficient
/// search bounded by a grading. Requires a pointed monoid.
std::optional<bool> contains(const Matrix& gens, const Vec& x);

/// Sum over the generators of the sup-norm of their primitive coordinates in
/// `lattice_basis`; a box of this radius contains every Hilbert basis element.
std::optional<I64> ray_bound(const Matrix& gens, const Matrix& lattice_basis);

/// Irreducible nonzero points of cone(gens) ∩ L with L-coordinates in
/// [-bound, bound]^k, sorted. The cone must be pointed.
std::optional<Matrix> box_hilbert_basis(const Matrix& gens, const Matrix& lattice_basis, I64 bound);

/// Hilbert basis of cone(gens) ∩ lattice with the rigorous ray bound.
std::optional<Matrix> hilbert_basis(const Matrix& gens, const Matrix& lattice_basis);

/// Generators g of cone(gens) with -g in the cone (lineality test).
std::optional<Matrix> lineality_generators(const Matrix& gens, std::size_t n);

/// Primitive extreme rays of {v : v.g >= 0} for a full-rank generating set,
/// found among integer vectors with entries in [-bound, bound].
std::optional<Matrix> dual_rays(const Matrix& gens, std::size_t n, I64 bound);

/// First integer point of cone(sigma) with entries in [-bound, bound] that lies
/// in none of the subcones; nullopt result means every sampled point is covered.
std::optional<std::optional<Vec>> uncovered_point(const Matrix& sigma, const std::vector<Matrix>& subcones,
                                                  std::size_t n, I64 bound);

/// Searches gp(source) points with basis coordinates in [-bound, bound] for
/// x with T x in the target but x not in the source. Returns true when none is
/// found. Both monoids must be pointed.
std::optional<bool> exact_in_box(const Matrix& source, const Matrix& target, const Matrix& t,
                                 const Matrix& gp_basis, I64 bound);

/// Longest strict chain in a finite poset given by a "strictly below" relation,
/// by exhaustive enumeration of chains from every element.
std::size_t longest_chain(std::size_t count, const std::vector<std::vector<bool>>& below);

} // namespace logmod::oracle
