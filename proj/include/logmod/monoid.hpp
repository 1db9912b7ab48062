#pragma once

#include <memory>

#include "logmod/cone.hpp"
#include "logmod/integer.hpp"
#include "logmod/lattice.hpp"

namespace logmod {

enum class Saturation { Unknown, Yes, No };

namespace detail {
struct MonoidData;
}

/// A finitely generated submonoid of Z^n, given by generators.
///
/// On construction the generators are normalized: zero and duplicates are
/// dropped and every generator that is a nonnegative combination of the
/// remaining ones is removed (largest first, in lexicographic order). The
/// group lattice, unit lattice and cone are computed once and shared; the
/// object is immutable and safe to share across threads.
///
/// Equality is equality of monoids as subsets of Z^n.
class LatticeMonoid {
public:
  LatticeMonoid() : LatticeMonoid(0, {}) {}
  LatticeMonoid(std::size_t ambient_rank, Matrix generators);

  /// Skip normalization; the caller guarantees that no generator is a
  /// combination of the others.
  static LatticeMonoid from_minimal(std::size_t ambient_rank, Matrix generators,
                                    Saturation saturated = Saturation::Unknown);

  static LatticeMonoid free(std::size_t rank);

  std::size_t ambient_rank() const;
  const Matrix& generators() const;

  const Lattice& gp_lattice() const;
  /// The group of units M ∩ -M; it is generated by the generators lying in
  /// the lineality space of the cone.
  const Lattice& unit_lattice() const;
  const Cone& cone() const;

  Matrix unit_generators() const;
  Matrix nonunit_generators() const;

  Saturation saturation_flag() const;
  /// Decided exactly (cached); compares against the saturation when the flag
  /// is unknown.
  bool is_saturated() const;

  bool is_sharp() const { return unit_lattice().rank() == 0; }
  bool is_group() const { return nonunit_generators().empty(); }
  /// rank of gp(M) / M^x
  std::size_t sharp_rank() const { return gp_lattice().rank() - unit_lattice().rank(); }

  /// Exact membership: x is a nonnegative integer combination of generators.
  bool contains(const Vec& x) const;
  bool contains(const LatticeMonoid& other) const;

  friend bool operator==(const LatticeMonoid& a, const LatticeMonoid& b);

private:
  explicit LatticeMonoid(std::shared_ptr<const detail::MonoidData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::MonoidData> data_;
};

std::string to_string(const LatticeMonoid& m);

/// All x in gp(M) with some positive multiple in M; equals cone(M) ∩ gp(M).
LatticeMonoid saturate(const LatticeMonoid& m);

struct Sharpening {
  Lattice units;
  /// Image of M in gp(M)/units, re-embedded in Z^(rank gp - rank units).
  LatticeMonoid sharp;

  /// Coordinates of an element of gp(M) in the quotient lattice.
  Vec project(const Vec& x) const;

  Lattice gp;
  Matrix to_quotient;  // rank gp x (rank gp - rank units)
};

Sharpening sharpen(const LatticeMonoid& m);

/// M + (-F) for a face F of M. Throws NotAFace otherwise.
LatticeMonoid localize_at_face(const LatticeMonoid& m, const LatticeMonoid& face);

/// Is F a face of M: F ⊆ M and a + b in F with a, b in M forces a, b in F.
bool is_face(const LatticeMonoid& m, const LatticeMonoid& face);

/// Saturated monoid M ∩ L. M must be saturated (NotSaturated) and L a
/// subgroup of gp(M) (SubgroupNotContained).
LatticeMonoid intersect_with_subgroup(const LatticeMonoid& m, const Lattice& subgroup);

} // namespace logmod
