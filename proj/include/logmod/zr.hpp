#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logmod/fan.hpp"
#include "logmod/ideal.hpp"
#include "logmod/monoid.hpp"

namespace logmod {

/// A fan given by its maximal cones, all inside a support cone. The fan
/// condition and containment are checked on construction (InvalidInput).
class RationalFan {
public:
  RationalFan() = default;
  RationalFan(Cone support, std::vector<Cone> maximal);

  /// The fan of faces of a single cone.
  static RationalFan of_cone(const Cone& sigma);

  std::size_t ambient_rank() const { return support_.ambient_rank(); }
  const Cone& support() const { return support_; }
  /// Maximal cones, sorted.
  const std::vector<Cone>& cones() const { return cones_; }
  /// Every face of every maximal cone, deduplicated and sorted by dimension.
  std::vector<Cone> faces() const;

  friend bool operator==(const RationalFan& a, const RationalFan& b)
  {
    return a.support_ == b.support_ && a.cones_ == b.cones_;
  }

private:
  Cone support_;
  std::vector<Cone> cones_;
};

/// Longest strict chain of faces under inclusion, minus one.
std::size_t poset_krull_dim(const RationalFan& fan);

struct TowerStage {
  /// generators of the ideal applied (empty for stage 0)
  Matrix ideal;
  /// index of the subdivided cone of the previous stage, if local
  std::optional<std::size_t> chart;
  RationalFan fan;
  /// parent[i]: cone of the previous stage containing cone i
  std::vector<std::size_t> parent;
};

class SubdivisionTower {
public:
  /// Stage 0: the dual cone of the base with its faces.
  explicit SubdivisionTower(LatticeMonoid base);

  const LatticeMonoid& base() const { return base_; }
  const std::vector<TowerStage>& stages() const { return stages_; }
  const RationalFan& current() const { return stages_.back().fan; }

  /// Lattice points of the dual of the k-th maximal cone of the current stage.
  LatticeMonoid chart_monoid(std::size_t k) const;

  void push(TowerStage stage) { stages_.push_back(std::move(stage)); }

private:
  LatticeMonoid base_;
  std::vector<TowerStage> stages_;
};

/// Refine the current stage by the blow-up of `ideal`. Without a selector
/// the ideal lives on the base and the new fan is the common refinement; with
/// selector k it lives on the chart monoid of cone k and only that cone is
/// subdivided (IncompatibleSubdivision when the result is not a fan).
SubdivisionTower subdivision_stage(const SubdivisionTower& tower, const MonoidIdeal& ideal,
                                   std::optional<std::size_t> chart = std::nullopt, bool parallel = true);

/// Maximal cones of the full-dimensional pairwise intersections.
std::vector<Cone> common_refinement(const std::vector<Cone>& a, const std::vector<Cone>& b,
                                    std::size_t dim, bool parallel = true);

std::string fan_to_dot(const RationalFan& fan);
std::string tower_to_dot(const SubdivisionTower& tower);

struct Stratum {
  std::string name;
  std::size_t closure_dim = 0;
  LatticeMonoid char_monoid;
};

/// Strata with unique names and sharp characteristic monoids (InvalidInput).
class Stratification {
public:
  explicit Stratification(std::vector<Stratum> strata);
  const std::vector<Stratum>& strata() const { return strata_; }

private:
  std::vector<Stratum> strata_;
};

/// max over strata of closure_dim + max(rank gp(char) - 1, 0).
/// Throws EmptyStratification for no strata.
std::size_t log_dim(const Stratification& s);

/// Torus orbits of Spec Z[P] for sharp P: one stratum per face F with
/// closure dimension rank F and characteristic monoid P localized at F, sharpened.
Stratification toric_stratification(const LatticeMonoid& p);

} // namespace logmod
