#pragma once

#include <optional>
#include <vector>

#include "logmod/cone.hpp"

namespace logmod {

/// a ∩ b is a face of both.
bool meet_in_common_face(const Cone& a, const Cone& b);

/// Every pair of cones meets in a common face.
bool is_fan(const std::vector<Cone>& cones);

struct SupportCheck {
  bool covered = false;
  /// primitive point of sigma outside every piece, when not covered
  std::optional<Vec> witness;
};

/// Exact test of sigma ⊆ union of pieces. Each piece must lie in sigma.
///
/// Pieces of lower dimension than sigma are ignored while splitting: sigma is
/// cut by the facet half-spaces of each full-dimensional piece in turn, and
/// whatever full-dimensional remainder survives carries a witness.
SupportCheck check_support(const Cone& sigma, const std::vector<Cone>& pieces);

/// Maximal cones of the set (cones not contained in another), deduplicated and sorted.
std::vector<Cone> maximal_cones(std::vector<Cone> cones);

} // namespace logmod
