#pragma once

#include "logmod/integer.hpp"

namespace logmod {

/// A linear functional on the ambient lattice, read as a valuation on a
/// monoid it is nonnegative on.
struct MonomialValuation {
  Vec functional;
  bool primitive = true;

  static MonomialValuation of(Vec v)
  {
    MonomialValuation m{std::move(v), false};
    Int c = content(m.functional);
    m.primitive = c <= 1;
    return m;
  }

  friend bool operator==(const MonomialValuation&, const MonomialValuation&) = default;
};

} // namespace logmod
