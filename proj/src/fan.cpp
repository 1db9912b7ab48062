#include "logmod/fan.hpp"

#include <algorithm>

#include "logmod/error.hpp"

namespace logmod {

bool meet_in_common_face(const Cone& a, const Cone& b)
{
  Cone c = a.intersect(b);
  return c.is_face_of(a) && c.is_face_of(b);
}

bool is_fan(const std::vector<Cone>& cones)
{
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j)
      if (!meet_in_common_face(cones[i], cones[j]))
        return false;
  return true;
}

namespace {

Cone with_inequality(const Cone& c, const Vec& a)
{
  Matrix ineqs = c.facets();
  ineqs.push_back(a);
  return Cone::from_inequalities(c.ambient_rank(), ineqs, c.equations());
}

// Point of relint(r) on the curve sum_i t^i g_i avoiding every piece. Each
// piece meeting relint(r) in a proper subset is hit for finitely many t.
Vec avoiding_point(const Cone& r, const std::vector<Cone>& pieces)
{
  Matrix gens = r.generators();
  const std::size_t n = r.ambient_rank();
  for (Int t = 1;; ++t) {
    Vec x = zero_vec(n);
    Int w = t;
    for (const auto& g : gens) {
      x += w * g;
      w *= t;
    }
    x = primitive(std::move(x));
    if (!r.contains_relative_interior(x))
      continue;
    bool hit = std::any_of(pieces.begin(), pieces.end(), [&](const Cone& p) { return p.contains(x); });
    if (!hit)
      return x;
  }
}

} // namespace

SupportCheck check_support(const Cone& sigma, const std::vector<Cone>& pieces)
{
  const std::size_t n = sigma.ambient_rank();
  for (const auto& p : pieces) {
    if (p.ambient_rank() != n)
      fail(ErrorCode::DimensionMismatch, "piece lives in a different ambient space");
    if (!sigma.contains(p))
      fail(ErrorCode::InvalidSubcone, "piece is not contained in the ambient cone");
  }
  SupportCheck out;
  const std::size_t d = sigma.dim();
  if (d == 0) {
    out.covered = true;
    return out;
  }

  std::vector<Cone> remaining{sigma};
  for (const auto& p : pieces) {
    if (p.dim() != d)
      continue;
    std::vector<Cone> next;
    for (const auto& r : remaining) {
      if (r.intersect(p).dim() != d) {
        next.push_back(r);
        continue;
      }
      // r minus int(p) = union of r ∩ {a_1..a_{k-1} >= 0, a_k <= 0}.
      Cone acc = r;
      for (const auto& a : p.facets()) {
        Cone piece = with_inequality(acc, -a);
        if (piece.dim() == d)
          next.push_back(piece);
        acc = with_inequality(acc, a);
        if (acc.dim() != d)
          break;
      }
    }
    remaining = std::move(next);
    if (remaining.empty())
      break;
  }
  if (remaining.empty()) {
    out.covered = true;
    return out;
  }
  out.witness = avoiding_point(remaining.front(), pieces);
  return out;
}

std::vector<Cone> maximal_cones(std::vector<Cone> cones)
{
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  std::vector<Cone> out;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool inside = false;
    for (std::size_t j = 0; j < cones.size() && !inside; ++j)
      if (i != j && cones[j].contains(cones[i]))
        inside = true;
    if (!inside)
      out.push_back(cones[i]);
  }
  return out;
}

} // namespace logmod
