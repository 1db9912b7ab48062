#include "logmod/zr.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "logmod/error.hpp"
#include "logmod/hilbert.hpp"

namespace logmod {

namespace {

std::string cone_label(const Cone& c)
{
  std::string s = "cone(";
  for (std::size_t i = 0; i < c.rays().size(); ++i)
    s += (i ? "," : "") + to_string(c.rays()[i]);
  if (!c.lineality().empty()) {
    s += c.rays().empty() ? "" : ";";
    s += "lin";
    for (const auto& l : c.lineality())
      s += to_string(l);
  }
  return s + ")";
}

} // namespace

RationalFan::RationalFan(Cone support, std::vector<Cone> maximal) : support_(std::move(support))
{
  for (const auto& c : maximal) {
    if (c.ambient_rank() != support_.ambient_rank())
      fail(ErrorCode::DimensionMismatch, "fan cone lives in a different ambient space");
    if (!support_.contains(c))
      fail(ErrorCode::InvalidInput, cone_label(c) + " is not inside the support cone");
  }
  cones_ = maximal_cones(std::move(maximal));
  if (!is_fan(cones_))
    fail(ErrorCode::InvalidInput, "cones do not meet in common faces");
}

RationalFan RationalFan::of_cone(const Cone& sigma) { return RationalFan(sigma, {sigma}); }

std::vector<Cone> RationalFan::faces() const
{
  std::vector<Cone> all;
  for (const auto& c : cones_)
    for (auto& f : c.faces())
      all.push_back(std::move(f));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::stable_sort(all.begin(), all.end(), [](const Cone& a, const Cone& b) { return a.dim() < b.dim(); });
  return all;
}

std::size_t poset_krull_dim(const RationalFan& fan)
{
  auto faces = fan.faces();
  if (faces.empty())
    return 0;
  // faces are sorted by dimension, so strict containment only goes forward.
  std::vector<std::size_t> longest(faces.size(), 1);
  std::size_t best = 1;
  for (std::size_t j = 0; j < faces.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i)
      if (faces[i].dim() < faces[j].dim() && faces[j].contains(faces[i]))
        longest[j] = std::max(longest[j], longest[i] + 1);
    best = std::max(best, longest[j]);
  }
  return best - 1;
}

SubdivisionTower::SubdivisionTower(LatticeMonoid base) : base_(std::move(base))
{
  stages_.push_back({{}, std::nullopt, RationalFan::of_cone(dual_cone(base_)), {}});
}

LatticeMonoid SubdivisionTower::chart_monoid(std::size_t k) const
{
  const auto& cones = current().cones();
  if (k >= cones.size())
    fail(ErrorCode::InvalidInput, "chart index " + std::to_string(k) + " out of range");
  auto sg = saturated_generators(cones[k].dual(), base_.gp_lattice());
  return LatticeMonoid::from_minimal(base_.ambient_rank(), sg.all(), Saturation::Yes);
}

std::vector<Cone> common_refinement(const std::vector<Cone>& a, const std::vector<Cone>& b, std::size_t dim,
                                    bool parallel)
{
  const long total = static_cast<long>(a.size() * b.size());
  std::vector<std::optional<Cone>> slots(static_cast<std::size_t>(total));
  auto work = [&](long k) {
    std::size_t i = static_cast<std::size_t>(k) / b.size(), j = static_cast<std::size_t>(k) % b.size();
    Cone c = a[i].intersect(b[j]);
    if (c.dim() == dim)
      slots[static_cast<std::size_t>(k)] = std::move(c);
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < total; ++k)
      work(k);
  } else {
    for (long k = 0; k < total; ++k)
      work(k);
  }
  std::vector<Cone> out;
  for (auto& s : slots)
    if (s)
      out.push_back(std::move(*s));
  return maximal_cones(std::move(out));
}

SubdivisionTower subdivision_stage(const SubdivisionTower& tower, const MonoidIdeal& ideal,
                                   std::optional<std::size_t> chart, bool parallel)
{
  const RationalFan& prev = tower.current();
  const std::vector<Cone>& old = prev.cones();
  const std::size_t dim = prev.support().dim();

  std::vector<Cone> cones;
  if (!chart) {
    if (!(ideal.base() == tower.base()))
      fail(ErrorCode::BaseMismatch, "ideal is not an ideal of the tower's base monoid");
    std::vector<Cone> blowup;
    for (const auto& c : blowup_charts(ideal, parallel))
      if (c.cone.dim() == dim)
        blowup.push_back(c.cone);
    cones = common_refinement(old, blowup, dim, parallel);
  } else {
    if (!(ideal.base() == tower.chart_monoid(*chart)))
      fail(ErrorCode::BaseMismatch, "ideal is not an ideal of the selected chart monoid");
    for (std::size_t i = 0; i < old.size(); ++i)
      if (i != *chart)
        cones.push_back(old[i]);
    for (const auto& c : blowup_charts(ideal, parallel))
      if (c.cone.dim() == dim)
        cones.push_back(c.cone);
    cones = maximal_cones(std::move(cones));
    if (!is_fan(cones))
      fail(ErrorCode::IncompatibleSubdivision,
           "subdividing chart " + std::to_string(*chart) + " breaks the fan condition with its neighbours");
  }

  TowerStage stage{ideal.generators(), chart, RationalFan(prev.support(), cones), {}};
  for (const auto& c : stage.fan.cones()) {
    std::size_t p = old.size();
    for (std::size_t i = 0; i < old.size() && p == old.size(); ++i)
      if (old[i].contains(c))
        p = i;
    if (p == old.size())
      fail(ErrorCode::NotRefining, cone_label(c) + " is not contained in a cone of the previous stage");
    stage.parent.push_back(p);
  }
  ensure(check_support(prev.support(), stage.fan.cones()).covered, "subdivision lost part of the support");

  SubdivisionTower out = tower;
  out.push(std::move(stage));
  return out;
}

std::string fan_to_dot(const RationalFan& fan)
{
  auto faces = fan.faces();
  std::ostringstream os;
  os << "digraph fan {\n";
  for (std::size_t i = 0; i < faces.size(); ++i)
    os << "  f" << i << " [label=\"" << cone_label(faces[i]) << "\"];\n";
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = 0; j < faces.size(); ++j)
      if (faces[i].dim() + 1 == faces[j].dim() && faces[j].contains(faces[i]))
        os << "  f" << i << " -> f" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string tower_to_dot(const SubdivisionTower& tower)
{
  std::ostringstream os;
  os << "digraph tower {\n";
  const auto& stages = tower.stages();
  for (std::size_t s = 0; s < stages.size(); ++s) {
    const auto& cones = stages[s].fan.cones();
    for (std::size_t i = 0; i < cones.size(); ++i) {
      os << "  s" << s << "c" << i << " [label=\"" << s << ": " << cone_label(cones[i]) << "\"];\n";
      if (s > 0)
        os << "  s" << s - 1 << "c" << stages[s].parent[i] << " -> s" << s << "c" << i << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

Stratification::Stratification(std::vector<Stratum> strata) : strata_(std::move(strata))
{
  std::set<std::string> names;
  for (const auto& s : strata_) {
    if (!names.insert(s.name).second)
      fail(ErrorCode::InvalidInput, "duplicate stratum name " + s.name);
    if (!s.char_monoid.is_sharp())
      fail(ErrorCode::InvalidInput, "characteristic monoid of " + s.name + " has units");
  }
}

std::size_t log_dim(const Stratification& s)
{
  if (s.strata().empty())
    fail(ErrorCode::EmptyStratification, "log dimension of an empty stratification");
  std::size_t best = 0;
  for (const auto& st : s.strata()) {
    std::size_t r = st.char_monoid.gp_lattice().rank();
    best = std::max(best, st.closure_dim + (r > 0 ? r - 1 : 0));
  }
  return best;
}

Stratification toric_stratification(const LatticeMonoid& p)
{
  if (!p.is_sharp())
    fail(ErrorCode::InvalidInput, to_string(p) + " is not sharp");
  const Matrix& gens = p.generators();
  std::vector<Stratum> strata;
  for (const auto& f : p.cone().faces()) {
    Matrix face_gens;
    std::string name = "face[";
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (f.contains(gens[i])) {
        if (!face_gens.empty())
          name += ",";
        name += std::to_string(i);
        face_gens.push_back(gens[i]);
      }
    name += "]";
    LatticeMonoid face = LatticeMonoid::from_minimal(p.ambient_rank(), face_gens);
    auto ch = sharpen(localize_at_face(p, face)).sharp;
    strata.push_back({name, face.gp_lattice().rank(), ch});
  }
  return Stratification(std::move(strata));
}

} // namespace logmod
