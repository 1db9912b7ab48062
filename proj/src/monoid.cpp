#include "logmod/monoid.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <set>

#include "logmod/error.hpp"
#include "logmod/hilbert.hpp"
#include "logmod/linalg.hpp"

namespace logmod {

namespace detail {

namespace {

// Membership by depth-first search over coefficients of the non-unit
// generators. A grading that vanishes on units and is positive on every
// non-unit generator fixes the total weight, and each residual must stay in
// the cone of the generators not yet used.
class MembershipIndex {
public:
  MembershipIndex(std::size_t n, const Matrix& gens)
    : n_(n), cone_(Cone::from_generators(n, gens)), gp_(n, gens)
  {
    Matrix units;
    for (const auto& g : gens) {
      bool in_lineality = std::all_of(cone_.facets().begin(), cone_.facets().end(),
                                      [&](const Vec& a) { return dot(a, g) == 0; });
      (in_lineality ? units : nonunits_).push_back(g);
    }
    unit_gens_ = units;
    units_ = Lattice(n, units);
    grading_ = zero_vec(n);
    for (const auto& a : cone_.facets())
      grading_ += a;
    // Heavier generators first keeps the branching factor small near the root.
    std::sort(nonunits_.begin(), nonunits_.end(), [&](const Vec& a, const Vec& b) {
      Int da = dot(grading_, a), db = dot(grading_, b);
      return da != db ? da > db : a < b;
    });
    for (const auto& g : nonunits_)
      grades_.push_back(dot(grading_, g));
    suffix_.resize(nonunits_.size() + 1);
  }

  const Cone& cone() const { return cone_; }
  const Lattice& gp() const { return gp_; }
  const Lattice& units() const { return units_; }
  const Matrix& nonunits() const { return nonunits_; }
  const Matrix& unit_generators() const { return unit_gens_; }

  bool contains(const Vec& x, bool saturated) const
  {
    if (x.size() != n_)
      fail(ErrorCode::DimensionMismatch, "vector " + to_string(x) + " has wrong length");
    if (!gp_.contains(x) || !cone_.contains(x))
      return false;
    if (saturated)
      return true;
    std::set<std::pair<std::size_t, Vec>> failed;
    return search(0, x, dot(grading_, x), failed);
  }

private:
  const Cone& suffix(std::size_t i) const
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!suffix_[i]) {
      Matrix g(nonunits_.begin() + static_cast<std::ptrdiff_t>(i), nonunits_.end());
      for (const auto& u : unit_gens_)
        g.push_back(u);
      suffix_[i] = Cone::from_generators(n_, g);
    }
    return *suffix_[i];
  }

  bool search(std::size_t i, const Vec& y, const Int& budget,
              std::set<std::pair<std::size_t, Vec>>& failed) const
  {
    const std::size_t k = nonunits_.size();
    if (i == k)
      return budget == 0 && units_.contains(y);
    if (i + 1 == k) {
      if (budget % grades_[i] != 0)
        return false;
      return units_.contains(y - Int(budget / grades_[i]) * nonunits_[i]);
    }
    if (failed.count({i, y}))
      return false;
    const Cone& rest = suffix(i + 1);
    for (Int c = budget / grades_[i]; c >= 0; --c) {
      Vec z = y - c * nonunits_[i];
      if (!rest.contains(z))
        continue;
      if (search(i + 1, z, budget - c * grades_[i], failed))
        return true;
    }
    failed.insert({i, y});
    return false;
  }

  std::size_t n_;
  Cone cone_;
  Lattice gp_;
  Lattice units_;
  Matrix unit_gens_;
  Matrix nonunits_;
  Vec grading_;
  std::vector<Int> grades_;
  mutable std::mutex mutex_;
  mutable std::vector<std::optional<Cone>> suffix_;
};

} // namespace

struct MonoidData {
  MonoidData(std::size_t n, Matrix gens, Saturation s)
    : ambient(n), generators(std::move(gens)), index(n, generators), saturation(s)
  {
  }

  std::size_t ambient;
  Matrix generators;
  MembershipIndex index;
  Saturation saturation;
  // -1 unknown, 0 no, 1 yes
  mutable std::atomic<int> saturated_state{-1};
};

} // namespace detail

namespace {

void check_lengths(std::size_t n, const Matrix& gens)
{
  for (const auto& g : gens)
    if (g.size() != n)
      fail(ErrorCode::DimensionMismatch, "generator " + to_string(g) + " has wrong length");
}

Matrix normalize_generators(std::size_t n, Matrix gens)
{
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Vec& g) { return is_zero(g); }),
             gens.end());
  sort_unique(gens);
  for (std::size_t i = gens.size(); i-- > 0;) {
    Matrix others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i)
        others.push_back(gens[j]);
    if (others.empty())
      break;
    detail::MembershipIndex idx(n, others);
    if (idx.contains(gens[i], false))
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return gens;
}

} // namespace

LatticeMonoid::LatticeMonoid(std::size_t n, Matrix generators)
{
  check_lengths(n, generators);
  data_ = std::make_shared<detail::MonoidData>(n, normalize_generators(n, std::move(generators)),
                                               Saturation::Unknown);
}

LatticeMonoid LatticeMonoid::from_minimal(std::size_t n, Matrix generators, Saturation saturated)
{
  check_lengths(n, generators);
  generators.erase(std::remove_if(generators.begin(), generators.end(),
                                  [](const Vec& g) { return is_zero(g); }),
                   generators.end());
  sort_unique(generators);
  return LatticeMonoid(std::make_shared<detail::MonoidData>(n, std::move(generators), saturated));
}

LatticeMonoid LatticeMonoid::free(std::size_t rank)
{
  return from_minimal(rank, Lattice::full(rank).basis(), Saturation::Yes);
}

std::size_t LatticeMonoid::ambient_rank() const { return data_->ambient; }
const Matrix& LatticeMonoid::generators() const { return data_->generators; }
const Lattice& LatticeMonoid::gp_lattice() const { return data_->index.gp(); }
const Lattice& LatticeMonoid::unit_lattice() const { return data_->index.units(); }
const Cone& LatticeMonoid::cone() const { return data_->index.cone(); }

Matrix LatticeMonoid::unit_generators() const
{
  Matrix u = data_->index.unit_generators();
  std::sort(u.begin(), u.end());
  return u;
}

Matrix LatticeMonoid::nonunit_generators() const
{
  Matrix u = data_->index.nonunits();
  std::sort(u.begin(), u.end());
  return u;
}

Saturation LatticeMonoid::saturation_flag() const { return data_->saturation; }

bool LatticeMonoid::is_saturated() const
{
  if (data_->saturation != Saturation::Unknown)
    return data_->saturation == Saturation::Yes;
  int state = data_->saturated_state.load();
  if (state < 0) {
    auto sat = saturated_generators(cone(), gp_lattice());
    bool ok = true;
    for (const auto& g : sat.all())
      if (!data_->index.contains(g, false)) {
        ok = false;
        break;
      }
    state = ok ? 1 : 0;
    data_->saturated_state.store(state);
  }
  return state == 1;
}

bool LatticeMonoid::contains(const Vec& x) const
{
  bool sat = data_->saturation == Saturation::Yes || data_->saturated_state.load() == 1;
  return data_->index.contains(x, sat);
}

bool LatticeMonoid::contains(const LatticeMonoid& other) const
{
  if (other.ambient_rank() != ambient_rank())
    return false;
  for (const auto& g : other.generators())
    if (!contains(g))
      return false;
  return true;
}

bool operator==(const LatticeMonoid& a, const LatticeMonoid& b)
{
  if (a.data_ == b.data_)
    return true;
  if (a.ambient_rank() != b.ambient_rank())
    return false;
  if (a.generators() == b.generators())
    return true;
  return a.contains(b) && b.contains(a);
}

std::string to_string(const LatticeMonoid& m)
{
  std::string s = "<";
  for (std::size_t i = 0; i < m.generators().size(); ++i) {
    if (i)
      s += ",";
    s += to_string(m.generators()[i]);
  }
  return s + ">";
}

LatticeMonoid saturate(const LatticeMonoid& m)
{
  if (m.saturation_flag() == Saturation::Yes)
    return m;
  auto sg = saturated_generators(m.cone(), m.gp_lattice());
  return LatticeMonoid::from_minimal(m.ambient_rank(), sg.all(), Saturation::Yes);
}

Vec Sharpening::project(const Vec& x) const
{
  auto c = gp.coordinates(x);
  if (!c)
    fail(ErrorCode::InvalidInput, "vector " + to_string(x) + " is not in the group lattice");
  return combine(*c, to_quotient, to_quotient.empty() ? 0 : to_quotient.front().size());
}

Sharpening sharpen(const LatticeMonoid& m)
{
  const std::size_t n = m.ambient_rank();
  const Lattice& gp = m.gp_lattice();
  const std::size_t d = gp.rank();

  Matrix unit_coords;
  for (const auto& u : m.unit_lattice().basis()) {
    auto c = gp.coordinates(u);
    ensure(c.has_value(), "sharpen: unit outside group lattice");
    unit_coords.push_back(*c);
  }
  Matrix sat = linalg::saturate_lattice(unit_coords, d);
  const std::size_t l = sat.size();
  Matrix w = linalg::complete_basis(sat, d);
  auto winv = linalg::inverse(w);

  Sharpening out{m.unit_lattice(), LatticeMonoid(), gp, Matrix(d, Vec(d - l))};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = l; j < d; ++j) {
      ensure(boost::multiprecision::denominator(winv[i][j]) == 1, "sharpen: non-unimodular basis");
      out.to_quotient[i][j - l] = boost::multiprecision::numerator(winv[i][j]);
    }
  (void)n;

  Matrix images;
  for (const auto& g : m.nonunit_generators())
    images.push_back(out.project(g));
  out.sharp = LatticeMonoid(d - l, std::move(images));
  return out;
}

bool is_face(const LatticeMonoid& m, const LatticeMonoid& face)
{
  if (face.ambient_rank() != m.ambient_rank())
    fail(ErrorCode::DimensionMismatch, "face and monoid live in different ambient lattices");
  if (!m.contains(face))
    return false;
  Cone tau = m.cone().face_containing(face.generators());
  for (const auto& g : m.generators())
    if (tau.contains(g) && !face.contains(g))
      return false;
  return true;
}

LatticeMonoid localize_at_face(const LatticeMonoid& m, const LatticeMonoid& face)
{
  if (!is_face(m, face))
    fail(ErrorCode::NotAFace, to_string(face) + " is not a face of " + to_string(m));
  Matrix gens = m.generators();
  for (const auto& f : face.generators())
    gens.push_back(-f);
  return LatticeMonoid(m.ambient_rank(), std::move(gens));
}

LatticeMonoid intersect_with_subgroup(const LatticeMonoid& m, const Lattice& subgroup)
{
  if (subgroup.ambient_rank() != m.ambient_rank())
    fail(ErrorCode::DimensionMismatch, "subgroup and monoid live in different ambient lattices");
  if (!m.is_saturated())
    fail(ErrorCode::NotSaturated, to_string(m) + " is not saturated");
  if (!m.gp_lattice().contains(subgroup))
    fail(ErrorCode::SubgroupNotContained, "subgroup is not contained in the group of the monoid");
  auto sg = saturated_generators(m.cone(), subgroup);
  return LatticeMonoid::from_minimal(m.ambient_rank(), sg.all(), Saturation::Yes);
}

} // namespace logmod
