#include "logmod/ideal.hpp"

#include <algorithm>

#include "logmod/error.hpp"
#include "logmod/fan.hpp"

namespace logmod {

namespace {

void check_ambient(std::size_t n, const Vec& x)
{
  if (x.size() != n)
    fail(ErrorCode::DimensionMismatch, "vector " + to_string(x) + " has wrong length");
}

} // namespace

MonoidIdeal::MonoidIdeal(LatticeMonoid base, Matrix generators) : base_(std::move(base))
{
  const std::size_t n = base_.ambient_rank();
  for (const auto& g : generators) {
    check_ambient(n, g);
    if (!base_.contains(g))
      fail(ErrorCode::InvalidInput, "ideal generator " + to_string(g) + " is not in the base monoid");
  }
  sort_unique(generators);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < generators.size() && !dominated; ++j) {
      if (i == j || !base_.contains(generators[i] - generators[j]))
        continue;
      bool equivalent = base_.contains(generators[j] - generators[i]);
      dominated = !equivalent || generators[j] < generators[i];
    }
    if (!dominated)
      generators_.push_back(generators[i]);
  }
}

MonoidIdeal MonoidIdeal::unit(const LatticeMonoid& base)
{
  return MonoidIdeal(base, {zero_vec(base.ambient_rank())});
}

MonoidIdeal MonoidIdeal::maximal(const LatticeMonoid& base)
{
  return MonoidIdeal(base, base.nonunit_generators());
}

bool MonoidIdeal::contains(const Vec& x) const
{
  check_ambient(base_.ambient_rank(), x);
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Vec& g) { return base_.contains(x - g); });
}

MonoidIdeal ideal_product(const MonoidIdeal& i, const MonoidIdeal& j)
{
  if (!(i.base() == j.base()))
    fail(ErrorCode::BaseMismatch, "ideals live over different monoids");
  Matrix sums;
  for (const auto& a : i.generators())
    for (const auto& b : j.generators())
      sums.push_back(a + b);
  return MonoidIdeal(i.base(), std::move(sums));
}

Cone dual_cone(const LatticeMonoid& m)
{
  return Cone::from_inequalities(m.ambient_rank(), m.generators());
}

BlowupChart chart_at(const MonoidIdeal& ideal, const Vec& a)
{
  const LatticeMonoid& base = ideal.base();
  const std::size_t n = base.ambient_rank();
  if (!ideal.contains(a))
    fail(ErrorCode::InvalidInput, to_string(a) + " is not in the ideal");
  Matrix gens = base.generators();
  for (const auto& b : ideal.generators())
    gens.push_back(b - a);
  BlowupChart c;
  c.generator = a;
  c.monoid = saturate(LatticeMonoid(n, gens));
  c.cone = Cone::from_inequalities(n, gens);
  c.redundant = c.cone.dim() < dual_cone(base).dim();
  return c;
}

std::vector<BlowupChart> blowup_charts(const MonoidIdeal& ideal, bool parallel)
{
  if (ideal.empty())
    fail(ErrorCode::EmptyIdeal, "cannot blow up the empty ideal");
  const Matrix& gens = ideal.generators();
  std::vector<BlowupChart> charts(gens.size());
  const long count = static_cast<long>(gens.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i)
      charts[static_cast<std::size_t>(i)] = chart_at(ideal, gens[static_cast<std::size_t>(i)]);
  } else {
    for (long i = 0; i < count; ++i)
      charts[static_cast<std::size_t>(i)] = chart_at(ideal, gens[static_cast<std::size_t>(i)]);
  }

  std::vector<Cone> cones;
  for (const auto& c : charts)
    cones.push_back(c.cone);
  ensure(is_fan(cones), "blow-up chart cones do not form a fan");
  ensure(check_support(dual_cone(ideal.base()), cones).covered,
         "blow-up chart cones do not cover the dual cone");
  return charts;
}

GpIsoFactorization factor_gp_iso_extension(const LatticeMonoid& q, const LatticeMonoid& p)
{
  const std::size_t n = q.ambient_rank();
  if (p.ambient_rank() != n)
    fail(ErrorCode::DimensionMismatch, "monoids live in different ambient lattices");
  if (!p.contains(q))
    fail(ErrorCode::NotAnExtension, to_string(q) + " is not contained in " + to_string(p));
  if (!(q.gp_lattice() == p.gp_lattice()))
    fail(ErrorCode::GroupMismatch, "the two monoids generate different groups");
  if (!q.is_saturated() || !p.is_saturated())
    fail(ErrorCode::NotSaturated, "both monoids must be saturated");

  const Matrix& qs = q.generators();
  const std::size_t r = qs.size();

  // Smallest coefficient degree first; within a degree, coefficient vectors
  // in descending lexicographic order.
  auto denominator = [&](const Vec& x) {
    for (std::size_t k = 0;; ++k) {
      std::vector<std::size_t> c(r, 0);
      std::optional<Vec> found;
      auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
        if (found)
          return;
        if (i + 1 >= r) {
          if (r == 0) {
            if (left == 0 && q.contains(x))
              found = zero_vec(n);
            return;
          }
          c[i] = left;
          Vec b = zero_vec(n);
          for (std::size_t j = 0; j < r; ++j)
            if (c[j])
              b += Int(c[j]) * qs[j];
          if (q.contains(x + b))
            found = b;
          return;
        }
        for (std::size_t v = left + 1; v-- > 0;) {
          c[i] = v;
          self(self, i + 1, left - v);
          if (found)
            return;
        }
      };
      rec(rec, 0, k);
      if (found)
        return *found;
      ensure(r > 0, "factor_gp_iso_extension: no denominator over the trivial monoid");
    }
  };

  Vec s = zero_vec(n);
  for (const auto& g : p.generators())
    s += denominator(g);
  Matrix f;
  for (const auto& g : p.generators())
    f.push_back(g + s);
  f.push_back(s);
  GpIsoFactorization out{MonoidIdeal(q, f), s};
  ensure(chart_at(out.ideal, s).monoid == p, "factor_gp_iso_extension: chart does not reconstruct P");
  return out;
}

BlowupChart lift_valuative_through_blowup(const MonoidIdeal& ideal, const MonomialValuation& v)
{
  const std::size_t n = ideal.base().ambient_rank();
  check_ambient(n, v.functional);
  if (ideal.empty())
    fail(ErrorCode::EmptyIdeal, "cannot lift through the blow-up of the empty ideal");
  for (const auto& g : ideal.base().generators())
    if (dot(g, v.functional) < 0)
      fail(ErrorCode::InvalidInput, "valuation is negative on the base generator " + to_string(g));

  const Matrix& gens = ideal.generators();
  std::size_t best = 0;
  Int best_value = dot(gens[0], v.functional);
  for (std::size_t i = 1; i < gens.size(); ++i) {
    Int value = dot(gens[i], v.functional);
    if (value < best_value) {
      best = i;
      best_value = value;
    }
  }
  BlowupChart chart = chart_at(ideal, gens[best]);
  ensure(chart.cone.contains(v.functional), "lift: valuation outside the chart cone");
  for (const auto& g : chart.monoid.generators())
    ensure(dot(g, v.functional) >= 0, "lift: valuation negative on the chart monoid");
  return chart;
}

} // namespace logmod
