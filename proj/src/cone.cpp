#include "logmod/cone.hpp"

#include <algorithm>
#include <set>

#include "logmod/error.hpp"
#include "logmod/linalg.hpp"

namespace logmod {

namespace detail {

namespace {

// Incrementally maintained echelon basis used to prune active-set enumeration.
struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivots;

  bool add(Vec v)
  {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto p = pivots[i];
      if (v[p] == 0)
        continue;
      Int a = rows[i][p], b = v[p];
      Int g = boost::multiprecision::gcd(a, b);
      Int fa = a / g, fb = b / g;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = v[j] * fa - rows[i][j] * fb;
      v = primitive(std::move(v));
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0)
      ++p;
    if (p == v.size())
      return false;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

struct RayEnumerator {
  std::size_t n;
  const Matrix& ineqs;
  std::size_t target;  // rank to reach (n - 1)
  Matrix found;

  void check(const Echelon& e)
  {
    Matrix k = linalg::kernel(e.rows, n);
    if (k.size() != 1)
      return;
    Vec x = k.front();
    bool pos = true, neg = true;
    for (const auto& a : ineqs) {
      Int s = dot(a, x);
      if (s < 0)
        pos = false;
      if (s > 0)
        neg = false;
      if (!pos && !neg)
        return;
    }
    if (pos)
      found.push_back(std::move(x));
    else if (neg)
      found.push_back(-x);
  }

  void recurse(const Echelon& e, std::size_t start)
  {
    if (e.rows.size() == target) {
      check(e);
      return;
    }
    const std::size_t need = target - e.rows.size();
    for (std::size_t i = start; i + need <= ineqs.size(); ++i) {
      Echelon next = e;
      if (!next.add(ineqs[i]))
        continue;
      recurse(next, i + 1);
    }
  }
};

} // namespace

RaysAndLineality extreme_rays(std::size_t n, const Matrix& ineqs0, const Matrix& eqs)
{
  RaysAndLineality out;
  Matrix all = ineqs0;
  all.insert(all.end(), eqs.begin(), eqs.end());
  out.lineality = linalg::integer_kernel(all, n);

  Echelon base;
  for (const auto& e : eqs)
    base.add(e);
  for (const auto& l : out.lineality)
    base.add(l);
  if (base.rows.size() >= n)
    return out;

  // Drop zero and duplicate inequality directions.
  Matrix ineqs;
  for (const auto& a : ineqs0)
    if (!is_zero(a))
      ineqs.push_back(primitive(a));
  sort_unique(ineqs);

  RayEnumerator en{n, ineqs, n - 1, {}};
  en.recurse(base, 0);
  out.rays = std::move(en.found);
  sort_unique(out.rays);
  return out;
}

} // namespace detail

Cone Cone::from_generators(std::size_t n, const Matrix& gens)
{
  for (const auto& g : gens)
    if (g.size() != n)
      fail(ErrorCode::DimensionMismatch, "cone generator " + to_string(g) + " has wrong length");
  Cone c;
  c.ambient_ = n;
  // Facets are the extreme rays of the dual cone; the dual's lineality is the
  // orthogonal complement of the span.
  auto dual = detail::extreme_rays(n, gens, {});
  c.facets_ = std::move(dual.rays);
  c.equations_ = std::move(dual.lineality);
  auto primal = detail::extreme_rays(n, c.facets_, c.equations_);
  c.rays_ = std::move(primal.rays);
  c.lineality_ = std::move(primal.lineality);
  return c;
}

Cone Cone::from_inequalities(std::size_t n, const Matrix& ineqs, const Matrix& eqs)
{
  for (const auto& a : ineqs)
    if (a.size() != n)
      fail(ErrorCode::DimensionMismatch, "inequality " + to_string(a) + " has wrong length");
  for (const auto& a : eqs)
    if (a.size() != n)
      fail(ErrorCode::DimensionMismatch, "equation " + to_string(a) + " has wrong length");
  auto v = detail::extreme_rays(n, ineqs, eqs);
  Matrix gens = v.rays;
  for (const auto& l : v.lineality) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return from_generators(n, gens);
}

Matrix Cone::generators() const
{
  Matrix g = rays_;
  for (const auto& l : lineality_) {
    g.push_back(l);
    g.push_back(-l);
  }
  return g;
}

bool Cone::contains(const Vec& x) const
{
  if (x.size() != ambient_)
    fail(ErrorCode::DimensionMismatch, "vector " + to_string(x) + " has wrong length");
  for (const auto& e : equations_)
    if (dot(e, x) != 0)
      return false;
  for (const auto& a : facets_)
    if (dot(a, x) < 0)
      return false;
  return true;
}

bool Cone::contains(const Cone& other) const
{
  for (const auto& g : other.rays_)
    if (!contains(g))
      return false;
  for (const auto& l : other.lineality_)
    if (!contains(l) || !contains(Vec(-l)))
      return false;
  return true;
}

bool Cone::contains_relative_interior(const Vec& x) const
{
  if (!contains(x))
    return false;
  for (const auto& a : facets_)
    if (dot(a, x) == 0)
      return false;
  return true;
}

Cone Cone::intersect(const Cone& other) const
{
  if (other.ambient_ != ambient_)
    fail(ErrorCode::DimensionMismatch, "cones live in different ambient spaces");
  Matrix ineqs = facets_;
  ineqs.insert(ineqs.end(), other.facets_.begin(), other.facets_.end());
  Matrix eqs = equations_;
  eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
  return from_inequalities(ambient_, ineqs, eqs);
}

Cone Cone::dual() const
{
  Matrix gens = facets_;
  for (const auto& e : equations_) {
    gens.push_back(e);
    gens.push_back(-e);
  }
  return from_generators(ambient_, gens);
}

Cone Cone::face_containing(const Matrix& points) const
{
  Matrix eqs = equations_;
  for (const auto& a : facets_) {
    bool tight = std::all_of(points.begin(), points.end(),
                             [&](const Vec& p) { return dot(a, p) == 0; });
    if (tight)
      eqs.push_back(a);
  }
  return from_inequalities(ambient_, facets_, eqs);
}

bool Cone::is_face_of(const Cone& other) const
{
  if (!other.contains(*this))
    return false;
  return other.face_containing(generators()) == *this;
}

std::vector<Cone> Cone::faces() const
{
  std::vector<Cone> out{*this};
  std::set<std::pair<Matrix, Matrix>> seen{{facets_, equations_}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Cone f = out[i];
    for (const auto& a : facets_) {
      bool vanishes = std::all_of(f.rays_.begin(), f.rays_.end(),
                                  [&](const Vec& r) { return dot(a, r) == 0; });
      if (vanishes)
        continue;
      Matrix eqs = f.equations_;
      eqs.push_back(a);
      Cone g = from_inequalities(ambient_, f.facets_, eqs);
      if (seen.insert({g.facets_, g.equations_}).second)
        out.push_back(std::move(g));
    }
  }
  return out;
}

Vec Cone::interior_point() const
{
  Vec p = zero_vec(ambient_);
  for (const auto& r : rays_)
    p += r;
  return p;
}

} // namespace logmod
