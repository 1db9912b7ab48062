#include "logmod/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "logmod/linalg.hpp"

namespace logmod::oracle {

namespace {

using I128 = __int128;

constexpr I64 kEntryLimit = I64(1) << 24;
constexpr I64 kBoxLimit = 4'000'000;

I128 det128(const std::vector<std::vector<I128>>& m)
{
  const std::size_t k = m.size();
  if (k == 0)
    return 1;
  if (k == 1)
    return m[0][0];
  I128 s = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (m[0][j] == 0)
      continue;
    std::vector<std::vector<I128>> minor;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<I128> row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j)
          row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    I128 t = m[0][j] * det128(minor);
    s += (j % 2 == 0) ? t : -t;
  }
  return s;
}

std::size_t rank_of(const IMatrix& rows, std::size_t n)
{
  Matrix big;
  for (const auto& r : rows)
    big.push_back(widen(r));
  return linalg::rank(big, n);
}

void for_each_subset(std::size_t total, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn)
{
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (idx.size() == k) {
      fn(idx);
      return;
    }
    for (std::size_t i = start; i + (k - idx.size()) <= total; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

bool next_in_box(IVec& x, I64 bound)
{
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] < bound) {
      ++x[k];
      return true;
    }
    x[k] = -bound;
  }
  return false;
}

I64 box_size(std::size_t dim, I64 bound)
{
  I128 s = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    s *= (2 * bound + 1);
    if (s > kBoxLimit)
      return kBoxLimit + 1;
  }
  return static_cast<I64>(s);
}

} // namespace

std::optional<IVec> narrow(const Vec& v)
{
  IVec out;
  for (const auto& x : v) {
    if (x > kEntryLimit || x < -kEntryLimit)
      return std::nullopt;
    out.push_back(static_cast<I64>(x));
  }
  return out;
}

std::optional<IMatrix> narrow(const Matrix& m)
{
  IMatrix out;
  for (const auto& v : m) {
    auto n = narrow(v);
    if (!n)
      return std::nullopt;
    out.push_back(std::move(*n));
  }
  return out;
}

Vec widen(const IVec& v)
{
  Vec out;
  for (auto x : v)
    out.emplace_back(x);
  return out;
}

ConeMembership::ConeMembership(std::size_t n, const IMatrix& generators) : n_(n), gens_(generators)
{
  rank_ = rank_of(gens_, n_);
  if (rank_ == 0)
    return;
  for_each_subset(gens_.size(), rank_, [&](const std::vector<std::size_t>& g) {
    // Pick coordinates giving a nonsingular k x k minor of the column matrix.
    std::optional<Basis> found;
    for_each_subset(n_, rank_, [&](const std::vector<std::size_t>& c) {
      if (found)
        return;
      std::vector<std::vector<I128>> minor(rank_, std::vector<I128>(rank_));
      for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j)
          minor[i][j] = gens_[g[j]][c[i]];  // column j is generator g[j]
      I128 d = det128(minor);
      if (d == 0)
        return;
      Basis b{g, c, static_cast<I64>(d), IMatrix(rank_, IVec(rank_))};
      // adj[j][i] = (-1)^{i+j} det(minor without row i, col j)
      for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) {
          std::vector<std::vector<I128>> sub;
          for (std::size_t r = 0; r < rank_; ++r) {
            if (r == i)
              continue;
            std::vector<I128> row;
            for (std::size_t s = 0; s < rank_; ++s)
              if (s != j)
                row.push_back(minor[r][s]);
            sub.push_back(std::move(row));
          }
          I128 cof = det128(sub);
          b.adj[j][i] = static_cast<I64>(((i + j) % 2 == 0) ? cof : -cof);
        }
      found = std::move(b);
    });
    if (found)
      bases_.push_back(std::move(*found));
  });
}

bool ConeMembership::contains(const IVec& x) const
{
  if (rank_ == 0)
    return std::all_of(x.begin(), x.end(), [](I64 v) { return v == 0; });
  bool in_span_checked = false;
  for (const auto& b : bases_) {
    std::vector<I128> lam(rank_, 0);
    for (std::size_t j = 0; j < rank_; ++j)
      for (std::size_t i = 0; i < rank_; ++i)
        lam[j] += I128(b.adj[j][i]) * x[b.coords[i]];
    if (!in_span_checked) {
      // det * x must equal sum lam_j g_j in every coordinate.
      for (std::size_t c = 0; c < n_; ++c) {
        I128 s = 0;
        for (std::size_t j = 0; j < rank_; ++j)
          s += lam[j] * gens_[b.gens[j]][c];
        if (s != I128(b.det) * x[c])
          return false;
      }
      in_span_checked = true;
    }
    bool ok = true;
    for (std::size_t j = 0; j < rank_ && ok; ++j)
      if ((b.det > 0 && lam[j] < 0) || (b.det < 0 && lam[j] > 0))
        ok = false;
    if (ok)
      return true;
  }
  return false;
}

std::optional<IVec> find_grading(const IMatrix& gens, std::size_t n)
{
  for (I64 bound = 1;; bound *= 2) {
    if (box_size(n, bound) > kBoxLimit)
      return std::nullopt;
    IVec phi(n, -bound);
    do {
      bool ok = true;
      for (const auto& g : gens) {
        if (std::all_of(g.begin(), g.end(), [](I64 v) { return v == 0; }))
          continue;
        I128 s = 0;
        for (std::size_t i = 0; i < n; ++i)
          s += I128(phi[i]) * g[i];
        if (s < 1) {
          ok = false;
          break;
        }
      }
      if (ok)
        return phi;
    } while (next_in_box(phi, bound));
  }
  return std::nullopt;
}

std::optional<bool> contains(const Matrix& gens0, const Vec& x0)
{
  auto all = narrow(gens0);
  auto x = narrow(x0);
  if (!all || !x)
    return std::nullopt;
  const std::size_t n = x->size();
  IMatrix gens;
  for (const auto& g : *all)
    if (std::any_of(g.begin(), g.end(), [](I64 v) { return v != 0; }))
      gens.push_back(g);
  if (gens.empty())
    return std::all_of(x->begin(), x->end(), [](I64 v) { return v == 0; });
  auto phi = find_grading(gens, n);
  if (!phi)
    return std::nullopt;
  auto grade = [&](const IVec& v) {
    I64 s = 0;
    for (std::size_t i = 0; i < n; ++i)
      s += (*phi)[i] * v[i];
    return s;
  };
  const I64 budget = grade(*x);
  if (budget < 0)
    return false;

  // Every coefficient vector of total grade `budget`, tried exhaustively.
  std::function<bool(std::size_t, I64, IVec&)> rec = [&](std::size_t i, I64 left, IVec& rest) -> bool {
    if (i == gens.size())
      return left == 0 && std::all_of(rest.begin(), rest.end(), [](I64 v) { return v == 0; });
    const I64 gi = grade(gens[i]);
    for (I64 c = 0; c * gi <= left; ++c) {
      IVec next(n);
      for (std::size_t k = 0; k < n; ++k)
        next[k] = rest[k] - c * gens[i][k];
      if (rec(i + 1, left - c * gi, next))
        return true;
    }
    return false;
  };
  IVec start = *x;
  return rec(0, budget, start);
}

namespace {

struct RayData {
  IMatrix primitive_coords;  // extreme directions in lattice coordinates
  std::vector<I64> sup_norms;
};

// Primitive lattice vectors along the extreme directions of cone(gens), found
// by discarding every direction lying in the cone of the others.
std::optional<RayData> extreme_lattice_rays(const Matrix& gens, const Matrix& lattice_basis)
{
  const std::size_t n = lattice_basis.front().size();
  const std::size_t k = lattice_basis.size();
  Matrix dirs;
  for (const auto& g : gens) {
    if (is_zero(g))
      continue;
    auto c = linalg::scaled_coordinates(lattice_basis, g, n);
    if (!c)
      return std::nullopt;
    dirs.push_back(primitive(*c));
  }
  sort_unique(dirs);
  auto narrowed = narrow(dirs);
  if (!narrowed)
    return std::nullopt;
  RayData out;
  for (std::size_t i = 0; i < narrowed->size(); ++i) {
    IMatrix others;
    for (std::size_t j = 0; j < narrowed->size(); ++j)
      if (j != i)
        others.push_back((*narrowed)[j]);
    if (ConeMembership(k, others).contains((*narrowed)[i]))
      continue;
    I64 m = 0;
    for (auto v : (*narrowed)[i])
      m = std::max(m, v < 0 ? -v : v);
    out.primitive_coords.push_back((*narrowed)[i]);
    out.sup_norms.push_back(m);
  }
  return out;
}

I64 sum_of_largest(std::vector<I64> xs, std::size_t count)
{
  std::sort(xs.rbegin(), xs.rend());
  I64 s = 0;
  for (std::size_t i = 0; i < xs.size() && i < count; ++i)
    s += xs[i];
  return s;
}

std::optional<Matrix> enumerate_box(const IMatrix& gens, const IMatrix& lattice, I64 bound,
                                    std::optional<I64> max_grade)
{
  const std::size_t n = lattice.front().size();
  const std::size_t k = lattice.size();
  if (box_size(k, bound) > kBoxLimit)
    return std::nullopt;

  ConeMembership cone(n, gens);
  auto phi = find_grading(gens, n);
  if (!phi)
    return std::nullopt;

  struct Point {
    I64 grade;
    IVec x;
  };
  std::vector<Point> pts;
  IVec c(k, -bound);
  do {
    IVec x(n, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j)
        x[j] += c[i] * lattice[i][j];
    I64 g = 0;
    for (std::size_t j = 0; j < n; ++j)
      g += (*phi)[j] * x[j];
    if (g <= 0 || (max_grade && g > *max_grade))
      continue;
    if (!cone.contains(x))
      continue;
    pts.push_back({g, std::move(x)});
  } while (next_in_box(c, bound));

  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.grade != b.grade ? a.grade < b.grade : a.x < b.x;
  });
  std::vector<Point> kept;
  for (const auto& p : pts) {
    bool reducible = false;
    for (const auto& h : kept) {
      if (h.grade >= p.grade)
        continue;
      IVec d(n);
      for (std::size_t j = 0; j < n; ++j)
        d[j] = p.x[j] - h.x[j];
      if (cone.contains(d)) {
        reducible = true;
        break;
      }
    }
    if (!reducible)
      kept.push_back(p);
  }
  Matrix out;
  for (const auto& p : kept)
    out.push_back(widen(p.x));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::optional<I64> ray_bound(const Matrix& gens, const Matrix& lattice_basis)
{
  if (lattice_basis.empty())
    return 0;
  auto rays = extreme_lattice_rays(gens, lattice_basis);
  if (!rays)
    return std::nullopt;
  return sum_of_largest(rays->sup_norms, lattice_basis.size());
}

std::optional<Matrix> box_hilbert_basis(const Matrix& gens0, const Matrix& lattice0, I64 bound)
{
  auto gens = narrow(gens0);
  auto lattice = narrow(lattice0);
  if (!gens || !lattice)
    return std::nullopt;
  if (lattice->empty())
    return Matrix{};
  return enumerate_box(*gens, *lattice, bound, std::nullopt);
}

std::optional<Matrix> hilbert_basis(const Matrix& gens0, const Matrix& lattice0)
{
  auto gens = narrow(gens0);
  auto lattice = narrow(lattice0);
  if (!gens || !lattice)
    return std::nullopt;
  if (lattice->empty())
    return Matrix{};
  const std::size_t n = lattice->front().size();
  auto rays = extreme_lattice_rays(gens0, lattice0);
  auto phi = find_grading(*gens, n);
  if (!rays || !phi)
    return std::nullopt;
  // Every Hilbert basis element lies in a half-open parallelepiped spanned by
  // at most rank-many extreme rays, which bounds its coordinates and grade.
  std::vector<I64> grades;
  for (const auto& r : rays->primitive_coords) {
    IVec x(n, 0);
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        x[j] += r[i] * (*lattice)[i][j];
    I64 g = 0;
    for (std::size_t j = 0; j < n; ++j)
      g += (*phi)[j] * x[j];
    grades.push_back(g);
  }
  const std::size_t k = lattice->size();
  return enumerate_box(*gens, *lattice, sum_of_largest(rays->sup_norms, k), sum_of_largest(grades, k));
}

std::optional<Matrix> lineality_generators(const Matrix& gens0, std::size_t n)
{
  auto gens = narrow(gens0);
  if (!gens)
    return std::nullopt;
  ConeMembership cone(n, *gens);
  Matrix out;
  for (const auto& g : *gens) {
    IVec neg(n);
    for (std::size_t i = 0; i < n; ++i)
      neg[i] = -g[i];
    if (cone.contains(neg))
      out.push_back(widen(g));
  }
  return out;
}

std::optional<Matrix> dual_rays(const Matrix& gens0, std::size_t n, I64 bound)
{
  auto gens = narrow(gens0);
  if (!gens || rank_of(*gens, n) != n || box_size(n, bound) > kBoxLimit)
    return std::nullopt;
  Matrix out;
  IVec v(n, -bound);
  do {
    if (std::all_of(v.begin(), v.end(), [](I64 x) { return x == 0; }))
      continue;
    I64 g = 0;
    for (auto x : v)
      g = std::gcd(g, x < 0 ? -x : x);
    if (g != 1)
      continue;
    IMatrix tight;
    bool nonneg = true;
    for (const auto& gen : *gens) {
      I64 s = 0;
      for (std::size_t i = 0; i < n; ++i)
        s += v[i] * gen[i];
      if (s < 0) {
        nonneg = false;
        break;
      }
      if (s == 0)
        tight.push_back(gen);
    }
    if (nonneg && rank_of(tight, n) == n - 1)
      out.push_back(widen(v));
  } while (next_in_box(v, bound));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::optional<Vec>> uncovered_point(const Matrix& sigma0, const std::vector<Matrix>& subcones0,
                                                  std::size_t n, I64 bound)
{
  auto sigma = narrow(sigma0);
  if (!sigma || box_size(n, bound) > kBoxLimit)
    return std::nullopt;
  ConeMembership s(n, *sigma);
  std::vector<ConeMembership> subs;
  for (const auto& c : subcones0) {
    auto cc = narrow(c);
    if (!cc)
      return std::nullopt;
    subs.emplace_back(n, *cc);
  }
  IVec v(n, -bound);
  do {
    if (!s.contains(v))
      continue;
    bool covered = std::any_of(subs.begin(), subs.end(),
                               [&](const ConeMembership& c) { return c.contains(v); });
    if (!covered)
      return std::optional<Vec>(widen(v));
  } while (next_in_box(v, bound));
  return std::optional<Vec>();
}

std::optional<bool> exact_in_box(const Matrix& source, const Matrix& target, const Matrix& t,
                                 const Matrix& gp_basis, I64 bound)
{
  auto basis = narrow(gp_basis);
  if (!basis || box_size(basis->size(), bound) > kBoxLimit)
    return std::nullopt;
  if (basis->empty())
    return true;
  const std::size_t n = basis->front().size();
  const std::size_t k = basis->size();
  IVec c(k, -bound);
  do {
    IVec x(n, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j)
        x[j] += c[i] * (*basis)[i][j];
    Vec wx = widen(x);
    Vec y = logmod::apply(t, wx);
    auto in_target = contains(target, y);
    if (!in_target)
      return std::nullopt;
    if (!*in_target)
      continue;
    auto in_source = contains(source, wx);
    if (!in_source)
      return std::nullopt;
    if (!*in_source)
      return false;
  } while (next_in_box(c, bound));
  return true;
}

std::size_t longest_chain(std::size_t count, const std::vector<std::vector<bool>>& below)
{
  std::size_t best = 0;
  std::vector<std::size_t> chain;
  std::function<void(std::size_t)> extend = [&](std::size_t top) {
    best = std::max(best, chain.size());
    for (std::size_t j = 0; j < count; ++j)
      if (below[top][j]) {
        chain.push_back(j);
        extend(j);
        chain.pop_back();
      }
  };
  for (std::size_t i = 0; i < count; ++i) {
    chain.push_back(i);
    extend(i);
    chain.pop_back();
  }
  return best;
}

} // namespace logmod::oracle
