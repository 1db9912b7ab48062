#include "logmod/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "logmod/error.hpp"

namespace logmod::linalg {

namespace {

void normalize_row(Vec& row)
{
  Int g = content(row);
  if (g > 1)
    for (auto& x : row)
      x /= g;
}

// Fraction-free reduced echelon form. Returns the pivot column of each
// nonzero row; rows are compacted so that rows [0, pivots.size()) are nonzero.
std::vector<std::size_t> echelon(Matrix& m, std::size_t ncols, bool reduce_above)
{
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < m.size(); ++col) {
    std::size_t p = r;
    while (p < m.size() && m[p][col] == 0)
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col] == 0)
        continue;
      if (i < r && !reduce_above)
        continue;
      Int a = m[r][col];
      Int b = m[i][col];
      Int g = boost::multiprecision::gcd(a, b);
      Int fa = a / g, fb = b / g;
      for (std::size_t j = 0; j < ncols; ++j)
        m[i][j] = m[i][j] * fa - m[r][j] * fb;
      normalize_row(m[i]);
    }
    normalize_row(m[r]);
    pivots.push_back(col);
    ++r;
  }
  m.resize(r);
  return pivots;
}

struct ColumnReduction {
  Matrix reduced;      // A * U
  Matrix transform;    // U, n x n
  std::size_t pivots;  // number of nonzero leading columns
};

ColumnReduction column_reduce(const Matrix& a, std::size_t n)
{
  ColumnReduction out;
  out.reduced = a;
  out.transform = Matrix(n, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i)
    out.transform[i][i] = 1;
  Matrix& b = out.reduced;
  Matrix& u = out.transform;

  // column operation: (col c, col j) <- (x c + y j, -b/g c + a/g j)
  auto combine_cols = [&](std::size_t c, std::size_t j, const Int& x, const Int& y, const Int& s,
                          const Int& t) {
    for (auto& row : b) {
      Int cc = row[c], jj = row[j];
      row[c] = x * cc + y * jj;
      row[j] = s * cc + t * jj;
    }
    for (auto& row : u) {
      Int cc = row[c], jj = row[j];
      row[c] = x * cc + y * jj;
      row[j] = s * cc + t * jj;
    }
  };

  std::size_t c = 0;
  for (std::size_t i = 0; i < b.size() && c < n; ++i) {
    for (std::size_t j = c + 1; j < n; ++j) {
      if (b[i][j] == 0)
        continue;
      Int av = b[i][c], bv = b[i][j];
      Int x, y;
      Int g = ext_gcd(av, bv, x, y);
      combine_cols(c, j, x, y, -bv / g, av / g);
    }
    if (b[i][c] != 0)
      ++c;
  }
  out.pivots = c;
  return out;
}

} // namespace

Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y)
{
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

std::size_t rank(const Matrix& rows, std::size_t ncols)
{
  Matrix m = rows;
  return echelon(m, ncols, false).size();
}

Matrix kernel(const Matrix& a, std::size_t ncols)
{
  Matrix m = a;
  auto pivots = echelon(m, ncols, true);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots)
    is_pivot[p] = true;

  Int l = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    l = boost::multiprecision::lcm(l, boost::multiprecision::abs(m[r][pivots[r]]));

  Matrix basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f])
      continue;
    Vec v = zero_vec(ncols);
    v[f] = l;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m[r][f] * (l / m[r][pivots[r]]);
    basis.push_back(primitive(std::move(v)));
  }
  return basis;
}

Matrix integer_kernel(const Matrix& a, std::size_t ncols)
{
  if (a.empty()) {
    Matrix id(ncols, zero_vec(ncols));
    for (std::size_t i = 0; i < ncols; ++i)
      id[i][i] = 1;
    return id;
  }
  auto red = column_reduce(a, ncols);
  Matrix basis;
  for (std::size_t j = red.pivots; j < ncols; ++j) {
    Vec v(ncols);
    for (std::size_t i = 0; i < ncols; ++i)
      v[i] = red.transform[i][j];
    basis.push_back(std::move(v));
  }
  return hermite_basis(std::move(basis), ncols);
}

Matrix hermite_basis(Matrix rows, std::size_t ncols)
{
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0)
        continue;
      Int av = rows[r][col], bv = rows[i][col];
      Int x, y;
      Int g = ext_gcd(av, bv, x, y);
      Int s = -bv / g, t = av / g;
      for (std::size_t j = 0; j < ncols; ++j) {
        Int rr = rows[r][j], ii = rows[i][j];
        rows[r][j] = x * rr + y * ii;
        rows[i][j] = s * rr + t * ii;
      }
    }
    if (rows[r][col] == 0)
      continue;
    if (rows[r][col] < 0)
      for (auto& x : rows[r])
        x = -x;
    const Int& piv = rows[r][col];
    for (std::size_t k = 0; k < r; ++k) {
      Int q = floor_div(rows[k][col], piv);
      if (q != 0)
        for (std::size_t j = 0; j < ncols; ++j)
          rows[k][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

Matrix saturate_lattice(const Matrix& rows, std::size_t ncols)
{
  if (rows.empty())
    return {};
  Matrix perp = integer_kernel(rows, ncols);
  if (perp.empty()) {
    Matrix id(ncols, zero_vec(ncols));
    for (std::size_t i = 0; i < ncols; ++i)
      id[i][i] = 1;
    return id;
  }
  return integer_kernel(perp, ncols);
}

Matrix complete_basis(const Matrix& rows, std::size_t ncols)
{
  auto red = column_reduce(rows, ncols);
  ensure(red.pivots == rows.size(), "complete_basis: rows are not independent");
  auto inv = inverse(red.transform);
  Matrix out = rows;
  for (std::size_t i = rows.size(); i < ncols; ++i) {
    Vec v(ncols);
    for (std::size_t j = 0; j < ncols; ++j) {
      ensure(boost::multiprecision::denominator(inv[i][j]) == 1,
             "complete_basis: transform is not unimodular");
      v[j] = boost::multiprecision::numerator(inv[i][j]);
    }
    out.push_back(std::move(v));
  }
  Int det = determinant(out);
  ensure(det == 1 || det == -1, "complete_basis: sublattice is not saturated");
  return out;
}

std::optional<std::vector<Rat>> solve(const Matrix& a, const Vec& b, std::size_t ncols)
{
  const std::size_t m = a.size();
  std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(ncols + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < ncols; ++j)
      aug[i][j] = Rat(a[i][j]);
    aug[i][ncols] = Rat(b[i]);
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < m; ++col) {
    std::size_t p = r;
    while (p < m && aug[p][col] == 0)
      ++p;
    if (p == m)
      continue;
    std::swap(aug[r], aug[p]);
    Rat piv = aug[r][col];
    for (std::size_t j = col; j <= ncols; ++j)
      aug[r][j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || aug[i][col] == 0)
        continue;
      Rat f = aug[i][col];
      for (std::size_t j = col; j <= ncols; ++j)
        aug[i][j] -= f * aug[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (aug[i][ncols] != 0)
      return std::nullopt;
  std::vector<Rat> x(ncols, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug[i][ncols];
  return x;
}

std::vector<std::vector<Rat>> inverse(const Matrix& m)
{
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug[i][j] = Rat(m[i][j]);
    aug[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && aug[p][col] == 0)
      ++p;
    ensure(p < n, "inverse: singular matrix");
    std::swap(aug[col], aug[p]);
    Rat piv = aug[col][col];
    for (auto& x : aug[col])
      x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug[i][col] == 0)
        continue;
      Rat f = aug[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j)
        aug[i][j] -= f * aug[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv[i][j] = aug[i][n + j];
  return inv;
}

Int determinant(const Matrix& m0)
{
  // Bareiss fraction-free elimination.
  const std::size_t n = m0.size();
  if (n == 0)
    return 1;
  Matrix m = m0;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0)
        ++p;
      if (p == n)
        return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::optional<Vec> integer_coordinates(const Matrix& basis, const Vec& x, std::size_t ncols)
{
  if (basis.empty())
    return is_zero(x) ? std::optional<Vec>(Vec{}) : std::nullopt;
  auto sol = solve(transpose(basis, ncols), x, basis.size());
  if (!sol)
    return std::nullopt;
  Vec c(basis.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (boost::multiprecision::denominator((*sol)[i]) != 1)
      return std::nullopt;
    c[i] = boost::multiprecision::numerator((*sol)[i]);
  }
  return c;
}

std::optional<Vec> scaled_coordinates(const Matrix& basis, const Vec& x, std::size_t ncols)
{
  if (basis.empty())
    return is_zero(x) ? std::optional<Vec>(Vec{}) : std::nullopt;
  auto sol = solve(transpose(basis, ncols), x, basis.size());
  if (!sol)
    return std::nullopt;
  Int l = 1;
  for (const auto& q : *sol)
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
  Vec c(basis.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = boost::multiprecision::numerator((*sol)[i]) * (l / boost::multiprecision::denominator((*sol)[i]));
  return c;
}

} // namespace logmod::linalg
