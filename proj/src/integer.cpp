#include "logmod/integer.hpp"

#include <algorithm>
#include <cassert>

namespace logmod {

Vec zero_vec(std::size_t n) { return Vec(n, Int(0)); }

Vec unit_vec(std::size_t n, std::size_t i)
{
  Vec v(n, Int(0));
  v[i] = 1;
  return v;
}

Int dot(const Vec& a, const Vec& b)
{
  assert(a.size() == b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

Vec operator+(const Vec& a, const Vec& b)
{
  Vec r = a;
  r += b;
  return r;
}

Vec operator-(const Vec& a, const Vec& b)
{
  Vec r = a;
  r -= b;
  return r;
}

Vec operator-(const Vec& a)
{
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = -a[i];
  return r;
}

Vec operator*(const Int& k, const Vec& a)
{
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = k * a[i];
  return r;
}

Vec& operator+=(Vec& a, const Vec& b)
{
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += b[i];
  return a;
}

Vec& operator-=(Vec& a, const Vec& b)
{
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] -= b[i];
  return a;
}

bool is_zero(const Vec& v)
{
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int content(const Vec& v)
{
  Int g = 0;
  for (const auto& x : v) {
    if (x != 0)
      g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
    if (g == 1)
      break;
  }
  return g;
}

Vec primitive(Vec v)
{
  Int g = content(v);
  if (g > 1)
    for (auto& x : v)
      x /= g;
  return v;
}

Int floor_div(const Int& a, const Int& b)
{
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

Vec apply(const Matrix& m, const Vec& v)
{
  Vec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    r[i] = dot(m[i], v);
  return r;
}

Vec combine(const Vec& coeffs, const Matrix& rows, std::size_t ncols)
{
  assert(coeffs.size() == rows.size());
  Vec r = zero_vec(ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (coeffs[i] == 0)
      continue;
    for (std::size_t j = 0; j < ncols; ++j)
      r[j] += coeffs[i] * rows[i][j];
  }
  return r;
}

Matrix transpose(const Matrix& m, std::size_t ncols)
{
  Matrix t(ncols, Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j)
      t[j][i] = m[i][j];
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b, std::size_t bcols)
{
  Matrix r;
  r.reserve(a.size());
  for (const auto& row : a)
    r.push_back(combine(row, b, bcols));
  return r;
}

void sort_unique(Matrix& rows)
{
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

std::string to_string(const Vec& v)
{
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ",";
    s += v[i].str();
  }
  return s + ")";
}

} // namespace logmod
