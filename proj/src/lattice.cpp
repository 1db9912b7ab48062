#include "logmod/lattice.hpp"

#include "logmod/error.hpp"
#include "logmod/linalg.hpp"

namespace logmod {

Lattice::Lattice(std::size_t ambient_rank, Matrix generators) : ambient_(ambient_rank)
{
  for (const auto& g : generators)
    if (g.size() != ambient_rank)
      fail(ErrorCode::DimensionMismatch, "lattice generator " + to_string(g) + " has wrong length");
  basis_ = linalg::hermite_basis(std::move(generators), ambient_rank);
}

Lattice Lattice::full(std::size_t n)
{
  Matrix id(n, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i)
    id[i][i] = 1;
  return Lattice(n, std::move(id));
}

Lattice Lattice::zero(std::size_t n) { return Lattice(n, {}); }

bool Lattice::contains(const Vec& x0) const
{
  if (x0.size() != ambient_)
    fail(ErrorCode::DimensionMismatch, "vector " + to_string(x0) + " has wrong length");
  Vec x = x0;
  for (const auto& row : basis_) {
    std::size_t p = 0;
    while (row[p] == 0)
      ++p;
    for (std::size_t j = 0; j < p; ++j)
      if (x[j] != 0)
        return false;
    if (x[p] % row[p] != 0)
      return false;
    Int q = x[p] / row[p];
    if (q != 0)
      for (std::size_t j = p; j < ambient_; ++j)
        x[j] -= q * row[j];
  }
  return is_zero(x);
}

bool Lattice::contains(const Lattice& other) const
{
  for (const auto& b : other.basis_)
    if (!contains(b))
      return false;
  return true;
}

std::optional<Vec> Lattice::coordinates(const Vec& x0) const
{
  if (x0.size() != ambient_)
    fail(ErrorCode::DimensionMismatch, "vector " + to_string(x0) + " has wrong length");
  Vec x = x0;
  Vec c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& row = basis_[i];
    std::size_t p = 0;
    while (row[p] == 0)
      ++p;
    for (std::size_t j = 0; j < p; ++j)
      if (x[j] != 0)
        return std::nullopt;
    if (x[p] % row[p] != 0)
      return std::nullopt;
    c[i] = x[p] / row[p];
    if (c[i] != 0)
      for (std::size_t j = p; j < ambient_; ++j)
        x[j] -= c[i] * row[j];
  }
  if (!is_zero(x))
    return std::nullopt;
  return c;
}

Lattice Lattice::saturation() const
{
  return Lattice(ambient_, linalg::saturate_lattice(basis_, ambient_));
}

Matrix Lattice::orthogonal_complement() const
{
  return linalg::integer_kernel(basis_, ambient_);
}

Lattice Lattice::intersect_span(const Matrix& rows) const
{
  if (basis_.empty())
    return *this;
  // x = c B lies in span(rows) iff it is orthogonal to every e in rows^perp.
  Matrix perp = linalg::integer_kernel(rows, ambient_);
  if (rows.empty())
    perp = Lattice::full(ambient_).basis();
  if (perp.empty())
    return *this;
  Matrix constraints;
  for (const auto& e : perp)
    constraints.push_back(apply(basis_, e));
  Matrix coeffs = linalg::integer_kernel(constraints, basis_.size());
  return Lattice(ambient_, multiply(coeffs, basis_, ambient_));
}

} // namespace logmod
