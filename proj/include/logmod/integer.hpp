#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace logmod {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// A lattice vector: integer coordinates in the ambient lattice Z^n.
using Vec = std::vector<Int>;

/// Row-major integer matrix; each row is a Vec of the same length.
using Matrix = std::vector<Vec>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

Int dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Int& k, const Vec& a);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);

bool is_zero(const Vec& v);

/// gcd of the absolute values of the entries; 0 for the zero vector.
Int content(const Vec& v);

/// Divide by the content, keeping the direction. The zero vector is returned as is.
Vec primitive(Vec v);

/// Integer floor division (rounds toward negative infinity).
Int floor_div(const Int& a, const Int& b);

/// Matrix-vector product: rows of m dotted with v.
Vec apply(const Matrix& m, const Vec& v);

/// Row vector times matrix: sum_i v[i] * m[i].
Vec combine(const Vec& coeffs, const Matrix& rows, std::size_t ncols);

Matrix transpose(const Matrix& m, std::size_t ncols);

/// Matrix product a * b, where b has `bcols` columns.
Matrix multiply(const Matrix& a, const Matrix& b, std::size_t bcols);

/// Sort lexicographically and drop duplicates.
void sort_unique(Matrix& rows);

std::string to_string(const Vec& v);

} // namespace logmod
