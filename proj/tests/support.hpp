#pragma once

#include <initializer_list>
#include <random>

#include "logmod/integer.hpp"

namespace logmod::test {

inline Vec V(std::initializer_list<long> xs)
{
  Vec v;
  for (long x : xs)
    v.emplace_back(x);
  return v;
}

inline Matrix M(std::initializer_list<std::initializer_list<long>> rows)
{
  Matrix m;
  for (auto r : rows)
    m.push_back(V(r));
  return m;
}

inline Matrix sorted(Matrix m)
{
  sort_unique(m);
  return m;
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n, long lo, long hi)
{
  std::uniform_int_distribution<long> d(lo, hi);
  Vec v(n);
  for (auto& x : v)
    x = d(rng);
  return v;
}

} // namespace logmod::test
