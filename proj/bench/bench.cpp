// Serial vs OpenMP timings for the parallel kernels. Each row also checks that
// both variants produce identical results.
//
//   logmod_bench [repetitions]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>

#include <omp.h>

#include "logmod/commands.hpp"
#include "logmod/hilbert.hpp"
#include "logmod/ideal.hpp"
#include "logmod/zr.hpp"

using namespace logmod;

namespace {

double seconds(const std::function<void()>& f, int reps)
{
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i)
    f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

template <class T>
void row(const char* name, int reps, const std::function<T(bool)>& run)
{
  T serial_out{}, parallel_out{};
  double s = seconds([&] { serial_out = run(false); }, reps);
  double p = seconds([&] { parallel_out = run(true); }, reps);
  std::printf("%-22s %10.4f %10.4f %8.2fx  %s\n", name, s, p, p > 0 ? s / p : 0.0,
              serial_out == parallel_out ? "equal" : "DIFFER");
}

Vec vec(std::initializer_list<long> xs)
{
  Vec v;
  for (long x : xs)
    v.emplace_back(x);
  return v;
}

} // namespace

int main(int argc, char** argv)
{
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d, repetitions: %d\n", omp_get_max_threads(), reps);
  std::printf("%-22s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

  // A rank-4 cone with a large parallelepiped volume.
  Matrix rays{vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({1, 2, 3, 17}), vec({3, 1, 2, 13}),
              vec({2, 3, 1, 11})};
  row<Matrix>("pointed_hilbert_basis", reps,
              [&](bool par) { return detail::pointed_hilbert_basis(rays, 4, par); });

  auto n3 = LatticeMonoid::free(3);
  MonoidIdeal ideal(n3, Matrix{vec({3, 0, 0}), vec({0, 2, 0}), vec({0, 0, 2}), vec({1, 1, 1}), vec({2, 1, 0}),
                               vec({0, 1, 1})});
  row<std::vector<Vec>>("blowup_charts", reps, [&](bool par) {
    std::vector<Vec> out;
    for (const auto& c : blowup_charts(ideal, par))
      for (const auto& g : c.monoid.generators())
        out.push_back(g);
    return out;
  });

  std::vector<Cone> a, b;
  for (const auto& c : blowup_charts(ideal, true))
    if (!c.redundant)
      a.push_back(c.cone);
  MonoidIdeal other(n3, Matrix{vec({2, 0, 0}), vec({0, 3, 0}), vec({0, 0, 1}), vec({1, 2, 0})});
  for (const auto& c : blowup_charts(other, true))
    if (!c.redundant)
      b.push_back(c.cone);
  row<std::vector<Cone>>("common_refinement", reps,
                         [&](bool par) { return common_refinement(a, b, 3, par); });

  std::string batch;
  std::mt19937_64 rng(9);
  for (int i = 0; i < 64; ++i) {
    std::string gens;
    for (int k = 0; k < 4; ++k) {
      long x = static_cast<long>(rng() % 5), y = static_cast<long>(rng() % 5) - 1, z = static_cast<long>(rng() % 4);
      gens += (k ? "," : "") + std::string("[") + std::to_string(x + 1) + "," + std::to_string(y) + "," +
              std::to_string(z) + "]";
    }
    batch += R"({"type":"monoid","ambient_rank":3,"generators":[)" + gens + "]}\n";
  }
  row<std::vector<std::string>>("batch saturate", reps, [&](bool par) {
    io::CommandOptions opts;
    opts.parallel = par;
    std::vector<std::string> out;
    for (const auto& r : io::run_batch("saturate", batch, opts))
      out.push_back(r.output.dump());
    return out;
  });
  return 0;
}
