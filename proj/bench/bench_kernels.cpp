// Compares the serial reference kernels against the OpenMP variants on a
// moderately sized dual (a wedge of chains: many vertices, mixed nesting).
//
//   bench_kernels [--quick]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "medianite/kernels.hpp"
#include "medianite/metrics.hpp"
#include "medianite/verify.hpp"

using namespace medianite;

namespace {

template <class F>
double time_of(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;

  PocSet p = PocSet::linear(quick ? 3 : 5);
  const int factors = quick ? 3 : 4;
  for (int i = 1; i < factors; ++i) p = wedge_sum(p, PocSet::linear(quick ? 3 : 5));

  CubingGraph g = build_cubing(p);
  std::printf("instance: %d walls, %d vertices, %zu edges\n", p.walls(), g.size(),
              g.edges().size());
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif

  std::vector<double> serial_d, parallel_d;
  std::vector<int> serial_i, parallel_i;

  double ts1 = time_of([&] { serial_d = kernels::l1_matrix_serial(g); });
  double tp1 = time_of([&] { parallel_d = kernels::l1_matrix_parallel(g); });
  bool ok1 = serial_d == parallel_d;

  double ts2 = time_of([&] { serial_i = kernels::linf_unit_matrix_serial(g); });
  double tp2 = time_of([&] { parallel_i = kernels::linf_unit_matrix_parallel(g); });
  bool ok2 = serial_i == parallel_i;

  double ts3 = time_of([&] { serial_d = kernels::linf_matrix_serial(g); });
  double tp3 = time_of([&] { parallel_d = kernels::linf_matrix_parallel(g); });
  bool ok3 = serial_d == parallel_d;

  std::printf("\n%-22s %10s %10s %8s %6s\n", "kernel", "serial(s)", "openmp(s)", "speedup",
              "match");
  std::printf("%-22s %10.3f %10.3f %7.2fx %6s\n", "l1_matrix", ts1, tp1, ts1 / tp1,
              ok1 ? "yes" : "NO");
  std::printf("%-22s %10.3f %10.3f %7.2fx %6s\n", "linf_unit_matrix", ts2, tp2, ts2 / tp2,
              ok2 ? "yes" : "NO");
  std::printf("%-22s %10.3f %10.3f %7.2fx %6s\n", "linf_matrix", ts3, tp3, ts3 / tp3,
              ok3 ? "yes" : "NO");

  return ok1 && ok2 && ok3 ? 0 : 1;
}
