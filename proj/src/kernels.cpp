#include "medianite/kernels.hpp"

#include "medianite/errors.hpp"
#include "medianite/metrics.hpp"

namespace medianite::kernels {

namespace {

template <class T, class F>
std::vector<T> matrix(const CubingGraph& g, F&& entry, bool parallel) {
  const int v = g.size();
  std::vector<T> d(std::size_t(v) * v, T{});
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) {
      T x = entry(i, j);
      d[std::size_t(i) * v + j] = x;
      d[std::size_t(j) * v + i] = x;
    }
  }
  return d;
}

}  // namespace

std::vector<double> l1_matrix_serial(const CubingGraph& g) {
  return matrix<double>(
      g, [&](int i, int j) { return l1_distance_vertices(g.pocset(), g.vertex(i), g.vertex(j)); },
      false);
}

std::vector<double> l1_matrix_parallel(const CubingGraph& g) {
  return matrix<double>(
      g, [&](int i, int j) { return l1_distance_vertices(g.pocset(), g.vertex(i), g.vertex(j)); },
      true);
}

std::vector<int> linf_unit_matrix_serial(const CubingGraph& g) {
  if (!g.pocset().unit_weights()) throw Error("linf_unit_matrix requires unit weights");
  return matrix<int>(
      g, [&](int i, int j) { return linf_unit_distance(g.pocset(), g.vertex(i), g.vertex(j)); },
      false);
}

std::vector<int> linf_unit_matrix_parallel(const CubingGraph& g) {
  if (!g.pocset().unit_weights()) throw Error("linf_unit_matrix requires unit weights");
  return matrix<int>(
      g, [&](int i, int j) { return linf_unit_distance(g.pocset(), g.vertex(i), g.vertex(j)); },
      true);
}

std::vector<double> linf_matrix_serial(const CubingGraph& g) {
  return matrix<double>(
      g, [&](int i, int j) { return linf_weighted_vertices(g.pocset(), g.vertex(i), g.vertex(j)); },
      false);
}

std::vector<double> linf_matrix_parallel(const CubingGraph& g) {
  return matrix<double>(
      g, [&](int i, int j) { return linf_weighted_vertices(g.pocset(), g.vertex(i), g.vertex(j)); },
      true);
}

}  // namespace medianite::kernels
