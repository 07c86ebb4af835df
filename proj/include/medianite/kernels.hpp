#pragma once

#include <vector>

#include "medianite/dual.hpp"

namespace medianite::kernels {

// Full distance matrices over the vertex set, row-major, V x V. Each entry is
// computed independently, so the serial and OpenMP variants produce bitwise
// identical results; the serial ones are the reference the tests compare
// against.

std::vector<double> l1_matrix_serial(const CubingGraph& g);
std::vector<double> l1_matrix_parallel(const CubingGraph& g);

/// Longest-chain counts; requires unit weights.
std::vector<int> linf_unit_matrix_serial(const CubingGraph& g);
std::vector<int> linf_unit_matrix_parallel(const CubingGraph& g);

/// Weighted max-chain distances.
std::vector<double> linf_matrix_serial(const CubingGraph& g);
std::vector<double> linf_matrix_parallel(const CubingGraph& g);

}  // namespace medianite::kernels
