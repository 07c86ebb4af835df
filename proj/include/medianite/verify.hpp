#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "medianite/dual.hpp"
#include "medianite/metrics.hpp"

namespace medianite {

/// A finite labeled metric space given by its full distance matrix.
struct FiniteMetric {
  std::vector<std::string> labels;
  std::vector<double> d;  // n x n, row-major
  int n = 0;

  double at(int i, int j) const { return d[std::size_t(i) * n + j]; }
  double diameter() const;
  /// Symmetry, zero diagonal, nonnegativity, triangle inequality.
  void validate() const;
};

FiniteMetric vertex_metric_l1(const CubingGraph& g);
FiniteMetric vertex_metric_linf(const CubingGraph& g);

/// A family of closed balls; admissible when r_i + r_j >= d(c_i, c_j) for
/// all pairs.
struct BallFamily {
  std::vector<int> centers;
  std::vector<double> radii;
};

bool admissible(const FiniteMetric& m, const BallFamily& f);

/// Shortest cube-diagonal path between the pull-backs of u and v in the n-th
/// lower rational approximation, rescaled by 1/n. Edges join vertices sharing
/// a cube with their within-cube distance; the search never needs to leave
/// the interval between the endpoints. Within 2|P|/n of the weighted linf
/// distance.
double oracle_linf_distance(const PocSet& p, const Ultrafilter& u,
                            const Ultrafilter& v, int n);

/// Full oracle matrix over the vertex set (parallel sweep).
std::vector<double> oracle_linf_matrix(const CubingGraph& g, int n);

struct DaggerReport {
  bool pass = true;
  int center = -1;
  int radius = -1;
  std::array<int, 3> witness{-1, -1, -1};  // (x, y, probe) violating convexity
  int balls_checked = 0;
};

/// Every linf ball of integer radius is an l1-convex vertex set. Unit
/// weights; exhaustive over centers and radii up to the diameter.
DaggerReport check_dagger(const CubingGraph& g);

struct HyperconvexityReport {
  bool pass = true;
  BallFamily witness;  // admissible family with empty intersection, if any
  std::uint64_t candidates_checked = 0;
};

/// Enumerates admissible ball families (size <= max_family, radii on the
/// grid) and requires a common point for each. Only radius vectors minimal
/// under admissibility need checking: larger radii only grow the balls.
/// Throws GridTooFine past the budget.
HyperconvexityReport hyperconvexity_check(const FiniteMetric& m, double grid_step,
                                          int max_family = 4,
                                          std::uint64_t budget = 50'000'000);

struct HellyReport {
  enum class Status { pass, fail, not_applicable };
  Status status = Status::pass;
  int common_vertex = -1;
  std::array<int, 2> disjoint_pair{-1, -1};
};

/// If the convex sets pairwise intersect, they must globally intersect.
/// Non-convex input sets are an error; a disjoint pair is not_applicable.
HellyReport helly_check(const CubingGraph& g, const std::vector<std::vector<int>>& family);

struct HellySweepReport {
  bool pass = true;
  std::vector<std::vector<Element>> witness;  // defining elements per set
  std::uint64_t families_checked = 0;
};

/// Sweeps all pairwise-intersecting families (size <= max_family) of
/// halfspace intersections V(A), |A| <= 2, requiring a common vertex.
HellySweepReport helly_halfspace_sweep(const CubingGraph& g, int max_family = 4,
                                       std::uint64_t budget = 50'000'000);

/// A wall separating w from the linf ball of radius n about u, taken from
/// the last step of the normal cube path and verified exhaustively before
/// returning. Unit weights; throws NotSeparated when linf(u, w) <= n.
Element ball_separation_witness(const CubingGraph& g, int u, int w, int n);

}  // namespace medianite
