#pragma once

#include <array>
#include <optional>
#include <vector>

#include "medianite/dual.hpp"
#include "medianite/pocset.hpp"

namespace medianite {

/// Oriented walls on which two points differ, each element taken on the
/// first argument's side. For vertices this is the combinatorial difference
/// U \ W.
struct Separator {
  std::vector<Element> elements;  // sorted by wall
};

Separator separator_vertices(const PocSet& p, const Ultrafilter& u, const Ultrafilter& v);
Separator separator(const PocSet& p, const Point& x, const Point& y);

double l1_distance_vertices(const PocSet& p, const Ultrafilter& u, const Ultrafilter& v);
double l1_distance_points(const PocSet& p, const Point& x, const Point& y);

/// Per-wall majority vote; the result is coherent and symmetric in the
/// arguments.
Ultrafilter median_vertices(const PocSet& p, const Ultrafilter& u,
                            const Ultrafilter& v, const Ultrafilter& w);

/// Coordinatewise real median; the result lies in the complex.
Point median_points(const PocSet& p, const Point& x, const Point& y, const Point& z);

/// probe lies on an l1 geodesic from u to v: wherever u and v agree, probe
/// agrees too.
bool interval_contains(const PocSet& p, const Ultrafilter& u, const Ultrafilter& v,
                       const Ultrafilter& probe);

/// Vertices choosing side a, as indices into g.
std::vector<int> halfspace_vertices(const CubingGraph& g, Element a);

/// Closure under intervals, checked exhaustively over the vertex set.
bool is_convex_vertexset(const CubingGraph& g, const std::vector<int>& subset);

/// First (x, y, probe) violating convexity, or nullopt.
std::optional<std::array<int, 3>> convexity_witness(const CubingGraph& g,
                                                    const std::vector<int>& subset);

/// A maximum-weight chain in the order induced on a set of elements.
struct ChainResult {
  double weight = 0.0;
  std::vector<Element> chain;  // ascending along the order
};

ChainResult max_weight_chain(const PocSet& p, const std::vector<Element>& elems,
                             const std::vector<double>& node_weight);

/// Size of the longest chain in the separator. Requires unit weights; equals
/// the number of steps of the normal cube path.
int linf_unit_distance(const PocSet& p, const Ultrafilter& u, const Ultrafilter& v);

/// Maximum node-weighted chain in the separator, node weight |x(a) - y(a)|.
/// Reduces to linf_unit_distance on vertices with unit weights.
double linf_weighted_distance(const PocSet& p, const Point& x, const Point& y);
double linf_weighted_vertices(const PocSet& p, const Ultrafilter& u, const Ultrafilter& v);

/// As above, also reporting the maximizing chain (ties broken toward smaller
/// wall indices).
ChainResult linf_weighted_witness(const PocSet& p, const Point& x, const Point& y);

/// A vertex path with each step flipping a transverse set; lengths are sums
/// of within-cube distances.
struct BrokenPath {
  std::vector<Ultrafilter> vertices;
  std::vector<std::vector<Element>> steps;  // elements flipped per step
  double length_l1 = 0.0;
  double length_linf = 0.0;
};

/// The canonical path from u to v flipping min(U_i \ v) at each step. With
/// unit weights the step count equals linf_unit_distance(u, v).
BrokenPath normal_cube_path(const PocSet& p, const Ultrafilter& u, const Ultrafilter& v);

/// All vertices at linf_unit_distance <= r from the center. Unit weights.
std::vector<int> linf_ball_vertices(const CubingGraph& g, int center, int r);

}  // namespace medianite
