#pragma once

#include <array>
#include <vector>

#include "medianite/dual.hpp"
#include "medianite/pocset.hpp"

namespace medianite {

/// A poc morphism source -> target whose fibers are chains. fiber[w] lists
/// the source walls over target wall w, ascending in the source order; the
/// first entry carries the first sub-weight and sits nearest the positive
/// side of the parent wall.
struct RefinementMap {
  PocSet source;
  PocSet target;
  std::vector<std::vector<int>> fiber;

  int parent_wall(int source_wall) const { return parent_[source_wall]; }

  std::vector<int> parent_;  // source wall -> target wall
};

/// Splits each wall into a chain of sub-walls with the given positive
/// sub-weights. Sub-weights per wall must sum to the wall's weight within
/// 1e-9 (WeightMismatch otherwise). The dual is a grid-like subdivision and
/// both metrics are preserved.
RefinementMap refine(const PocSet& p, const std::vector<std::vector<double>>& splits);

/// Checks the refinement axioms (fibers are chains; cross-fiber order mirrors
/// the target). Throws on violation.
void validate_refinement(const RefinementMap& r);

/// b refines a.source; the composite refines a.target.
RefinementMap compose(const RefinementMap& a, const RefinementMap& b);

/// Every fiber element takes the side of its image wall.
Ultrafilter pull_back_vertex(const RefinementMap& r, const Ultrafilter& u);

/// Each wall replaced by floor(n*w) unit sub-walls; distances on the result
/// are rescaled by 1/n. The map's source carries unit weights, so it is not
/// weight-compatible with the target unless every n*w is integral.
struct RationalApprox {
  PocSet approx;  // unit weights
  double scale;   // 1/n
  RefinementMap map;
};

RationalApprox lower_rational_approximation(const PocSet& p, int n);

struct DeviationReport {
  double max_deviation = 0.0;
  double bound = 0.0;
  std::array<int, 2> witness{-1, -1};
  bool pass = true;
  double max_deviation_l1 = 0.0;
  double max_deviation_linf = 0.0;
};

/// Max over vertex pairs of |d_u - d_w| for both metrics; the bound is the
/// wall-wise l1 norm of the weight difference.
DeviationReport deformation_bound_check(const PocSet& shape,
                                        const std::vector<double>& u_weights,
                                        const std::vector<double>& w_weights);

/// Same check over an already enumerated vertex set (the vertex set does not
/// depend on the weights).
DeviationReport deformation_bound_check(const PocSet& shape,
                                        const std::vector<double>& u_weights,
                                        const std::vector<double>& w_weights,
                                        std::span<const Ultrafilter> vertices);

struct IsometryReport {
  double max_deviation_l1 = 0.0;
  double max_deviation_linf = 0.0;
  std::array<int, 2> witness{-1, -1};
  double tolerance = 1e-9;
  bool pass = true;
};

/// Both metrics agree between target vertex pairs and their pull-backs.
IsometryReport subdivision_isometry_check(const RefinementMap& r);

}  // namespace medianite
