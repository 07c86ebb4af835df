#include "medianite/refine.hpp"

#include <algorithm>
#include <cmath>

#include "medianite/errors.hpp"
#include "medianite/metrics.hpp"

namespace medianite {

namespace {

RefinementMap build_refinement(const PocSet& p, const std::vector<int>& counts,
                               const std::vector<std::vector<double>>& sub_weights) {
  RefinementMap r;
  r.target = p;
  r.fiber.resize(p.walls());
  int total = 0;
  for (int w = 0; w < p.walls(); ++w) {
    for (int i = 0; i < counts[w]; ++i) r.fiber[w].push_back(total + i);
    total += counts[w];
  }
  r.parent_.resize(total);
  std::vector<double> weights(total);
  std::vector<std::string> labels(total);
  for (int w = 0; w < p.walls(); ++w)
    for (int i = 0; i < counts[w]; ++i) {
      int s = r.fiber[w][i];
      r.parent_[s] = w;
      weights[s] = sub_weights[w][i];
      labels[s] = counts[w] == 1 ? p.label(w) : p.label(w) + "." + std::to_string(i);
    }

  std::vector<Bits> rows(2 * total, Bits(2 * total));
  // Within a fiber: ascending chain on positive sides, reversed on stars.
  for (int w = 0; w < p.walls(); ++w)
    for (int i = 0; i < counts[w]; ++i)
      for (int j = i; j < counts[w]; ++j) {
        rows[2 * r.fiber[w][i]].set(2 * r.fiber[w][j]);
        rows[2 * r.fiber[w][j] + 1].set(2 * r.fiber[w][i] + 1);
      }
  // Across fibers: every sub-element inherits its parent's relations.
  for (Element e = 0; e < p.elements(); ++e)
    for (Element f = 0; f < p.elements(); ++f) {
      if (wall_of(e) == wall_of(f) || !p.leq(e, f)) continue;
      for (int a : r.fiber[wall_of(e)])
        for (int b : r.fiber[wall_of(f)])
          rows[2 * a + (e & 1)].set(2 * b + (f & 1));
    }
  for (Element e = 0; e < 2 * total; ++e) rows[e].set(e);

  r.source = PocSet::from_closed(total, std::move(rows), std::move(weights),
                                 std::move(labels));
  validate_refinement(r);
  return r;
}

}  // namespace

RefinementMap refine(const PocSet& p, const std::vector<std::vector<double>>& splits) {
  if (int(splits.size()) != p.walls())
    throw WeightMismatch(int(splits.size()), "splits must cover every wall");
  std::vector<int> counts(p.walls());
  for (int w = 0; w < p.walls(); ++w) {
    if (splits[w].empty())
      throw WeightMismatch(w, "wall " + p.label(w) + " has an empty split");
    double sum = 0.0;
    for (double s : splits[w]) {
      if (!(s > 0.0))
        throw WeightMismatch(w, "wall " + p.label(w) + " has a non-positive sub-weight");
      sum += s;
    }
    if (std::abs(sum - p.weight(w)) > 1e-9)
      throw WeightMismatch(w, "sub-weights of wall " + p.label(w) +
                                  " sum to " + std::to_string(sum) +
                                  ", expected " + std::to_string(p.weight(w)));
    counts[w] = int(splits[w].size());
  }
  return build_refinement(p, counts, splits);
}

void validate_refinement(const RefinementMap& r) {
  const PocSet& s = r.source;
  const PocSet& t = r.target;
  for (int w = 0; w < t.walls(); ++w)
    for (std::size_t i = 0; i + 1 < r.fiber[w].size(); ++i)
      if (!s.lt(2 * r.fiber[w][i], 2 * r.fiber[w][i + 1]))
        throw Error("fiber of wall " + t.label(w) + " is not an ascending chain");
  for (Element a = 0; a < s.elements(); ++a)
    for (Element b = 0; b < s.elements(); ++b) {
      int wa = r.parent_[wall_of(a)], wb = r.parent_[wall_of(b)];
      if (wa == wb) continue;
      Element ia = 2 * wa + (a & 1), ib = 2 * wb + (b & 1);
      if (s.leq(a, b) != t.leq(ia, ib))
        throw Error("cross-fiber order does not mirror the target at (" +
                    s.element_name(a) + ", " + s.element_name(b) + ")");
    }
}

RefinementMap compose(const RefinementMap& a, const RefinementMap& b) {
  if (!(b.target == a.source)) throw Error("compose: b must refine a.source");
  RefinementMap r;
  r.source = b.source;
  r.target = a.target;
  r.fiber.resize(a.target.walls());
  r.parent_.resize(b.source.walls());
  for (int w = 0; w < a.target.walls(); ++w)
    for (int mid : a.fiber[w])
      for (int fine : b.fiber[mid]) {
        r.fiber[w].push_back(fine);
        r.parent_[fine] = w;
      }
  validate_refinement(r);
  return r;
}

Ultrafilter pull_back_vertex(const RefinementMap& r, const Ultrafilter& u) {
  Ultrafilter v(r.source.walls());
  for (int sw = 0; sw < r.source.walls(); ++sw)
    v.neg.set(sw, u.neg.test(r.parent_[sw]));
  return v;
}

RationalApprox lower_rational_approximation(const PocSet& p, int n) {
  if (n < 1) throw Error("subdivision level must be at least 1");
  std::vector<int> counts(p.walls());
  std::vector<std::vector<double>> unit(p.walls());
  for (int w = 0; w < p.walls(); ++w) {
    counts[w] = int(std::floor(n * p.weight(w) + 1e-9));
    if (counts[w] == 0)
      throw DegenerateWall(w, "wall " + p.label(w) + " has floor(n*w) = 0 at n = " +
                                  std::to_string(n));
    unit[w].assign(counts[w], 1.0);
  }
  RationalApprox ra{PocSet{}, 1.0 / n, build_refinement(p, counts, unit)};
  ra.approx = ra.map.source;
  return ra;
}

DeviationReport deformation_bound_check(const PocSet& shape,
                                        const std::vector<double>& u_weights,
                                        const std::vector<double>& w_weights) {
  auto verts = enumerate_ultrafilters(shape, EnumMode::flip_bfs);
  return deformation_bound_check(shape, u_weights, w_weights, verts);
}

DeviationReport deformation_bound_check(const PocSet& shape,
                                        const std::vector<double>& u_weights,
                                        const std::vector<double>& w_weights,
                                        std::span<const Ultrafilter> verts) {
  PocSet pu = shape.with_weights(u_weights);
  PocSet pw = shape.with_weights(w_weights);
  DeviationReport rep;
  for (int w = 0; w < shape.walls(); ++w)
    rep.bound += std::abs(u_weights[w] - w_weights[w]);
  for (int i = 0; i < int(verts.size()); ++i)
    for (int j = i + 1; j < int(verts.size()); ++j) {
      double d1 = std::abs(l1_distance_vertices(pu, verts[i], verts[j]) -
                           l1_distance_vertices(pw, verts[i], verts[j]));
      double di = std::abs(linf_weighted_vertices(pu, verts[i], verts[j]) -
                           linf_weighted_vertices(pw, verts[i], verts[j]));
      rep.max_deviation_l1 = std::max(rep.max_deviation_l1, d1);
      rep.max_deviation_linf = std::max(rep.max_deviation_linf, di);
      if (std::max(d1, di) > rep.max_deviation) {
        rep.max_deviation = std::max(d1, di);
        rep.witness = {i, j};
      }
    }
  rep.pass = rep.max_deviation <= rep.bound + 1e-12;
  return rep;
}

IsometryReport subdivision_isometry_check(const RefinementMap& r) {
  auto verts = enumerate_ultrafilters(r.target, EnumMode::flip_bfs);
  IsometryReport rep;
  double worst = -1.0;
  for (int i = 0; i < int(verts.size()); ++i) {
    Ultrafilter pi = pull_back_vertex(r, verts[i]);
    for (int j = i + 1; j < int(verts.size()); ++j) {
      Ultrafilter pj = pull_back_vertex(r, verts[j]);
      double d1 = std::abs(l1_distance_vertices(r.target, verts[i], verts[j]) -
                           l1_distance_vertices(r.source, pi, pj));
      double di = std::abs(linf_weighted_vertices(r.target, verts[i], verts[j]) -
                           linf_weighted_vertices(r.source, pi, pj));
      rep.max_deviation_l1 = std::max(rep.max_deviation_l1, d1);
      rep.max_deviation_linf = std::max(rep.max_deviation_linf, di);
      if (std::max(d1, di) > worst) {
        worst = std::max(d1, di);
        rep.witness = {i, j};
      }
    }
  }
  rep.pass = rep.max_deviation_l1 <= rep.tolerance && rep.max_deviation_linf <= rep.tolerance;
  return rep;
}

}  // namespace medianite
