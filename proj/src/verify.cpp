#include "medianite/verify.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <unordered_map>

#include "medianite/errors.hpp"
#include "medianite/kernels.hpp"
#include "medianite/refine.hpp"

namespace medianite {

double FiniteMetric::diameter() const {
  double m = 0.0;
  for (double x : d) m = std::max(m, x);
  return m;
}

void FiniteMetric::validate() const {
  for (int i = 0; i < n; ++i) {
    if (at(i, i) != 0.0) throw Error("metric has a nonzero diagonal entry");
    for (int j = 0; j < n; ++j) {
      if (at(i, j) < 0.0) throw Error("metric has a negative entry");
      if (at(i, j) != at(j, i)) throw Error("metric is not symmetric");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (at(i, j) > at(i, k) + at(k, j) + 1e-12)
          throw Error("metric violates the triangle inequality");
}

FiniteMetric vertex_metric_l1(const CubingGraph& g) {
  FiniteMetric m;
  m.n = g.size();
  m.d = kernels::l1_matrix_parallel(g);
  for (int i = 0; i < m.n; ++i) m.labels.push_back(g.vertex(i).signs());
  return m;
}

FiniteMetric vertex_metric_linf(const CubingGraph& g) {
  FiniteMetric m;
  m.n = g.size();
  m.d = kernels::linf_matrix_parallel(g);
  for (int i = 0; i < m.n; ++i) m.labels.push_back(g.vertex(i).signs());
  return m;
}

bool admissible(const FiniteMetric& m, const BallFamily& f) {
  for (std::size_t i = 0; i < f.centers.size(); ++i)
    for (std::size_t j = i + 1; j < f.centers.size(); ++j)
      if (f.radii[i] + f.radii[j] < m.at(f.centers[i], f.centers[j]) - 1e-12) return false;
  return true;
}

// --------------------------------------------------------------------------
// Subdivision oracle.
//
// The oracle walks the cube-diagonal graph of the n-th lower rational
// approximation: vertices of the refined dual, edges between vertices sharing
// a cube, unit edge length rescaled by 1/n. Projecting a path onto the
// interval between the endpoints never lengthens it, so the search stays on
// refined vertices that agree with both endpoints outside their separator.
// Such a vertex is a crossing count c_w in [0, fiber size] per separator
// wall, and a step moves a parent-transverse set of walls by one sub-wall
// each. The heuristic max_w(remaining_w) is a lower bound because one step
// advances each wall at most once; the search is Dijkstra on g + h.

namespace {

struct OracleCtx {
  const PocSet& p;
  int n;
  std::vector<int> counts;  // floor(n * w) per wall
};

OracleCtx make_oracle_ctx(const PocSet& p, int n) {
  if (n < 1) throw Error("subdivision level must be at least 1");
  OracleCtx ctx{p, n, {}};
  ctx.counts.resize(p.walls());
  for (int w = 0; w < p.walls(); ++w) {
    ctx.counts[w] = int(std::floor(n * p.weight(w) + 1e-9));
    if (ctx.counts[w] == 0)
      throw DegenerateWall(w, "wall " + p.label(w) + " has floor(n*w) = 0 at n = " +
                                  std::to_string(n));
  }
  return ctx;
}

double oracle_pair(const OracleCtx& ctx, const Ultrafilter& u, const Ultrafilter& v) {
  const PocSet& p = ctx.p;
  std::vector<int> sepw;
  for (int w = 0; w < p.walls(); ++w)
    if (u.neg.test(w) != v.neg.test(w)) sepw.push_back(w);
  const int s = int(sepw.size());
  if (s == 0) return 0.0;

  std::vector<Element> eu(s);
  std::vector<int> m(s);
  for (int i = 0; i < s; ++i) {
    eu[i] = u.chosen(sepw[i]);
    m[i] = ctx.counts[sepw[i]];
  }
  // side(i, 0) = u's element, side(i, 1) = v's element of wall i.
  auto side = [&](int i, int b) { return b ? star(eu[i]) : eu[i]; };
  // bad[i][j][si][sj]: sides si of i and sj of j cannot both be chosen.
  std::vector<std::array<std::array<bool, 2>, 2>> bad(std::size_t(s) * s);
  std::vector<bool> trans(std::size_t(s) * s, false);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      if (i == j) continue;
      for (int si = 0; si < 2; ++si)
        for (int sj = 0; sj < 2; ++sj) {
          Element a = side(i, si), b = side(j, sj);
          bad[std::size_t(i) * s + j][si][sj] = p.leq(a, star(b)) || p.leq(b, star(a));
        }
      trans[std::size_t(i) * s + j] = p.transverse(eu[i], eu[j]);
    }

  // Mixed-radix state key.
  std::vector<std::uint64_t> radix(s);
  std::uint64_t span = 1;
  for (int i = 0; i < s; ++i) {
    radix[i] = span;
    if (span > std::uint64_t(-1) / std::uint64_t(m[i] + 1))
      throw Error("oracle state space does not fit a 64-bit key");
    span *= std::uint64_t(m[i] + 1);
  }
  std::uint64_t goal = 0;
  for (int i = 0; i < s; ++i) goal += radix[i] * std::uint64_t(m[i]);

  // Availability of side b at crossing count c.
  auto avail = [&](int c, int mi, int b) { return b ? c > 0 : c < mi; };
  auto pair_ok = [&](int i, int ci, int j, int cj) {
    const auto& bd = bad[std::size_t(i) * s + j];
    for (int si = 0; si < 2; ++si) {
      if (!avail(ci, m[i], si)) continue;
      for (int sj = 0; sj < 2; ++sj)
        if (avail(cj, m[j], sj) && bd[si][sj]) return false;
    }
    return true;
  };

  auto h = [&](const std::vector<int>& c) {
    int hh = 0;
    for (int i = 0; i < s; ++i) hh = std::max(hh, m[i] - c[i]);
    return hh;
  };

  std::unordered_map<std::uint64_t, int> best;
  using QE = std::pair<int, std::pair<int, std::uint64_t>>;  // (f, (g, key))
  std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
  std::vector<int> c0(s, 0);
  best[0] = 0;
  pq.push({h(c0), {0, 0}});

  std::vector<int> cur(s), nxt(s), moved;
  while (!pq.empty()) {
    auto [f, gk] = pq.top();
    auto [gcur, key] = gk;
    pq.pop();
    if (auto it = best.find(key); it != best.end() && it->second < gcur) continue;
    if (key == goal) return double(gcur) / ctx.n;
    std::uint64_t k = key;
    for (int i = s - 1; i >= 0; --i) {
      cur[i] = int(k / radix[i]);
      k %= radix[i];
    }

    moved.clear();
    nxt = cur;
    auto relax = [&]() {
      for (int i : moved)
        for (int j = 0; j < s; ++j)
          if (j != i && !pair_ok(i, nxt[i], j, nxt[j])) return;
      std::uint64_t nkey = 0;
      for (int i = 0; i < s; ++i) nkey += radix[i] * std::uint64_t(nxt[i]);
      int ng = gcur + 1;
      auto it = best.find(nkey);
      if (it == best.end() || ng < it->second) {
        best[nkey] = ng;
        pq.push({ng + h(nxt), {ng, nkey}});
      }
    };
    auto rec = [&](auto&& self, int i) -> void {
      if (i == s) {
        if (!moved.empty()) relax();
        return;
      }
      self(self, i + 1);
      for (int d : {+1, -1}) {
        int nc = cur[i] + d;
        if (nc < 0 || nc > m[i]) continue;
        bool ok = true;
        for (int j : moved)
          if (!trans[std::size_t(i) * s + j]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        moved.push_back(i);
        nxt[i] = nc;
        self(self, i + 1);
        nxt[i] = cur[i];
        moved.pop_back();
      }
    };
    rec(rec, 0);
  }
  throw Error("oracle found no path; the dual is not connected");
}

}  // namespace

double oracle_linf_distance(const PocSet& p, const Ultrafilter& u,
                            const Ultrafilter& v, int n) {
  OracleCtx ctx = make_oracle_ctx(p, n);
  return oracle_pair(ctx, u, v);
}

std::vector<double> oracle_linf_matrix(const CubingGraph& g, int n) {
  OracleCtx ctx = make_oracle_ctx(g.pocset(), n);
  const int v = g.size();
  std::vector<double> d(std::size_t(v) * v, 0.0);
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) {
      double x = oracle_pair(ctx, g.vertex(i), g.vertex(j));
      d[std::size_t(i) * v + j] = x;
      d[std::size_t(j) * v + i] = x;
    }
  return d;
}

DaggerReport check_dagger(const CubingGraph& g) {
  if (!g.pocset().unit_weights()) throw Error("check_dagger requires unit weights");
  auto dist = kernels::linf_unit_matrix_parallel(g);
  const int v = g.size();
  int diam = 0;
  for (int x : dist) diam = std::max(diam, x);

  DaggerReport rep;
  int balls = 0;
#pragma omp parallel
  {
    DaggerReport local;
    int local_balls = 0;
#pragma omp for schedule(dynamic) nowait
    for (int center = 0; center < v; ++center) {
      for (int r = 0; r <= diam; ++r) {
        std::vector<int> ball;
        for (int i = 0; i < v; ++i)
          if (dist[std::size_t(center) * v + i] <= r) ball.push_back(i);
        ++local_balls;
        if (auto w = convexity_witness(g, ball)) {
          if (local.pass || center < local.center ||
              (center == local.center && r < local.radius)) {
            local.pass = false;
            local.center = center;
            local.radius = r;
            local.witness = *w;
          }
          break;
        }
      }
    }
#pragma omp critical
    {
      balls += local_balls;
      if (!local.pass && (rep.pass || local.center < rep.center ||
                          (local.center == rep.center && local.radius < rep.radius)))
        rep = local;
    }
  }
  rep.balls_checked = balls;
  return rep;
}

HyperconvexityReport hyperconvexity_check(const FiniteMetric& m, double grid_step,
                                          int max_family, std::uint64_t budget) {
  if (grid_step <= 0.0) throw Error("radii grid step must be positive");
  m.validate();
  HyperconvexityReport rep;
  const int n = m.n;

  // Integer pairwise requirements in grid units: g_i + g_j >= need(i, j).
  auto need = [&](int a, int b) {
    return int(std::ceil(m.at(a, b) / grid_step - 1e-9));
  };

  std::vector<int> centers;
  std::vector<int> radii;  // in grid units
  auto has_common_point = [&]() {
    for (int q = 0; q < n; ++q) {
      bool ok = true;
      for (std::size_t i = 0; i < centers.size() && ok; ++i)
        if (m.at(q, centers[i]) > radii[i] * grid_step + 1e-9) ok = false;
      if (ok) return true;
    }
    return false;
  };

  // Enumerate admissibility-minimal radius vectors; larger radii only grow
  // the balls, so these are the binding cases.
  auto radii_rec = [&](auto&& self, std::size_t i) -> bool {
    const std::size_t k = centers.size();
    if (i == k) {
      for (std::size_t a = 0; a < k; ++a) {
        if (radii[a] == 0) continue;
        bool tight = false;
        for (std::size_t b = 0; b < k && !tight; ++b)
          if (b != a && radii[a] + radii[b] == need(centers[a], centers[b])) tight = true;
        if (!tight) return true;  // not minimal; a larger vector covers it
      }
      if (++rep.candidates_checked > budget)
        throw GridTooFine("hyperconvexity enumeration exceeded the budget of " +
                          std::to_string(budget) + " candidates");
      if (!has_common_point()) {
        rep.pass = false;
        rep.witness.centers = centers;
        for (int r : radii) rep.witness.radii.push_back(r * grid_step);
        return false;
      }
      return true;
    }
    int lb = 0, ub = 0;
    for (std::size_t j = 0; j < centers.size(); ++j) {
      if (j == i) continue;
      ub = std::max(ub, need(centers[i], centers[j]));
      if (j < i) lb = std::max(lb, need(centers[i], centers[j]) - radii[j]);
    }
    for (int r = lb; r <= ub; ++r) {
      radii[i] = r;
      if (!self(self, i + 1)) return false;
    }
    return true;
  };

  auto centers_rec = [&](auto&& self, int start, int k) -> bool {
    if (int(centers.size()) == k) {
      radii.assign(k, 0);
      return radii_rec(radii_rec, 0);
    }
    for (int c = start; c < n; ++c) {
      centers.push_back(c);
      if (!self(self, c + 1, k)) return false;
      centers.pop_back();
    }
    return true;
  };

  for (int k = 1; k <= max_family; ++k)
    if (!centers_rec(centers_rec, 0, k)) break;
  return rep;
}

HellyReport helly_check(const CubingGraph& g, const std::vector<std::vector<int>>& family) {
  for (const auto& set : family)
    if (!is_convex_vertexset(g, set))
      throw Error("helly_check requires convex input sets");
  HellyReport rep;
  std::vector<Bits> masks;
  for (const auto& set : family) {
    Bits b(g.size());
    for (int i : set) b.set(i);
    masks.push_back(std::move(b));
  }
  auto intersect = [&](const Bits& a, const Bits& b) {
    for (std::size_t k = 0; k < a.words().size(); ++k)
      if (a.words()[k] & b.words()[k]) return true;
    return false;
  };
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (!intersect(masks[i], masks[j])) {
        rep.status = HellyReport::Status::not_applicable;
        rep.disjoint_pair = {int(i), int(j)};
        return rep;
      }
  Bits common(g.size());
  for (int i = 0; i < g.size(); ++i) common.set(i);
  for (const auto& mk : masks) common &= mk;
  for (int i = 0; i < g.size(); ++i)
    if (common.test(i)) {
      rep.common_vertex = i;
      return rep;
    }
  rep.status = HellyReport::Status::fail;
  return rep;
}

HellySweepReport helly_halfspace_sweep(const CubingGraph& g, int max_family,
                                       std::uint64_t budget) {
  const PocSet& p = g.pocset();
  const int v = g.size();
  std::vector<Bits> masks;
  std::vector<std::vector<Element>> defs;
  auto add = [&](Bits mk, std::vector<Element> def) {
    if (!mk.any()) return;
    for (const auto& seen : masks)
      if (seen == mk) return;
    masks.push_back(std::move(mk));
    defs.push_back(std::move(def));
  };
  for (Element a = 0; a < p.elements(); ++a) {
    Bits mk(v);
    for (int i = 0; i < v; ++i)
      if (g.vertex(i).has(a)) mk.set(i);
    add(std::move(mk), {a});
  }
  for (Element a = 0; a < p.elements(); ++a)
    for (Element b = a + 1; b < p.elements(); ++b) {
      if (wall_of(a) == wall_of(b)) continue;
      Bits mk(v);
      for (int i = 0; i < v; ++i)
        if (g.vertex(i).has(a) && g.vertex(i).has(b)) mk.set(i);
      add(std::move(mk), {a, b});
    }

  const int S = int(masks.size());
  std::vector<char> ok(std::size_t(S) * S, 0);
  auto intersects = [&](const Bits& a, const Bits& b) {
    for (std::size_t k = 0; k < a.words().size(); ++k)
      if (a.words()[k] & b.words()[k]) return true;
    return false;
  };
  for (int i = 0; i < S; ++i)
    for (int j = 0; j < S; ++j) ok[std::size_t(i) * S + j] = intersects(masks[i], masks[j]);

  HellySweepReport rep;
  std::vector<int> members;
  auto rec = [&](auto&& self, int start, const Bits& common) -> bool {
    if (int(members.size()) == max_family) return true;
    for (int i = start; i < S; ++i) {
      bool pairwise = true;
      for (int mjr : members)
        if (!ok[std::size_t(mjr) * S + i]) {
          pairwise = false;
          break;
        }
      if (!pairwise) continue;
      if (++rep.families_checked > budget)
        throw GridTooFine("helly sweep exceeded the budget of " + std::to_string(budget));
      Bits next = common;
      next &= masks[i];
      if (!next.any() && !members.empty()) {
        members.push_back(i);
        rep.pass = false;
        for (int mjr : members) rep.witness.push_back(defs[mjr]);
        return false;
      }
      members.push_back(i);
      if (!self(self, i + 1, next)) return false;
      members.pop_back();
    }
    return true;
  };
  Bits all(v);
  for (int i = 0; i < v; ++i) all.set(i);
  rec(rec, 0, all);
  return rep;
}

Element ball_separation_witness(const CubingGraph& g, int u, int w, int n) {
  const PocSet& p = g.pocset();
  if (!p.unit_weights()) throw Error("ball_separation_witness requires unit weights");
  const Ultrafilter& U = g.vertex(u);
  const Ultrafilter& W = g.vertex(w);
  if (linf_unit_distance(p, U, W) <= n)
    throw NotSeparated("vertices are at linf distance <= " + std::to_string(n));
  BrokenPath path = normal_cube_path(p, U, W);
  std::vector<Element> last = path.steps.back();
  std::sort(last.begin(), last.end());
  std::vector<int> ball = linf_ball_vertices(g, u, n);
  for (Element a : last) {
    if (W.has(a)) continue;  // need w in V(a*)
    bool contained = true;
    for (int i : ball)
      if (!g.vertex(i).has(a)) {
        contained = false;
        break;
      }
    if (contained) return a;
  }
  throw Error("no element of the last step verifies; this should be impossible");
}

}  // namespace medianite
