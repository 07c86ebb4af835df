#include "medianite/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "medianite/errors.hpp"

namespace medianite {

Separator separator_vertices(const PocSet& p, const Ultrafilter& u, const Ultrafilter& v) {
  Separator s;
  for (int w = 0; w < p.walls(); ++w)
    if (u.neg.test(w) != v.neg.test(w)) s.elements.push_back(u.chosen(w));
  return s;
}

Separator separator(const PocSet& p, const Point& x, const Point& y) {
  (void)p;
  Separator s;
  auto ix = x.coords.begin();
  auto iy = y.coords.begin();
  while (ix != x.coords.end() || iy != y.coords.end()) {
    int w;
    double vx = 0.0, vy = 0.0;
    if (iy == y.coords.end() || (ix != x.coords.end() && ix->first < iy->first)) {
      w = ix->first;
      vx = (ix++)->second;
      if (iy != y.coords.end() && iy->first == w) vy = (iy++)->second;
    } else if (ix == x.coords.end() || iy->first < ix->first) {
      w = iy->first;
      vy = (iy++)->second;
    } else {
      w = ix->first;
      vx = (ix++)->second;
      vy = (iy++)->second;
    }
    if (vx == vy) continue;
    Element b = x.base.chosen(w);
    s.elements.push_back(vx < vy ? b : star(b));
  }
  return s;
}

double l1_distance_vertices(const PocSet& p, const Ultrafilter& u, const Ultrafilter& v) {
  double d = 0.0;
  for (int w = 0; w < p.walls(); ++w)
    if (u.neg.test(w) != v.neg.test(w)) d += p.weight(w);
  return d;
}

double l1_distance_points(const PocSet& p, const Point& x, const Point& y) {
  (void)p;
  double d = 0.0;
  auto ix = x.coords.begin();
  auto iy = y.coords.begin();
  while (ix != x.coords.end() && iy != y.coords.end()) {
    if (ix->first < iy->first)
      d += (ix++)->second;
    else if (iy->first < ix->first)
      d += (iy++)->second;
    else {
      d += std::abs(ix->second - iy->second);
      ++ix, ++iy;
    }
  }
  for (; ix != x.coords.end(); ++ix) d += ix->second;
  for (; iy != y.coords.end(); ++iy) d += iy->second;
  return d;
}

Ultrafilter median_vertices(const PocSet& p, const Ultrafilter& u,
                            const Ultrafilter& v, const Ultrafilter& w) {
  Ultrafilter m(p.walls());
  for (int i = 0; i < p.walls(); ++i) {
    int neg = int(u.neg.test(i)) + int(v.neg.test(i)) + int(w.neg.test(i));
    m.neg.set(i, neg >= 2);
  }
  return m;
}

Point median_points(const PocSet& p, const Point& x, const Point& y, const Point& z) {
  if (!(x.base == y.base && y.base == z.base))
    throw Error("median of points with different basepoints");
  std::vector<int> walls;
  for (const auto& c : x.coords) walls.push_back(c.first);
  for (const auto& c : y.coords) walls.push_back(c.first);
  for (const auto& c : z.coords) walls.push_back(c.first);
  std::sort(walls.begin(), walls.end());
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
  std::vector<std::pair<int, double>> coords;
  for (int w : walls) {
    double a = x.at(w), b = y.at(w), c = z.at(w);
    double m = std::max(std::min(a, b), std::min(std::max(a, b), c));
    if (m != 0.0) coords.emplace_back(w, m);
  }
  return make_point(p, x.base, std::move(coords));
}

bool interval_contains(const PocSet& p, const Ultrafilter& u, const Ultrafilter& v,
                       const Ultrafilter& probe) {
  (void)p;
  const auto& wu = u.neg.words();
  const auto& wv = v.neg.words();
  const auto& wp = probe.neg.words();
  for (std::size_t k = 0; k < wu.size(); ++k)
    if ((wp[k] ^ wu[k]) & ~(wu[k] ^ wv[k])) return false;
  return true;
}

std::vector<int> halfspace_vertices(const CubingGraph& g, Element a) {
  std::vector<int> out;
  for (int i = 0; i < g.size(); ++i)
    if (g.vertex(i).has(a)) out.push_back(i);
  return out;
}

std::optional<std::array<int, 3>> convexity_witness(const CubingGraph& g,
                                                    const std::vector<int>& subset) {
  std::vector<char> in(g.size(), 0);
  for (int i : subset) in[i] = 1;
  for (int x : subset)
    for (int y : subset) {
      if (y < x) continue;
      for (int z = 0; z < g.size(); ++z)
        if (!in[z] && interval_contains(g.pocset(), g.vertex(x), g.vertex(y), g.vertex(z)))
          return std::array<int, 3>{x, y, z};
    }
  return std::nullopt;
}

bool is_convex_vertexset(const CubingGraph& g, const std::vector<int>& subset) {
  return !convexity_witness(g, subset).has_value();
}

ChainResult max_weight_chain(const PocSet& p, const std::vector<Element>& elems,
                             const std::vector<double>& node_weight) {
  const int m = int(elems.size());
  // Sorting by predecessor count inside the set gives a linear extension.
  std::vector<int> preds(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && p.lt(elems[j], elems[i])) ++preds[i];
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return preds[a] < preds[b]; });
  std::vector<double> best(m, 0.0);
  std::vector<int> parent(m, -1);
  int argmax = -1;
  for (int oi = 0; oi < m; ++oi) {
    int i = order[oi];
    best[i] = node_weight[i];
    for (int oj = 0; oj < oi; ++oj) {
      int j = order[oj];
      if (p.lt(elems[j], elems[i]) && best[j] + node_weight[i] > best[i]) {
        best[i] = best[j] + node_weight[i];
        parent[i] = j;
      }
    }
    if (argmax < 0 || best[i] > best[argmax]) argmax = i;
  }
  ChainResult r;
  if (argmax < 0) return r;
  r.weight = best[argmax];
  for (int i = argmax; i >= 0; i = parent[i]) r.chain.push_back(elems[i]);
  std::reverse(r.chain.begin(), r.chain.end());
  return r;
}

int linf_unit_distance(const PocSet& p, const Ultrafilter& u, const Ultrafilter& v) {
  if (!p.unit_weights()) throw Error("linf_unit_distance requires unit weights");
  Separator s = separator_vertices(p, u, v);
  std::vector<double> nw(s.elements.size(), 1.0);
  return int(max_weight_chain(p, s.elements, nw).weight + 0.5);
}

ChainResult linf_weighted_witness(const PocSet& p, const Point& x, const Point& y) {
  Separator s = separator(p, x, y);
  // Nested pairs inside a separator are comparable (never a <= b*), so the
  // maximum over nested subsets is a maximum over chains. Points outside the
  // complex would break this; refuse them.
  for (std::size_t i = 0; i < s.elements.size(); ++i)
    for (std::size_t j = i + 1; j < s.elements.size(); ++j)
      if (p.leq(s.elements[i], star(s.elements[j])) ||
          p.leq(s.elements[j], star(s.elements[i])))
        throw Error("separator is incoherent; arguments are not points of the complex");
  std::vector<double> nw;
  nw.reserve(s.elements.size());
  for (Element e : s.elements) nw.push_back(std::abs(x.at(wall_of(e)) - y.at(wall_of(e))));
  return max_weight_chain(p, s.elements, nw);
}

double linf_weighted_distance(const PocSet& p, const Point& x, const Point& y) {
  return linf_weighted_witness(p, x, y).weight;
}

double linf_weighted_vertices(const PocSet& p, const Ultrafilter& u, const Ultrafilter& v) {
  Separator s = separator_vertices(p, u, v);
  std::vector<double> nw;
  nw.reserve(s.elements.size());
  for (Element e : s.elements) nw.push_back(p.weight(wall_of(e)));
  return max_weight_chain(p, s.elements, nw).weight;
}

BrokenPath normal_cube_path(const PocSet& p, const Ultrafilter& u, const Ultrafilter& v) {
  BrokenPath path;
  path.vertices.push_back(u);
  Ultrafilter cur = u;
  while (!(cur == v)) {
    // Minimal elements of cur \ v. These are transverse and minimal in cur.
    std::vector<Element> sep;
    for (int w = 0; w < p.walls(); ++w)
      if (cur.neg.test(w) != v.neg.test(w)) sep.push_back(cur.chosen(w));
    std::vector<Element> step;
    double wmax = 0.0, wsum = 0.0;
    for (Element a : sep) {
      bool minimal = true;
      for (Element b : sep)
        if (b != a && p.lt(b, a)) {
          minimal = false;
          break;
        }
      if (minimal) {
        step.push_back(a);
        wmax = std::max(wmax, p.weight(wall_of(a)));
        wsum += p.weight(wall_of(a));
      }
    }
    cur = flip_set(p, cur, step);  // min(cur \ v) is transverse and minimal in cur
    path.vertices.push_back(cur);
    path.steps.push_back(std::move(step));
    path.length_linf += wmax;
    path.length_l1 += wsum;
  }
  return path;
}

std::vector<int> linf_ball_vertices(const CubingGraph& g, int center, int r) {
  std::vector<int> out;
  for (int i = 0; i < g.size(); ++i)
    if (linf_unit_distance(g.pocset(), g.vertex(center), g.vertex(i)) <= r)
      out.push_back(i);
  return out;
}

}  // namespace medianite
