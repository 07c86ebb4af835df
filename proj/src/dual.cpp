#include "medianite/dual.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>

#include "medianite/errors.hpp"

namespace medianite {

std::string Ultrafilter::signs() const {
  std::string s(neg.size(), '+');
  for (int w = 0; w < neg.size(); ++w)
    if (neg.test(w)) s[w] = '-';
  return s;
}

bool is_coherent(const PocSet& p, const Ultrafilter& u) {
  const int n = p.walls();
  for (int w1 = 0; w1 < n; ++w1) {
    Element a = u.chosen(w1);
    for (int w2 = w1 + 1; w2 < n; ++w2) {
      Element b = u.chosen(w2);
      if (p.leq(a, star(b)) || p.leq(b, star(a))) return false;
    }
  }
  return true;
}

std::vector<Element> min_elements(const PocSet& p, const Ultrafilter& u) {
  const int n = p.walls();
  std::vector<Element> out;
  for (int w = 0; w < n; ++w) {
    Element a = u.chosen(w);
    bool minimal = true;
    for (int w2 = 0; w2 < n && minimal; ++w2) {
      if (w2 == w) continue;
      if (p.lt(u.chosen(w2), a)) minimal = false;
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

Ultrafilter flip(const PocSet& p, const Ultrafilter& u, Element a) {
  if (!u.has(a))
    throw NotMinimal("element " + p.element_name(a) + " is not chosen");
  for (int w = 0; w < p.walls(); ++w)
    if (w != wall_of(a) && p.lt(u.chosen(w), a))
      throw NotMinimal("element " + p.element_name(a) + " is not minimal: " +
                       p.element_name(u.chosen(w)) + " lies below it");
  Ultrafilter v = u;
  v.neg.flip(wall_of(a));
  return v;
}

Ultrafilter flip_set(const PocSet& p, const Ultrafilter& u, std::span<const Element> elems) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!p.transverse(elems[i], elems[j]))
        throw NotMinimal("flip set is not transverse");
  auto mins = min_elements(p, u);
  Ultrafilter v = u;
  for (Element a : elems) {
    if (std::find(mins.begin(), mins.end(), a) == mins.end())
      throw NotMinimal("element " + p.element_name(a) + " is not minimal");
    v.neg.flip(wall_of(a));
  }
  return v;
}

Ultrafilter greedy_seed(const PocSet& p) {
  const int n = p.walls();
  std::vector<signed char> forced(2 * n, 0);  // 1 = chosen, -1 = rejected
  Ultrafilter u(n);
  for (int w = 0; w < n; ++w) {
    Element e;
    if (forced[pos_element(w)] == 1)
      e = pos_element(w);
    else if (forced[neg_element(w)] == 1)
      e = neg_element(w);
    else
      e = pos_element(w);
    u.neg.set(w, !positive(e));
    // Everything above a chosen element is chosen; complements rejected.
    p.ups(e).for_each([&](int f) {
      forced[f] = 1;
      forced[star(f)] = -1;
    });
  }
  return u;
}

namespace {

std::vector<Ultrafilter> enumerate_exhaustive(const PocSet& p, int max_walls) {
  const int n = p.walls();
  if (n > max_walls)
    throw TooManyWalls("exhaustive enumeration over " + std::to_string(n) +
                       " walls exceeds the cap of " + std::to_string(max_walls));
  if (n > 62) throw TooManyWalls("exhaustive enumeration is limited to 62 walls");

  // conflict[e]: all f such that {e, f} cannot both be chosen.
  std::vector<Bits> conflict(2 * n, Bits(2 * n));
  for (Element e = 0; e < 2 * n; ++e)
    for (Element f = 0; f < 2 * n; ++f)
      if (wall_of(e) != wall_of(f) && (p.leq(e, star(f)) || p.leq(f, star(e))))
        conflict[e].set(f);

  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<Ultrafilter> out;

#pragma omp parallel
  {
    std::vector<Ultrafilter> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t m = 0; m < std::int64_t(total); ++m) {
      Bits chosen(2 * n);
      for (int w = 0; w < n; ++w) chosen.set(2 * w + int((m >> w) & 1));
      bool ok = true;
      for (int w = 0; w < n && ok; ++w) {
        const Bits& c = conflict[2 * w + int((m >> w) & 1)];
        for (std::size_t k = 0; k < c.words().size(); ++k)
          if (c.words()[k] & chosen.words()[k]) {
            ok = false;
            break;
          }
      }
      if (ok) {
        Ultrafilter u(n);
        for (int w = 0; w < n; ++w) u.neg.set(w, (m >> w) & 1);
        local.push_back(std::move(u));
      }
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ultrafilter> enumerate_bfs(const PocSet& p) {
  Ultrafilter seed = greedy_seed(p);
  std::unordered_map<Bits, int, BitsHash> seen;
  std::vector<Ultrafilter> out;
  std::queue<Ultrafilter> q;
  seen.emplace(seed.neg, 0);
  out.push_back(seed);
  q.push(seed);
  while (!q.empty()) {
    Ultrafilter u = q.front();
    q.pop();
    for (Element a : min_elements(p, u)) {
      Ultrafilter v = u;
      v.neg.flip(wall_of(a));
      if (seen.emplace(v.neg, int(out.size())).second) {
        out.push_back(v);
        q.push(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Ultrafilter> enumerate_ultrafilters(const PocSet& p, EnumMode mode, int max_walls) {
  if (mode == EnumMode::exhaustive) return enumerate_exhaustive(p, max_walls);
  return enumerate_bfs(p);
}

std::vector<CubeFace> cubes_at_vertex(const PocSet& p, const Ultrafilter& u, int max_dim) {
  std::vector<Element> mins = min_elements(p, u);
  std::vector<CubeFace> out;
  std::vector<Element> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    CubeFace f;
    f.base = u;
    for (Element e : cur) f.spanned_walls.push_back(wall_of(e));
    out.push_back(std::move(f));
    if (int(cur.size()) >= max_dim) return;
    for (std::size_t i = start; i < mins.size(); ++i) {
      bool ok = true;
      for (Element e : cur)
        if (!p.transverse(e, mins[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(mins[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Ultrafilter> cube_corners(const PocSet& p, const CubeFace& face) {
  const int k = int(face.spanned_walls.size());
  std::vector<Ultrafilter> out;
  for (std::uint32_t m = 0; m < (1u << k); ++m) {
    Ultrafilter v = face.base;
    for (int i = 0; i < k; ++i)
      if ((m >> i) & 1) v.neg.flip(face.spanned_walls[i]);
    if (!is_coherent(p, v))
      throw Error("cube corner is incoherent; face is not a cube");
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CubingGraph::CubingGraph(PocSet p, std::vector<Ultrafilter> vertices)
    : p_(std::move(p)), verts_(std::move(vertices)) {
  std::sort(verts_.begin(), verts_.end());
  for (int i = 0; i < int(verts_.size()); ++i) index_.emplace(verts_[i].neg, i);
  adj_.resize(verts_.size());
  for (int i = 0; i < int(verts_.size()); ++i) {
    for (Element a : min_elements(p_, verts_[i])) {
      Ultrafilter v = verts_[i];
      v.neg.flip(wall_of(a));
      auto it = index_.find(v.neg);
      if (it == index_.end())
        throw Error("vertex set is not closed under flips");
      adj_[i].push_back(it->second);
      if (i < it->second) edges_.push_back({i, it->second, wall_of(a)});
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
}

int CubingGraph::index_of(const Ultrafilter& u) const {
  auto it = index_.find(u.neg);
  return it == index_.end() ? -1 : it->second;
}

CubingGraph build_cubing(const PocSet& p, int max_walls) {
  (void)max_walls;
  return CubingGraph(p, enumerate_ultrafilters(p, EnumMode::flip_bfs));
}

double Point::at(int wall) const {
  auto it = std::lower_bound(coords.begin(), coords.end(), wall,
                             [](const auto& c, int w) { return c.first < w; });
  return (it != coords.end() && it->first == wall) ? it->second : 0.0;
}

Point coordinates(const PocSet& p, const Ultrafilter& basepoint, const Ultrafilter& u) {
  Point x;
  x.base = basepoint;
  for (int w = 0; w < p.walls(); ++w)
    if (basepoint.neg.test(w) != u.neg.test(w) && p.weight(w) > 0.0)
      x.coords.emplace_back(w, p.weight(w));
  return x;
}

Point make_point(const PocSet& p, const Ultrafilter& base,
                 std::vector<std::pair<int, double>> coords) {
  std::sort(coords.begin(), coords.end());
  Point x;
  x.base = base;
  std::vector<int> fractional, full;
  for (auto [w, v] : coords) {
    if (w < 0 || w >= p.walls()) throw Error("coordinate names an unknown wall");
    if (v < 0.0 || v > p.weight(w)) throw Error("coordinate out of range on wall " + p.label(w));
    if (v == 0.0) continue;
    x.coords.emplace_back(w, v);
    (v == p.weight(w) ? full : fractional).push_back(w);
  }
  for (std::size_t i = 0; i < fractional.size(); ++i)
    for (std::size_t j = i + 1; j < fractional.size(); ++j)
      if (!p.transverse(base.chosen(fractional[i]), base.chosen(fractional[j])))
        throw Error("fractional walls are not transverse; point lies in no cube");
  Ultrafilter corner = base;
  for (int w : full) corner.neg.flip(w);
  if (!is_coherent(p, corner)) throw Error("point lies in no cube (incoherent corner)");
  for (int w : fractional) corner.neg.flip(w);
  if (!is_coherent(p, corner)) throw Error("point lies in no cube (incoherent corner)");
  return x;
}

}  // namespace medianite
