#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "medianite/dual.hpp"
#include "medianite/metrics.hpp"
#include "support/catalog.hpp"

using namespace medianite;
namespace ts = medianite::testsupport;

namespace {

PocSet chain2() {
  std::vector<std::pair<Element, Element>> rels{{pos_element(0), pos_element(1)}};
  return PocSet::from_generators(2, rels);
}

Ultrafilter make_uf(int n, std::initializer_list<int> neg_walls) {
  Ultrafilter u(n);
  for (int w : neg_walls) u.neg.set(w);
  return u;
}

/// The unique ultrafilter containing every element of `forced`.
Ultrafilter the_vertex_with(const PocSet& p, std::initializer_list<Element> forced) {
  auto all = enumerate_ultrafilters(p, EnumMode::exhaustive);
  const Ultrafilter* found = nullptr;
  for (const auto& u : all) {
    bool ok = true;
    for (Element e : forced)
      if (!u.has(e)) ok = false;
    if (ok) {
      REQUIRE(found == nullptr);
      found = &u;
    }
  }
  REQUIRE(found != nullptr);
  return *found;
}

}  // namespace

TEST_CASE("coherence on chains and transverse sets") {
  PocSet c = chain2();
  CHECK(is_coherent(c, make_uf(2, {})));        // {a, b}
  CHECK_FALSE(is_coherent(c, make_uf(2, {1}))); // {a, b*}: a <= b forbidden
  CHECK(is_coherent(c, make_uf(2, {0})));       // {a*, b}
  CHECK(is_coherent(c, make_uf(2, {0, 1})));    // {a*, b*}
  PocSet t = PocSet::from_generators(2, {});
  for (int m = 0; m < 4; ++m)
    CHECK(is_coherent(t, make_uf(2, {m & 1 ? 0 : 1, m & 2 ? 1 : 0})));
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_ultrafilters(PocSet::linear(2), EnumMode::exhaustive).size() == 3);
  CHECK(enumerate_ultrafilters(PocSet::from_generators(3, {}), EnumMode::exhaustive).size() == 8);
  // the seven-wall family: 8 cube corners plus 4 pendant leaves
  CHECK(enumerate_ultrafilters(PocSet::xt(0.5), EnumMode::exhaustive).size() == 12);
}

TEST_CASE("exhaustive enumeration refuses too many walls") {
  PocSet p = PocSet::from_generators(6, {});
  CHECK_THROWS_AS((void)enumerate_ultrafilters(p, EnumMode::exhaustive, 5), TooManyWalls);
}

TEST_CASE("flip-BFS agrees with the exhaustive oracle on the catalog") {
  for (const auto& e : ts::full_catalog()) {
    CAPTURE(e.name);
    auto a = enumerate_ultrafilters(e.p, EnumMode::exhaustive);
    auto b = enumerate_ultrafilters(e.p, EnumMode::flip_bfs);
    CHECK(a == b);
  }
}

TEST_CASE("greedy seed is coherent on the catalog") {
  for (const auto& e : ts::full_catalog()) {
    CAPTURE(e.name);
    CHECK(is_coherent(e.p, greedy_seed(e.p)));
  }
}

TEST_CASE("min elements") {
  PocSet c = chain2();
  auto mins = min_elements(c, make_uf(2, {}));
  CHECK(mins == std::vector<Element>{pos_element(0)});
  PocSet t = PocSet::from_generators(3, {});
  CHECK(min_elements(t, make_uf(3, {})).size() == 3);
  // leaf vertex of the seven-wall family: min is the singleton {A}
  PocSet x = PocSet::xt(0.5);
  Ultrafilter ua = the_vertex_with(x, {pos_element(0)});
  auto m = min_elements(x, ua);
  CHECK(m == std::vector<Element>{pos_element(0)});
}

TEST_CASE("flips") {
  PocSet c = chain2();
  Ultrafilter u = make_uf(2, {});
  SUBCASE("flip then flip back is the identity") {
    Ultrafilter v = flip(c, u, pos_element(0));
    CHECK(v == make_uf(2, {0}));
    CHECK(flip(c, v, neg_element(0)) == u);
  }
  SUBCASE("flipping a non-minimal element throws") {
    CHECK_THROWS_AS((void)flip(c, u, pos_element(1)), NotMinimal);
    CHECK_THROWS_AS((void)flip(c, u, neg_element(0)), NotMinimal);  // not chosen
  }
}

TEST_CASE("cubes at a vertex") {
  SUBCASE("transverse 3-wall set has all 8 faces at any vertex") {
    PocSet t = PocSet::from_generators(3, {});
    auto faces = cubes_at_vertex(t, make_uf(3, {}), 3);
    CHECK(faces.size() == 8);
  }
  SUBCASE("middle vertex of linear(2) has no 2-face") {
    PocSet l = PocSet::linear(2);
    Ultrafilter mid = make_uf(2, {0});  // {a1*, a2}
    auto faces = cubes_at_vertex(l, mid, 2);
    for (const auto& f : faces) CHECK(f.spanned_walls.size() <= 1);
    CHECK(faces.size() == 3);  // empty + two edges
  }
  SUBCASE("cube corner of the seven-wall family carries one 3-face") {
    PocSet x = PocSet::xt(0.5);
    // corner nearest leaf A: pairs positive, singletons negative
    Ultrafilter corner = the_vertex_with(
        x, {neg_element(0), pos_element(4), pos_element(5), pos_element(6)});
    auto faces = cubes_at_vertex(x, corner, 3);
    int three = 0;
    for (const auto& f : faces)
      if (f.spanned_walls.size() == 3) {
        ++three;
        CHECK(f.spanned_walls == std::vector<int>{4, 5, 6});
      }
    CHECK(three == 1);
  }
}

TEST_CASE("cube corners are coherent and flip-order independent") {
  for (const auto& e : ts::full_catalog()) {
    CAPTURE(e.name);
    auto verts = enumerate_ultrafilters(e.p, EnumMode::flip_bfs);
    for (const auto& u : verts) {
      for (const auto& f : cubes_at_vertex(e.p, u, 3)) {
        auto corners = cube_corners(e.p, f);  // throws if any corner incoherent
        CHECK(corners.size() == (std::size_t(1) << f.spanned_walls.size()));
        if (f.spanned_walls.size() == 2) {
          // two flip orders reach the same opposite corner
          Element a = u.chosen(f.spanned_walls[0]);
          Element b = u.chosen(f.spanned_walls[1]);
          Ultrafilter p1 = flip(e.p, flip(e.p, u, a), b);
          Ultrafilter p2 = flip(e.p, flip(e.p, u, b), a);
          CHECK(p1 == p2);
        }
      }
    }
  }
}

TEST_CASE("cubing graphs of the basic families") {
  SUBCASE("linear(k) gives a path with k+1 vertices") {
    for (int k = 1; k <= 5; ++k) {
      auto g = build_cubing(PocSet::linear(k));
      CHECK(g.size() == k + 1);
      CHECK(int(g.edges().size()) == k);
    }
  }
  SUBCASE("transverse n walls give the n-cube 1-skeleton") {
    auto g = build_cubing(PocSet::from_generators(3, {}));
    CHECK(g.size() == 8);
    CHECK(g.edges().size() == 12);
    for (int i = 0; i < g.size(); ++i) CHECK(g.adjacency()[i].size() == 3);
  }
  SUBCASE("tree duals are the trees themselves") {
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {1, 3}, {3, 4}};
    auto g = build_cubing(PocSet::from_tree(edges));
    CHECK(g.size() == 5);
    CHECK(g.edges().size() == 4);
    std::multiset<std::size_t> degrees;
    for (int i = 0; i < g.size(); ++i) degrees.insert(g.adjacency()[i].size());
    CHECK(degrees == std::multiset<std::size_t>{1, 1, 1, 2, 3});
  }
}

TEST_CASE("vertex degree equals the number of minimal elements") {
  for (const auto& e : ts::full_catalog()) {
    CAPTURE(e.name);
    auto g = build_cubing(e.p);
    for (int i = 0; i < g.size(); ++i)
      CHECK(g.adjacency()[i].size() == min_elements(e.p, g.vertex(i)).size());
    for (const auto& ed : g.edges()) {
      int diff = 0;
      for (int w = 0; w < e.p.walls(); ++w)
        if (g.vertex(ed.u).neg.test(w) != g.vertex(ed.v).neg.test(w)) ++diff;
      CHECK(diff == 1);
    }
  }
}

TEST_CASE("the wedge dual is the box product of the duals") {
  PocSet p = PocSet::linear(2);
  PocSet q = PocSet::from_generators(2, {});
  PocSet w = wedge_sum(p, q);
  auto gp = build_cubing(p);
  auto gq = build_cubing(q);
  auto gw = build_cubing(w);
  REQUIRE(gw.size() == gp.size() * gq.size());

  // vertex of the wedge <-> (restriction to p walls, restriction to q walls)
  auto split = [&](const Ultrafilter& u) {
    Ultrafilter a(p.walls()), b(q.walls());
    for (int i = 0; i < p.walls(); ++i) a.neg.set(i, u.neg.test(i));
    for (int i = 0; i < q.walls(); ++i) b.neg.set(i, u.neg.test(p.walls() + i));
    return std::pair{gp.index_of(a), gq.index_of(b)};
  };
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < gw.size(); ++i) {
    auto [a, b] = split(gw.vertex(i));
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    seen.insert({a, b});
  }
  CHECK(int(seen.size()) == gw.size());
  // edges match: exactly one factor moves along each edge
  std::size_t expected = gp.edges().size() * gq.size() + gq.edges().size() * gp.size();
  CHECK(gw.edges().size() == expected);
}

TEST_CASE("coordinates relative to a basepoint") {
  SUBCASE("the basepoint maps to the origin") {
    PocSet t = PocSet::from_generators(3, {});
    Ultrafilter b = make_uf(3, {});
    Point x = coordinates(t, b, b);
    CHECK(x.coords.empty());
  }
  SUBCASE("unit weights: d nonzero coordinates at l1 distance d") {
    PocSet t = PocSet::from_generators(3, {});
    Ultrafilter b = make_uf(3, {});
    Ultrafilter u = make_uf(3, {0, 2});
    Point x = coordinates(t, b, u);
    CHECK(x.coords.size() == 2);
    CHECK(x.at(0) == 1.0);
    CHECK(x.at(2) == 1.0);
    CHECK(x.at(1) == 0.0);
  }
  SUBCASE("leaf against its nearest cube corner: one coordinate of 1-t") {
    PocSet x = PocSet::xt(0.25);
    Ultrafilter ua = the_vertex_with(x, {pos_element(0)});
    Ultrafilter corner = flip(x, ua, pos_element(0));
    Point pt = coordinates(x, corner, ua);
    REQUIRE(pt.coords.size() == 1);
    CHECK(pt.coords[0].first == 0);
    CHECK(pt.coords[0].second == doctest::Approx(0.75));
  }
}

TEST_CASE("points validate their cube") {
  PocSet t = PocSet::from_generators(2, {});
  Ultrafilter b = make_uf(2, {});
  CHECK_NOTHROW((void)make_point(t, b, {{0, 0.5}, {1, 0.25}}));
  CHECK_THROWS((void)make_point(t, b, {{0, 1.5}}));
  PocSet c = chain2();
  Ultrafilter cb = make_uf(2, {});
  // fractional coordinates on a nested pair of walls lie in no cube
  CHECK_THROWS((void)make_point(c, cb, {{0, 0.5}, {1, 0.5}}));
}
