#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "medianite/metrics.hpp"
#include "medianite/refine.hpp"
#include "medianite/verify.hpp"
#include "support/catalog.hpp"

using namespace medianite;
namespace ts = medianite::testsupport;

namespace {

Ultrafilter make_uf(int n, std::initializer_list<int> neg_walls) {
  Ultrafilter u(n);
  for (int w : neg_walls) u.neg.set(w);
  return u;
}

std::vector<std::vector<double>> uniform_splits(const PocSet& p, int n) {
  std::vector<std::vector<double>> s(p.walls());
  for (int w = 0; w < p.walls(); ++w) s[w].assign(n, p.weight(w) / n);
  return s;
}

}  // namespace

TEST_CASE("singleton splits give the identity refinement") {
  PocSet p = ts::grid2x1();
  RefinementMap r = refine(p, uniform_splits(p, 1));
  CHECK(r.source == p);
  for (int w = 0; w < p.walls(); ++w) CHECK(r.fiber[w] == std::vector<int>{w});
}

TEST_CASE("split weights must match") {
  PocSet p = PocSet::linear(1);
  CHECK_THROWS_AS((void)refine(p, {{0.5, 0.6}}), WeightMismatch);
  CHECK_THROWS_AS((void)refine(p, {{1.0, 0.0}}), WeightMismatch);
  CHECK_THROWS_AS((void)refine(p, {{}}), WeightMismatch);
}

TEST_CASE("one wall split in half becomes a two-wall chain") {
  PocSet p = PocSet::linear(1);
  RefinementMap r = refine(p, {{0.5, 0.5}});
  CHECK(r.source.walls() == 2);
  CHECK(r.source.lt(pos_element(0), pos_element(1)));
  CHECK(r.source.weight(0) == 0.5);
  auto g = build_cubing(r.source);
  CHECK(g.size() == 3);
  CHECK(g.edges().size() == 2);
}

TEST_CASE("unit square quartered into a 2x2 grid") {
  PocSet sq = PocSet::from_generators(2, {});
  RefinementMap r = refine(sq, uniform_splits(sq, 2));
  CHECK(r.source.walls() == 4);
  CHECK(enumerate_ultrafilters(r.source, EnumMode::exhaustive).size() == 9);
}

TEST_CASE("pull-backs") {
  SUBCASE("identity refinement pulls back to the identity") {
    PocSet p = ts::grid2x1();
    RefinementMap r = refine(p, uniform_splits(p, 1));
    Ultrafilter u = make_uf(3, {1});
    CHECK(pull_back_vertex(r, u) == u);
  }
  SUBCASE("positive vertex of a split wall takes both sub-walls positive") {
    PocSet p = PocSet::linear(1);
    RefinementMap r = refine(p, {{0.5, 0.5}});
    Ultrafilter u = make_uf(1, {});
    Ultrafilter v = pull_back_vertex(r, u);
    CHECK(v.has(pos_element(0)));
    CHECK(v.has(pos_element(1)));
  }
  SUBCASE("corners map to corners of the refined grid") {
    PocSet sq = PocSet::from_generators(2, {});
    RefinementMap r = refine(sq, uniform_splits(sq, 3));
    for (const auto& u : enumerate_ultrafilters(sq, EnumMode::flip_bfs)) {
      Ultrafilter v = pull_back_vertex(r, u);
      CHECK(is_coherent(r.source, v));
      for (int w = 0; w < sq.walls(); ++w)
        for (int s : r.fiber[w]) CHECK(v.neg.test(s) == u.neg.test(w));
    }
  }
  SUBCASE("pull-back commutes with flipping a fiber in order") {
    PocSet p = PocSet::linear(2);
    RefinementMap r = refine(p, uniform_splits(p, 3));
    Ultrafilter u = make_uf(2, {});       // a1, a2 positive; a1 minimal
    Ultrafilter pu = pull_back_vertex(r, u);
    // flipping the sub-walls of a1 bottom-up is a legal flip sequence
    Ultrafilter cur = pu;
    for (int s : r.fiber[0]) cur = flip(r.source, cur, pos_element(s));
    CHECK(cur == pull_back_vertex(r, flip(p, u, pos_element(0))));
  }
}

TEST_CASE("composition of refinements is a refinement") {
  PocSet p = ts::badpath();
  RefinementMap r1 = refine(p, {{0.5, 0.5}, {1.0}, {1.5, 1.5}});
  std::vector<std::vector<double>> inner(r1.source.walls());
  for (int w = 0; w < r1.source.walls(); ++w)
    inner[w].assign(2, r1.source.weight(w) / 2);
  RefinementMap r2 = refine(r1.source, inner);
  RefinementMap c = compose(r1, r2);  // validates internally
  CHECK(c.source == r2.source);
  CHECK(c.target == p);
  CHECK(c.fiber[0].size() == 4);
  CHECK(c.fiber[1].size() == 2);
  CHECK(c.fiber[2].size() == 4);
  // composite fibers carry the right total weight
  for (int w = 0; w < p.walls(); ++w) {
    double sum = 0.0;
    for (int s : c.fiber[w]) sum += c.source.weight(s);
    CHECK(sum == doctest::Approx(p.weight(w)));
  }
}

TEST_CASE("lower rational approximation") {
  SUBCASE("unit weights: every wall splits into n parts") {
    PocSet p = ts::grid2x1();
    RationalApprox ra = lower_rational_approximation(p, 4);
    CHECK(ra.approx.walls() == 12);
    CHECK(ra.scale == doctest::Approx(0.25));
    CHECK(ra.approx.unit_weights());
  }
  SUBCASE("w = 0.75 at n = 4: exactly three unit sub-walls") {
    PocSet p = PocSet::from_generators(1, {}, {0.75});
    RationalApprox ra = lower_rational_approximation(p, 4);
    CHECK(ra.approx.walls() == 3);
    CHECK(ra.scale * ra.approx.walls() == doctest::Approx(0.75));
  }
  SUBCASE("degenerating walls are an error") {
    PocSet p = PocSet::from_generators(1, {}, {0.3});
    CHECK_THROWS_AS((void)lower_rational_approximation(p, 2), DegenerateWall);
  }
  SUBCASE("xt at t = 0.5, n = 2: one sub-wall per wall, distances within |P|/n") {
    PocSet x = PocSet::xt(0.5);
    RationalApprox ra = lower_rational_approximation(x, 2);
    CHECK(ra.approx.walls() == 7);
    auto verts = enumerate_ultrafilters(x, EnumMode::flip_bfs);
    const double bound = 2.0 * x.walls() / 2.0;  // |P|/n with |P| = 2 * walls
    for (const auto& u : verts)
      for (const auto& v : verts) {
        Ultrafilter pu = pull_back_vertex(ra.map, u);
        Ultrafilter pv = pull_back_vertex(ra.map, v);
        double approx_l1 = ra.scale * l1_distance_vertices(ra.approx, pu, pv);
        double approx_li = ra.scale * linf_weighted_vertices(ra.approx, pu, pv);
        CHECK(std::abs(approx_l1 - l1_distance_vertices(x, u, v)) <= bound);
        CHECK(std::abs(approx_li - linf_weighted_vertices(x, u, v)) <= bound);
      }
  }
}

TEST_CASE("approximation distances converge monotonically") {
  for (const auto& e : {ts::Entry{"badpath", ts::badpath()},
                        ts::Entry{"xt", PocSet::xt(0.3)},
                        ts::Entry{"grid", ts::grid2x1()}}) {
    CAPTURE(e.name);
    auto verts = enumerate_ultrafilters(e.p, EnumMode::flip_bfs);
    for (const auto& u : verts)
      for (const auto& v : verts) {
        double truth = linf_weighted_vertices(e.p, u, v);
        double prev_err = -1.0;
        for (int n : {1, 2, 4, 8, 16}) {
          RationalApprox ra;
          try {
            ra = lower_rational_approximation(e.p, n);
          } catch (const DegenerateWall&) {
            continue;  // too coarse for this weight vector
          }
          double dn = ra.scale * linf_weighted_vertices(ra.approx,
                                                        pull_back_vertex(ra.map, u),
                                                        pull_back_vertex(ra.map, v));
          double err = std::abs(dn - truth);
          CHECK(err <= 2.0 * e.p.walls() / double(n) + 1e-12);
          if (prev_err >= 0.0) CHECK(err <= prev_err + 1e-12);
          prev_err = err;
        }
      }
  }
}

TEST_CASE("point distances agree with the half-subdivision vertex route") {
  // Half-integer points of the original complex are vertices of the halved
  // refinement. The refinement is isometric, so the point-level formulas must
  // reproduce the refined vertex distances exactly.
  for (const auto& e : ts::full_catalog()) {
    CAPTURE(e.name);
    bool degenerate = false;
    for (int w = 0; w < e.p.walls(); ++w)
      if (e.p.weight(w) == 0.0) degenerate = true;
    if (degenerate) continue;
    std::vector<std::vector<double>> halves(e.p.walls());
    for (int w = 0; w < e.p.walls(); ++w) halves[w].assign(2, e.p.weight(w) / 2);
    RefinementMap r = refine(e.p, halves);
    auto fine_verts = enumerate_ultrafilters(r.source, EnumMode::flip_bfs);
    if (fine_verts.size() > 30) continue;

    Ultrafilter base = enumerate_ultrafilters(e.p, EnumMode::flip_bfs).front();
    Ultrafilter fine_base = pull_back_vertex(r, base);
    auto as_point = [&](const Ultrafilter& fine) {
      std::vector<std::pair<int, double>> coords;
      for (int w = 0; w < e.p.walls(); ++w) {
        int crossed = 0;
        for (int sub : r.fiber[w])
          if (fine.neg.test(sub) != fine_base.neg.test(sub)) ++crossed;
        if (crossed > 0) coords.emplace_back(w, crossed * e.p.weight(w) / 2);
      }
      return make_point(e.p, base, std::move(coords));
    };

    for (std::size_t i = 0; i < fine_verts.size(); ++i) {
      Point x = as_point(fine_verts[i]);
      for (std::size_t j = i + 1; j < fine_verts.size(); ++j) {
        Point y = as_point(fine_verts[j]);
        CHECK(l1_distance_points(e.p, x, y) ==
              doctest::Approx(l1_distance_vertices(r.source, fine_verts[i], fine_verts[j]))
                  .epsilon(1e-12));
        CHECK(linf_weighted_distance(e.p, x, y) ==
              doctest::Approx(
                  linf_weighted_vertices(r.source, fine_verts[i], fine_verts[j]))
                  .epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("deformation bound") {
  SUBCASE("identical weights deviate by zero") {
    PocSet p = ts::grid2x1();
    auto rep = deformation_bound_check(p, p.weights(), p.weights());
    CHECK(rep.max_deviation == 0.0);
    CHECK(rep.pass);
  }
  SUBCASE("perturbing one wall of the square by delta") {
    PocSet sq = PocSet::from_generators(2, {});
    auto rep = deformation_bound_check(sq, {1.0, 1.0}, {1.0, 1.25});
    CHECK(rep.bound == doctest::Approx(0.25));
    CHECK(rep.max_deviation <= 0.25 + 1e-12);
    CHECK(rep.max_deviation_linf <= 0.25 + 1e-12);
    CHECK(rep.pass);
  }
  SUBCASE("xt versus xt': deviation at most 7 |t - t'|") {
    PocSet a = PocSet::xt(0.5);
    PocSet b = PocSet::xt(0.3);
    auto rep = deformation_bound_check(a, a.weights(), b.weights());
    CHECK(rep.bound == doctest::Approx(7 * 0.2));
    CHECK(rep.pass);
  }
}

TEST_CASE("subdivision isometry") {
  SUBCASE("identity refinement") {
    PocSet p = ts::grid2x1();
    auto rep = subdivision_isometry_check(refine(p, uniform_splits(p, 1)));
    CHECK(rep.pass);
    CHECK(rep.max_deviation_l1 == 0.0);
  }
  SUBCASE("square quartered each way") {
    PocSet sq = PocSet::from_generators(2, {});
    auto rep = subdivision_isometry_check(refine(sq, uniform_splits(sq, 4)));
    CHECK(rep.pass);
  }
  SUBCASE("bad-path configuration: isometric while the normal path shortens") {
    PocSet b = ts::badpath();
    RefinementMap r = refine(b, {{1.0}, {1.0}, {1.0, 1.0, 1.0}});
    auto rep = subdivision_isometry_check(r);
    CHECK(rep.pass);
    Ultrafilter u = make_uf(3, {}), v = make_uf(3, {0, 1, 2});
    BrokenPath orig = normal_cube_path(b, u, v);
    BrokenPath fine = normal_cube_path(r.source, pull_back_vertex(r, u),
                                       pull_back_vertex(r, v));
    double dist = linf_weighted_vertices(b, u, v);
    CHECK(orig.length_linf > dist);                    // non-geodesic before
    CHECK(fine.length_linf == doctest::Approx(dist));  // geodesic after
  }
  SUBCASE("passes across catalog refinements") {
    for (const auto& e : ts::full_catalog()) {
      CAPTURE(e.name);
      if (build_cubing(e.p).size() > 16) continue;
      bool degenerate = false;
      for (int w = 0; w < e.p.walls(); ++w)
        if (e.p.weight(w) == 0.0) degenerate = true;
      if (degenerate) continue;  // refinements need positive sub-weights
      auto rep = subdivision_isometry_check(refine(e.p, uniform_splits(e.p, 2)));
      CHECK(rep.pass);
    }
  }
}
