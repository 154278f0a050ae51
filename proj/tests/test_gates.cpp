#include "doctest.h"
#include "fixtures.hpp"
#include "mwt/gates.hpp"

using namespace mwt;

namespace {
const ThetaCut& find(const std::vector<ThetaCut>& cs, int v, CutKind k) {
  for (const auto& c : cs) {
    if (c.vertex_index == v && c.kind == k) return c;
  }
  FAIL("cut not found");
  return cs.front();
}
}  // namespace

TEST_CASE("dominance on DOUBLE at 0 degrees") {
  const Polygon d = fx::dbl();
  const auto cs = compute_cuts(d, Angle(0));
  const ThetaCut& bf = find(cs, 7, CutKind::Forward);
  const ThetaCut& bb = find(cs, 7, CutKind::Backward);
  const ThetaCut& rf = find(cs, 2, CutKind::Forward);
  const ThetaCut& rb = find(cs, 2, CutKind::Backward);
  CHECK(dominates(d, rb, bf));
  CHECK(dominates(d, bb, rf));
  CHECK_FALSE(dominates(d, bb, bf));  // L(bb) also holds the sliver left of the top notch
  CHECK_FALSE(dominates(d, rb, bb));
  CHECK_FALSE(dominates(d, bb, rb));
  for (const auto& c : cs) CHECK_FALSE(dominates(d, c, c));
  const auto other = compute_cuts(d, Angle(1));
  CHECK_THROWS_AS(dominates(d, bb, other.front()), GeometryError);
}

TEST_CASE("gates") {
  SUBCASE("DOUBLE") {
    const auto g = compute_gates(fx::dbl(), compute_cuts(fx::dbl(), Angle(0)));
    REQUIRE(g.size() == 2);
    for (const Gate& x : g) CHECK(x.cut.kind == CutKind::Backward);
    const Gate& blue = g[0].cut.color == CutColor::Blue ? g[0] : g[1];
    const Gate& red = g[0].cut.color == CutColor::Blue ? g[1] : g[0];
    CHECK(blue.gate_vertex == Point{2, 2});
    CHECK(blue.far_point().x == doctest::Approx(5.5));
    CHECK(blue.gate_edge == 1);
    CHECK(red.gate_vertex == Point{6, 4});
    CHECK(red.far_point().x == doctest::Approx(2.5));
    CHECK(red.gate_edge == 6);
  }
  SUBCASE("UNOTCH") {
    const auto g = compute_gates(fx::unotch(), compute_cuts(fx::unotch(), Angle(0)));
    REQUIRE(g.size() == 2);
    CHECK(g[0].gate_vertex == Point{4, 2});
    CHECK(g[1].gate_vertex == Point{4, 2});
  }
  SUBCASE("SQUARE") { CHECK(compute_gates(fx::square(), compute_cuts(fx::square(), Angle(12))).empty()); }
}

TEST_CASE("reduced polygon") {
  SUBCASE("DOUBLE is the quad between the gate chords") {
    const Polygon d = fx::dbl();
    const ReducedPolygon rp = reduce_polygon(d, compute_gates(d, compute_cuts(d, Angle(0))));
    CHECK(rp.polygon.size() == 4);
    CHECK(rp.polygon.area() == doctest::Approx(7.0));  // shapely area of (2,2),(5.5,2),(6,4),(2.5,4)
    REQUIRE(rp.essential.size() == 2);
    for (int e : rp.essential) {
      const Segment s = rp.polygon.edge(e);
      CHECK(s.a.y == doctest::Approx(s.b.y));
    }
  }
  SUBCASE("no gates is the identity") {
    const ReducedPolygon rp = reduce_polygon(fx::square(), {});
    CHECK(rp.polygon.size() == 4);
    CHECK(rp.essential.empty());
  }
  SUBCASE("UNOTCH left regions cover the polygon") {
    const Polygon u = fx::unotch();
    CHECK_THROWS_AS(reduce_polygon(u, compute_gates(u, compute_cuts(u, Angle(0)))), GeometryError);
  }
}
