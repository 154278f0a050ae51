#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "mwt/geom.hpp"

using namespace mwt;

TEST_CASE("orient signs") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient({0, 0}, {1, 0}, {2, 0}) == 0);
  CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
  CHECK(orient({0, 0}, {1, 0}, {2, 1e-12}) == 0);
}

TEST_CASE("reflect_point") {
  const Point a = reflect_point({1, 1}, {{0, 0}, {2, 0}});
  CHECK(a.x == doctest::Approx(1));
  CHECK(a.y == doctest::Approx(-1));
  const Point b = reflect_point({0.5, 0}, {{0, 0}, {2, 0}});
  CHECK(b.x == doctest::Approx(0.5));
  CHECK(b.y == doctest::Approx(0));
  const Point c = reflect_point({0, 2}, {{0, 0}, {1, 1}});
  CHECK(c.x == doctest::Approx(2));
  CHECK(c.y == doctest::Approx(0));
  CHECK_THROWS_AS(reflect_point({1, 1}, {{3, 3}, {3, 3}}), GeometryError);
}

TEST_CASE("Angle normalizes into [0, 180)") {
  CHECK(Angle(180).degrees() == doctest::Approx(0));
  CHECK(Angle(-30).degrees() == doctest::Approx(150));
  CHECK(Angle(540.5).degrees() == doctest::Approx(0.5));
  const Point d = Angle(90).direction();
  CHECK(d.x == doctest::Approx(0).epsilon(1e-12));
  CHECK(d.y == doctest::Approx(1));
}

TEST_CASE("polygon validation") {
  SUBCASE("clockwise input is reversed") {
    PolygonDiagnostics diag;
    const Polygon p = Polygon::from_points({{0, 0}, {0, 4}, {4, 4}, {4, 0}}, &diag);
    CHECK(diag.reversed);
    CHECK(p.area() == doctest::Approx(16));
  }
  SUBCASE("collinear vertices merged") {
    PolygonDiagnostics diag;
    const Polygon p = Polygon::from_points({{0, 0}, {2, 0}, {4, 0}, {4, 4}, {0, 4}}, &diag);
    CHECK(p.size() == 4);
    CHECK(diag.merged_collinear.size() == 1);
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(Polygon::from_points({{0, 0}, {1, 0}}), GeometryError);
    CHECK_THROWS_AS(Polygon::from_points({{0, 0}, {4, 0}, {4, 0}, {0, 4}}), GeometryError);
    CHECK_THROWS_AS(Polygon::from_points({{0, 0}, {4, 4}, {4, 0}, {0, 4}}), GeometryError);
    CHECK_THROWS_AS(Polygon::from_points({{0, 0}, {NAN, 0}, {0, 4}}), GeometryError);
    CHECK_THROWS_AS(Polygon::from_points({{0, 0}, {1, 1}, {2, 2}}), GeometryError);
  }
}

TEST_CASE("reflex vertices of the fixtures") {
  CHECK(fx::square().reflex_vertices().empty());
  CHECK(fx::unotch().reflex_vertices() == std::vector<int>{4});
  CHECK(fx::dbl().reflex_vertices() == std::vector<int>{2, 7});
  CHECK(fx::dbl().area() == doctest::Approx(40.0));  // shapely
}

TEST_CASE("segment_inside") {
  const Polygon d = fx::dbl();
  CHECK(segment_inside(d, {2, 2}, {6, 4}));
  CHECK(segment_inside(d, {0, 2}, {5.5, 2}));
  CHECK_FALSE(segment_inside(d, {1, 5}, {3, 5}));   // crosses the top notch
  CHECK_FALSE(segment_inside(d, {5.5, 1}, {6.5, 1}));  // crosses the bottom notch
  CHECK(segment_inside(d, {0, 0}, {5, 0}));           // along an edge
}

TEST_CASE("max_chord_through") {
  SUBCASE("DOUBLE at 0 degrees") {
    const Polygon d = fx::dbl();
    const Chord a = max_chord_through(d, 7, Angle(0));
    CHECK(a.segment.a.x == doctest::Approx(0));
    CHECK(a.segment.b.x == doctest::Approx(5.5));
    CHECK(a.segment.a.y == doctest::Approx(2));
    const Chord b = max_chord_through(d, 2, Angle(0));
    CHECK(b.segment.a.x == doctest::Approx(2.5));
    CHECK(b.segment.b.x == doctest::Approx(8));
    CHECK_FALSE(a.perturbed);
  }
  SUBCASE("UNOTCH at 0 degrees") {
    const Chord c = max_chord_through(fx::unotch(), 4, Angle(0));
    CHECK(c.segment.a.x == doctest::Approx(0));
    CHECK(c.segment.b.x == doctest::Approx(8));
  }
  SUBCASE("vertex whose edges straddle the line") {
    CHECK_THROWS_AS(max_chord_through(fx::dbl(), 7, Angle(90)), GeometryError);
  }
  SUBCASE("ray grazing a vertex is nudged") {
    // Ray from the notch tip at (4,2) along +x passes through (6,2).
    const Polygon p = Polygon::from_points({{0, 0}, {8, 0}, {8, 6}, {6, 2}, {5, 6}, {4, 2}, {3, 6}, {0, 6}});
    const Chord c = max_chord_through(p, 5, Angle(0));
    CHECK(c.perturbed);
  }
}
