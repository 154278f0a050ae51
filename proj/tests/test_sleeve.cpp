#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "mwt/sleeve.hpp"

using namespace mwt;

namespace {
ReducedPolygon reduced_double() {
  const Polygon d = fx::dbl();
  return reduce_polygon(d, compute_gates(d, compute_cuts(d, Angle(0))));
}
int index_of(const Polygon& p, Point q) {
  const int i = p.find_vertex(q);
  REQUIRE(i >= 0);
  return i;
}
}  // namespace

TEST_CASE("triangulation counts") {
  CHECK(triangulate(fx::square()).triangles.size() == 2);
  const Polygon pent = Polygon::from_points({{0, 0}, {2, 0}, {3, 1.5}, {1, 3}, {-1, 1.5}});
  CHECK(triangulate(pent).triangles.size() == 3);
  CHECK(triangulate(fx::dbl()).triangles.size() == 8);
  CHECK(triangulate(reduced_double()).triangles.size() == 2);
}

TEST_CASE("triangulation covers the polygon area") {
  const Polygon d = fx::dbl();
  const Triangulation t = triangulate(d);
  double area = 0.0;
  for (const auto& tr : t.triangles) {
    const std::vector<Point> ring{d.vertex(tr[0]), d.vertex(tr[1]), d.vertex(tr[2])};
    CHECK(signed_area(ring) > 0.0);
    area += signed_area(ring);
  }
  CHECK(area == doctest::Approx(d.area()));
}

TEST_CASE("Rigid composition and inverse") {
  const Rigid r = Rigid::reflection({{0, 0}, {1, 1}});
  const Rigid s = Rigid::reflection({{0, 2}, {1, 2}});
  const Point p{0.3, -1.7};
  const Point q = r.then(s).apply(p);
  const Point expect = reflect_point(reflect_point(p, {{0, 0}, {1, 1}}), {{0, 2}, {1, 2}});
  CHECK(q.x == doctest::Approx(expect.x));
  CHECK(q.y == doctest::Approx(expect.y));
  const Point back = r.then(s).inverse().apply(q);
  CHECK(back.x == doctest::Approx(p.x));
  CHECK(back.y == doctest::Approx(p.y));
}

TEST_CASE("sleeve of DOUBLE from (2,2)") {
  const ReducedPolygon rp = reduced_double();
  const Triangulation t = triangulate(rp);
  const Sleeve s = unroll(rp, t, index_of(rp.polygon, {2, 2}));
  CHECK(s.mirrors.size() == 2);
  // Explicit double reflection: (2,2) across y = 2, then across the image of
  // the y = 4 chord under that first reflection (y = 0).
  const Segment low{{0, 2}, {1, 2}};
  const Segment high_image{reflect_point({0, 4}, low), reflect_point({1, 4}, low)};
  const Point img = reflect_point(reflect_point({2, 2}, low), high_image);
  CHECK(img == Point{2, -2});
  CHECK(s.image.x == doctest::Approx(img.x));
  CHECK(s.image.y == doctest::Approx(img.y));
  CHECK(distance(s.source, s.image) == doctest::Approx(4.0));
  CHECK(s.panels.size() <= 6 * t.triangles.size());

  // The top notch tip (2.5,4) blocks the straight segment: the path bends there.
  const SleevePath p = shortest_path(s);
  CHECK(p.length == doctest::Approx(2.0 * std::sqrt(4.25)));
  const Tour tour = fold_back(rp, s, p);
  CHECK(tour.length == doctest::Approx(p.length).epsilon(1e-12));
}

TEST_CASE("sleeve of DOUBLE from a far endpoint is straight") {
  const ReducedPolygon rp = reduced_double();
  const Triangulation t = triangulate(rp);
  const Sleeve s = unroll(rp, t, index_of(rp.polygon, {5.5, 2}));
  const SleevePath p = shortest_path(s);
  CHECK(p.length == doctest::Approx(4.0));
  CHECK(p.vertices.size() == 2);
  const Tour tour = fold_back(rp, s, p);
  REQUIRE(tour.cycle.size() == 2);
  CHECK(tour.cycle[0].x == doctest::Approx(5.5));
  CHECK(tour.cycle[1].x == doctest::Approx(5.5));
  CHECK(tour.cycle[1].y == doctest::Approx(4.0));
  CHECK(tour.tags[0].kind == TagKind::Moving);
  CHECK(tour.tags[0].at_far_end);
  CHECK(tour.tags[1].kind == TagKind::Moving);
  CHECK_FALSE(tour.tags[1].at_far_end);
}

TEST_CASE("no essential edges gives a degenerate sleeve") {
  const ReducedPolygon rp = reduce_polygon(fx::square(), {});
  const Sleeve s = unroll(rp, triangulate(rp), 1);
  CHECK(s.degenerate());
  const SleevePath p = shortest_path(s);
  CHECK(p.length == 0.0);
  const Tour tour = fold_back(rp, s, p);
  CHECK(tour.cycle.size() == 1);
  CHECK(tour.length == 0.0);
  CHECK_THROWS_AS(unroll(rp, triangulate(rp), 9), GeometryError);
}
