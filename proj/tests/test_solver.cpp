#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "mwt/oracle.hpp"
#include "mwt/solver.hpp"

using namespace mwt;

namespace {
// Closed form for DOUBLE while the tour runs from the far end of the blue
// gate on edge (5,0)-(6,4) straight across to the red gate line through (6,4).
double double_closed_form(double deg) {
  const double t = deg * kPi / 180.0;
  const Point d{std::cos(t), std::sin(t)};
  // (2,2) + u d = (5 + s, 4 s)
  const double det = -4.0 * d.x + d.y;
  const double u = (3.0 * -4.0 - (-1.0) * -2.0) / det;
  const Point p{2.0 + u * d.x, 2.0 + u * d.y};
  return 2.0 * std::abs(cross(d, p - Point{6, 4}));
}
}  // namespace

TEST_CASE("fixture lengths") {
  const SolveResult r = solve_theta(fx::dbl(), Angle(0));
  CHECK(r.tour.length == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(r.gates.size() == 2);
  CHECK(r.tour.cycle.size() == 2);

  const SolveResult u = solve_theta(fx::unotch(), Angle(0));
  CHECK(u.tour.length == 0.0);
  REQUIRE(u.tour.cycle.size() == 1);
  CHECK(u.tour.cycle[0] == Point{4, 2});
  CHECK(u.tour.tags[0].kind == TagKind::Stable);

  const SolveResult s = solve_theta(fx::square(), Angle(37));
  CHECK(s.tour.length == 0.0);
  CHECK(s.tour.tags[0].kind == TagKind::Anchor);
}

TEST_CASE("DOUBLE against the closed form for small angles") {
  for (double deg : {0.5, 5.0, 10.0, 20.0, 26.0}) {
    CAPTURE(deg);
    CHECK(solve_theta(fx::dbl(), Angle(deg)).tour.length == doctest::Approx(double_closed_form(deg)).epsilon(1e-10));
  }
  // Frozen values of the closed form.
  CHECK(double_closed_form(10.0) == doctest::Approx(2.550045590713).epsilon(1e-12));
  CHECK(double_closed_form(20.0) == doctest::Approx(1.022609336538).epsilon(1e-12));
}

TEST_CASE("DOUBLE has zero tours past the jumping angle") {
  CHECK(solve_theta(fx::dbl(), Angle(27)).tour.length == 0.0);
  CHECK(solve_theta(fx::dbl(), Angle(90)).tour.length == 0.0);
}

TEST_CASE("candidate set for one red and one blue gate") {
  const SolveResult r = solve_theta(fx::dbl(), Angle(0));
  REQUIRE(r.reduced);
  const auto c = candidate_vertices(*r.reduced, triangulate(*r.reduced));
  std::vector<Point> pts;
  for (int v : c) pts.push_back(r.reduced->polygon.vertex(v));
  for (Point q : {Point{2, 2}, Point{5.5, 2}, Point{2.5, 4}, Point{6, 4}}) {
    CHECK(std::find(pts.begin(), pts.end(), q) != pts.end());
  }
  CHECK(c.size() <= 8);
}

TEST_CASE("candidate set for two gates of one color has two vertices") {
  int seen = 0;
  for (const Polygon& p : random_corpus(5, 120)) {
    for (double deg = 1.0; deg < 180.0; deg += 7.3) {
      SolveResult r;
      try {
        r = solve_theta(p, Angle(deg));
      } catch (const EventAngleError&) {
        continue;
      }
      if (!r.reduced || r.reduced->essential.size() != 2) continue;
      const auto& g = r.reduced->gates;
      if (g[0].cut.color != g[1].cut.color) continue;
      const auto c = candidate_vertices(*r.reduced, triangulate(*r.reduced));
      CHECK(c.size() == 2);
      ++seen;
    }
  }
  CHECK(seen > 10);
}

TEST_CASE("candidate rule matches exhaustive start vertices") {
  const auto corpus = random_corpus(5, 60);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> th(0, 180);
  for (const Polygon& p : corpus) {
    for (int j = 0; j < 4; ++j) {
      SolveResult r;
      try {
        r = solve_theta(p, Angle(th(rng)));
      } catch (const EventAngleError&) {
        continue;
      }
      if (!r.reduced) continue;
      const Triangulation t = triangulate(*r.reduced);
      double best = 1e300;
      for (int v = 0; v < r.reduced->polygon.size(); ++v) best = std::min(best, tour_through(*r.reduced, t, v).length);
      CHECK(r.tour.length <= best + 1e-9);
    }
  }
}

TEST_CASE("subpath decomposition") {
  SUBCASE("DOUBLE doubled segment is one cyclic subpath") {
    const auto sp = decompose_subpaths(solve_theta(fx::dbl(), Angle(0)).tour);
    REQUIRE(sp.size() == 1);
    CHECK(sp[0].cyclic);
    REQUIRE(sp[0].moving.size() == 2);
    CHECK(sp[0].colors[0] != sp[0].colors[1]);
  }
  SUBCASE("single point") { CHECK(decompose_subpaths(solve_theta(fx::square(), Angle(0)).tour).empty()); }
  SUBCASE("stable, moving, stable") {
    Tour t;
    t.cycle = {{0, 0}, {1, 1}, {2, 0}};
    t.tags.resize(3);
    t.tags[1].kind = TagKind::Moving;
    t.tags[1].gate = 0;
    t.tags[1].color = CutColor::Blue;
    const auto sp = decompose_subpaths(t);
    REQUIRE(sp.size() == 1);
    CHECK(sp[0].start_stable == Point{0, 0});
    CHECK(sp[0].end_stable == Point{2, 0});
    CHECK(sp[0].moving.size() == 1);
  }
}

TEST_CASE("event angles are refused") {
  CHECK_THROWS_AS(solve_theta(fx::dbl(), Angle(fx::kValidityDeg)), EventAngleError);
  CHECK_NOTHROW(solve_theta(fx::dbl(), Angle(fx::kValidityDeg + 1e-3)));
}

TEST_CASE("structure is unchanged by a tiny rotation away from events") {
  const TourStructure a = structure_of(solve_theta(fx::dbl(), Angle(5.0)));
  const TourStructure b = structure_of(solve_theta(fx::dbl(), Angle(5.001)));
  CHECK(a == b);
  const TourStructure c = structure_of(solve_theta(fx::dbl(), Angle(90.0)));
  CHECK_FALSE(a == c);
}
