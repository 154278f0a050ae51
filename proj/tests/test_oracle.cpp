#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "mwt/oracle.hpp"
#include "mwt/solver.hpp"

using namespace mwt;

namespace {
Tour tour_of(std::vector<Point> pts) {
  Tour t;
  t.cycle = std::move(pts);
  t.tags.resize(t.cycle.size());
  t.length = Tour::cycle_length(t.cycle);
  return t;
}
}  // namespace

TEST_CASE("validate_tour") {
  CHECK(validate_tour(fx::square(), Angle(0), tour_of({{1, 1}})).valid);
  CHECK(validate_tour(fx::dbl(), Angle(0), tour_of({{3, 2}, {3, 4}})).valid);

  const ValidationReport bad = validate_tour(fx::dbl(), Angle(0), tour_of({{7, 1}}));
  CHECK_FALSE(bad.valid);
  bool blue_backward = false;
  for (const ThetaCut& c : bad.violated_cuts) {
    blue_backward |= c.color == CutColor::Blue && c.kind == CutKind::Backward;
  }
  CHECK(blue_backward);
  CHECK(bad.max_violation > 0.0);

  CHECK_THROWS_AS(validate_tour(fx::dbl(), Angle(0), tour_of({{20, 20}})), GeometryError);
}

TEST_CASE("geodesic distance") {
  const Polygon d = fx::dbl();
  const Geodesic g(d);
  CHECK(g({1, 1}, {4, 1}) == doctest::Approx(3.0));
  // Around the top notch tip (2,2).
  const double around = distance({1, 5}, {2, 2}) + distance({2, 2}, {3, 5});
  CHECK(g({1, 5}, {3, 5}) == doctest::Approx(around));
}

TEST_CASE("reference_min_tour") {
  CHECK(reference_min_tour(fx::square(), Angle(20), 200) == 0.0);
  CHECK(reference_min_tour(fx::dbl(), Angle(0), 200) == doctest::Approx(4.0).epsilon(0.05 / 4.0));
  CHECK(reference_min_tour(fx::unotch(), Angle(0), 200) == doctest::Approx(0.0).epsilon(0.05));
  CHECK_THROWS_AS(reference_min_tour(fx::dbl(), Angle(0), 1), std::invalid_argument);
}

TEST_CASE("dense_sweep") {
  const auto sq = dense_sweep(fx::square(), 1.0);
  CHECK(sq.size() == 180);
  for (const auto& s : sq) CHECK(s.second == 0.0);

  const auto d = dense_sweep(fx::dbl(), 0.05);
  CHECK(d.size() == 3600);
  CHECK(d.front().second == doctest::Approx(4.0));
  double m = 1e300;
  for (const auto& s : d) m = std::min(m, s.second);
  CHECK(m == 0.0);

  for (const auto& s : dense_sweep(fx::unotch(), 0.05)) CHECK(s.second == 0.0);
  CHECK_THROWS_AS(dense_sweep(fx::dbl(), 0.0), std::invalid_argument);
}

TEST_CASE("random polygons") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Polygon p = random_polygon(rng);
    CHECK(p.size() >= 5);
    CHECK(p.size() <= 14);
    CHECK(p.area() > 0.0);
    // Star-shaped: every tour is a single point.
    CHECK(solve_theta(p, Angle(33.3)).tour.length == 0.0);
  }
  const auto corpus = random_corpus(1, 20);
  CHECK(corpus.size() == 20);
  for (const Polygon& p : corpus) CHECK(p.size() <= 14);
  const auto again = random_corpus(1, 20);
  for (size_t i = 0; i < corpus.size(); ++i) CHECK(corpus[i].vertices() == again[i].vertices());
}
