#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mwt/cuts.hpp"
#include "mwt/geom.hpp"
#include "mwt/sleeve.hpp"

namespace mwt {

struct ValidationReport {
  bool valid = true;
  std::vector<ThetaCut> violated_cuts;
  double max_violation = 0.0;  // distance from the tour to the farthest missed cut
};

// Checks the tour against every cut, gates or not. Throws GeometryError when
// a tour point lies outside the polygon.
ValidationReport validate_tour(const Polygon& poly, Angle theta, const Tour& tour, double tol = kOnEdgeTol);

// Brute-force shortest tour over m samples per gate chord and all cyclic gate
// orders. Consecutive samples are joined by geodesics inside the polygon.
// Throws std::invalid_argument for more than four gates or m < 2.
double reference_min_tour(const Polygon& poly, Angle theta, int m);

// Shortest path length between two points inside the polygon.
class Geodesic {
 public:
  explicit Geodesic(const Polygon& poly);
  double operator()(Point a, Point b) const;

 private:
  const Polygon* poly_;
  std::vector<int> reflex_;
  std::vector<std::vector<double>> dist_;  // between reflex vertices
};

// solve_theta lengths on a grid of step_deg over [0, 180). Grid points on an
// event angle are nudged by 1e-5 degrees.
std::vector<std::pair<double, double>> dense_sweep(const Polygon& poly, double step_deg);

// Random simple polygon from sorted angles on a circle with radial jitter.
// With twist = 0 the result is star-shaped. A positive twist rotates each
// vertex by twist * (radius / 10) radians, which breaks star-shapedness;
// non-simple results are redrawn.
Polygon random_polygon(std::mt19937_64& rng, int n_min = 5, int n_max = 14, double twist = 0.0);

// Twisted polygon with a twist drawn from [1.5, 3.5].
Polygon random_twisted_polygon(std::mt19937_64& rng, int n_min = 5, int n_max = 14);

// 10 x 6 rectangle with triangular notches cut from the top and bottom
// sides; 4 + 3 * notches vertices.
Polygon random_notched_polygon(std::mt19937_64& rng, int notches = 3);

// Test corpus: alternates twisted and notched polygons, n <= 14.
std::vector<Polygon> random_corpus(std::uint64_t seed, int count);

}  // namespace mwt
