#pragma once

#include <optional>
#include <vector>

#include "mwt/cuts.hpp"
#include "mwt/events.hpp"
#include "mwt/gates.hpp"
#include "mwt/geom.hpp"
#include "mwt/sleeve.hpp"

namespace mwt {

// Tour fragment between consecutive stable vertices. A tour without stable
// vertices is reported as a single cyclic subpath.
struct MaximalMovingSubpath {
  Point start_stable;
  std::vector<std::pair<Point, int>> moving;  // (point, gate index)
  std::vector<CutColor> colors;               // parallel to moving
  Point end_stable;
  bool cyclic = false;
};

// Combinatorial shape of a solved tour; constant between consecutive events.
struct TourStructure {
  std::vector<int> stable;                     // polygon vertex ids, sorted
  std::vector<std::pair<int, int>> gates;      // (gate vertex, kind), sorted
  std::vector<std::pair<int, int>> gate_edges; // (gate vertex * 2 + kind, edge)
  std::vector<std::pair<int, int>> touches;    // (gate vertex * 2 + kind, bit0 vertex | bit1 far end)

  friend bool operator==(const TourStructure&, const TourStructure&) = default;
};

struct SolveResult {
  Tour tour;
  std::vector<ThetaCut> cuts;
  std::vector<Gate> gates;
  std::vector<Point> candidates_tried;
  std::vector<double> candidate_lengths;
  std::vector<MaximalMovingSubpath> subpaths;
  std::optional<ReducedPolygon> reduced;  // absent for zero-length tours
  int winner = -1;                        // index into candidates_tried
  bool perturbed = false;                 // some chord needed a theta nudge
};

// Start vertices (reduced-polygon indices) of which at least one lies on a
// shortest tour. Requires at least two essential edges.
std::vector<int> candidate_vertices(const ReducedPolygon& rp, const Triangulation& tri);

// Shortest watchman tour under theta-monotone visibility. Throws
// EventAngleError at validity angles and domination ties.
SolveResult solve_theta(const Polygon& poly, Angle theta);

// Shortest tour through a given start vertex of the reduced polygon.
Tour tour_through(const ReducedPolygon& rp, const Triangulation& tri, int v, double* path_length = nullptr);

std::vector<MaximalMovingSubpath> decompose_subpaths(const Tour& tour);

TourStructure structure_of(const SolveResult& result);

}  // namespace mwt
