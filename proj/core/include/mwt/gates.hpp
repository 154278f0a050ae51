#pragma once

#include <vector>

#include "mwt/cuts.hpp"
#include "mwt/geom.hpp"

namespace mwt {

// A cut not dominated by any other cut.
struct Gate {
  ThetaCut cut;
  Point gate_vertex;
  int gate_edge = -1;  // polygon edge under the far endpoint

  Point far_point() const { return cut.far_end().p; }
  // Chord oriented from the gate vertex to the far endpoint.
  Segment span() const { return {gate_vertex, far_point()}; }
};

// Where a vertex of the reduced polygon came from.
struct ReducedVertex {
  int polygon_vertex = -1;  // index in the source polygon, or -1
  int far_of_gate = -1;     // gate whose far endpoint this is, or -1
  bool reflex_in_source = false;
};

struct ReducedPolygon {
  Polygon polygon;
  std::vector<ReducedVertex> origin;  // parallel to polygon vertices
  std::vector<int> essential;         // edge i of polygon runs i -> i+1
  std::vector<int> essential_gate;    // gate index for each essential edge
  std::vector<Gate> gates;
  Angle theta;

  // Gate index if edge i is essential, else -1.
  int gate_on_edge(int i) const;
};

// True iff the closed left region of c is a strict subset of that of other.
bool dominates(const Polygon& poly, const ThetaCut& c, const ThetaCut& other);

// Cuts dominated by no other cut, in input order.
std::vector<Gate> compute_gates(const Polygon& poly, const std::vector<ThetaCut>& cuts);

// The polygon with every gate's left region removed; gate chords become the
// essential edges of the result.
ReducedPolygon reduce_polygon(const Polygon& poly, const std::vector<Gate>& gates);

}  // namespace mwt
