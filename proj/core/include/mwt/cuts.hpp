#pragma once

#include <vector>

#include "mwt/geom.hpp"

namespace mwt {

enum class CutColor { Red, Blue };
enum class CutKind { Forward, Backward };

// Boundary marks a direction collinear with an incident edge: a validity event.
enum class VertexClass { Convex, Red, Blue, Uncolored, Boundary };

const char* to_string(CutColor c);
const char* to_string(CutKind k);
const char* to_string(VertexClass c);

// Directed chord issued by a colored reflex vertex. Forward cuts start at the
// vertex, backward cuts end at it.
struct ThetaCut {
  int vertex_index = -1;
  Point vertex;
  Segment chord;
  BoundaryPoint tail;  // boundary point at chord.a
  BoundaryPoint head;  // boundary point at chord.b
  CutColor color = CutColor::Red;
  CutKind kind = CutKind::Forward;
  Angle theta;
  bool perturbed = false;

  // The endpoint that is not the issuing vertex, on the gate edge.
  const BoundaryPoint& far_end() const { return kind == CutKind::Forward ? head : tail; }
};

VertexClass classify_vertex(const Polygon& poly, int v, Angle theta);

// Two cuts (forward then backward) per colored reflex vertex, in vertex order.
// Throws EventAngleError at validity angles and at collinear same-colored
// cuts (domination ties).
std::vector<ThetaCut> compute_cuts(const Polygon& poly, Angle theta);

// The closed component of the polygon locally left of the cut, as a CCW ring
// starting with chord.a, chord.b.
std::vector<Point> left_region(const Polygon& poly, const ThetaCut& cut);

// Throws GeometryError when p lies outside the polygon.
bool left_region_contains(const Polygon& poly, const ThetaCut& cut, Point p);

}  // namespace mwt
