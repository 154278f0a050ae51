#pragma once
/**
 * Unrolling of the reduced polygon into a chain of triangles ("sleeve") and
 * the shortest-path / fold-back steps that turn it into a watchman tour.
 *
 * Starting from a vertex v of the reduced polygon, the boundary is walked
 * counterclockwise. Each essential edge met on the way acts as a mirror: all
 * later triangles are reflected across its current image. Between mirrors only
 * the dual-tree path of triangles is kept, so the sleeve is a simple chain and
 * the funnel algorithm applies directly. The shortest path from v to its image
 * v' folds back into the shortest tour through v that touches every gate.
 */

#include <array>
#include <vector>

#include "mwt/cuts.hpp"
#include "mwt/gates.hpp"
#include "mwt/geom.hpp"

namespace mwt {

struct Triangulation {
  std::vector<std::array<int, 3>> triangles;  // CCW vertex triples
  // neighbors[t][k]: triangle across edge (tri[k], tri[k+1]), or -1.
  std::vector<std::array<int, 3>> neighbors;
};

Triangulation triangulate(const Polygon& poly);
Triangulation triangulate(const ReducedPolygon& rp);

// Affine isometry p -> M p + t.
struct Rigid {
  double m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  Point t;

  Point apply(Point p) const { return {m00 * p.x + m01 * p.y + t.x, m10 * p.x + m11 * p.y + t.y}; }
  Segment apply(const Segment& s) const { return {apply(s.a), apply(s.b)}; }
  // (next after this)(p) = next.apply(this->apply(p))
  Rigid then(const Rigid& next) const;
  Rigid inverse() const;
  static Rigid reflection(const Segment& mirror);
};

struct Panel {
  int triangle = -1;
  int frame = 0;
  std::array<Point, 3> corners;  // unrolled coordinates
};

struct Mirror {
  int essential_edge = -1;  // edge index of the reduced polygon
  int gate = -1;
  Segment segment;          // unrolled coordinates
  int frame_before = 0;     // frames[frame_before] maps the original edge to segment
  int portal = -1;          // portal index, -1 when the mirror passes through the source
};

struct Portal {
  Point left;
  Point right;
  int left_vertex = -1;  // reduced-polygon vertex ids
  int right_vertex = -1;
  int mirror = -1;       // index into Sleeve::mirrors when this portal is a mirror
};

struct Sleeve {
  std::vector<Panel> panels;
  std::vector<Mirror> mirrors;
  std::vector<Rigid> frames;  // frames[k]: original -> unrolled after k mirrors
  std::vector<Portal> portals;
  Point source;
  Point image;
  int source_vertex = -1;

  bool degenerate() const { return portals.empty(); }
};

// Throws GeometryError when v is out of range.
Sleeve unroll(const ReducedPolygon& rp, const Triangulation& tri, int v);

struct PathVertex {
  Point p;          // unrolled coordinates
  int portal = -1;  // sleeve portal index the vertex belongs to; -1 source, size() image
  int vertex = -1;  // reduced-polygon vertex id
  int frame = 0;
};

struct SleevePath {
  std::vector<PathVertex> vertices;
  double length = 0.0;
};

// Funnel shortest path from source to image through the portal sequence.
SleevePath shortest_path(const Sleeve& sleeve);

// Anchor marks the single point of a zero-length tour that is neither a
// reflex vertex nor on a gate.
enum class TagKind { Stable, Moving, Anchor };

struct TourTag {
  TagKind kind = TagKind::Stable;
  int polygon_vertex = -1;  // source polygon vertex for stable points
  int gate = -1;            // gate index for moving points
  CutColor color = CutColor::Red;
  bool at_far_end = false;  // moving point sitting on the far endpoint of its gate
};

struct Tour {
  std::vector<Point> cycle;
  std::vector<TourTag> tags;
  double length = 0.0;
  Angle theta;

  static double cycle_length(const std::vector<Point>& cycle);
};

// Maps the unrolled path back into the polygon; each mirror crossing becomes
// a moving vertex on the corresponding gate.
Tour fold_back(const ReducedPolygon& rp, const Sleeve& sleeve, const SleevePath& path);

}  // namespace mwt
