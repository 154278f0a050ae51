#pragma once
/**
 * Planar primitives for the monotone watchman tour library.
 *
 * All arithmetic is double precision with explicit tolerances:
 *  - kOrientTol bounds the twice-signed area below which three points count as
 *    collinear (unit direction vectors make this a signed distance);
 *  - kOnEdgeTol is the distance at which a point counts as lying on a segment.
 *
 * Polygons are simple, counterclockwise, without holes, and carry no three
 * consecutive collinear vertices.
 */

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwt {

inline constexpr double kOrientTol = 1e-9;
inline constexpr double kOnEdgeTol = 1e-7;
inline constexpr double kPi = 3.14159265358979323846;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline bool near(Point a, Point b, double tol = kOnEdgeTol) { return distance(a, b) <= tol; }

// Direction angle in degrees, normalized to [0, 180).
class Angle {
 public:
  Angle() = default;
  explicit Angle(double degrees);

  double degrees() const { return deg_; }
  double radians() const { return deg_ * kPi / 180.0; }
  // Unit vector (cos, sin) of the direction.
  Point direction() const;
  Angle operator+(double delta_deg) const { return Angle(deg_ + delta_deg); }

 private:
  double deg_ = 0.0;
};

double normalize_degrees(double deg);

struct Segment {
  Point a;
  Point b;

  double length() const { return distance(a, b); }
  Point midpoint() const { return 0.5 * (a + b); }
};

// Twice the signed area of triangle pqr.
inline double orient_value(Point p, Point q, Point r) { return cross(q - p, r - p); }

// Sign of the turn p -> q -> r; 0 when |2*area| <= kOrientTol.
int orient(Point p, Point q, Point r);

// Mirror image of p across the supporting line of mirror.
Point reflect_point(Point p, const Segment& mirror);

double point_segment_distance(Point p, const Segment& s);

// Closest point of s to p.
Point project_to_segment(Point p, const Segment& s);

// Parameter t in [0,1] of the closest point of s to p.
double segment_parameter(Point p, const Segment& s);

// Intersection of the supporting lines of two segments, if not parallel.
std::optional<Point> line_intersection(const Segment& s, const Segment& t);

double signed_area(std::span<const Point> ring);

// Closed point-in-ring test: points within tol of the boundary are inside.
bool ring_contains(std::span<const Point> ring, Point p, double tol = kOnEdgeTol);

// A point on the boundary of a polygon, as edge index plus parameter along it.
// Edge i runs from vertex i to vertex i+1. A vertex k is (k, 0).
struct BoundaryPoint {
  Point p;
  int edge = -1;
  double t = 0.0;

  bool at_vertex() const { return t == 0.0; }
  double param() const { return edge + t; }
};

struct PolygonDiagnostics {
  bool reversed = false;
  std::vector<int> merged_collinear;  // input indices dropped as collinear
};

class Polygon {
 public:
  Polygon() = default;

  // Validates and sanitizes raw input: clockwise rings are reversed, collinear
  // consecutive vertices merged, duplicates and self-intersections rejected.
  static Polygon from_points(std::vector<Point> pts, PolygonDiagnostics* diag = nullptr);

  // Builds a polygon from a ring already known to be simple and CCW.
  static Polygon trusted(std::vector<Point> pts);

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(int i) const { return vertices_[static_cast<size_t>(wrap(i))]; }
  Segment edge(int i) const { return {vertex(i), vertex(i + 1)}; }
  int wrap(int i) const {
    const int n = size();
    return ((i % n) + n) % n;
  }

  bool is_reflex(int i) const { return reflex_[static_cast<size_t>(wrap(i))]; }
  const std::vector<int>& reflex_vertices() const { return reflex_list_; }

  double area() const { return signed_area(vertices_); }
  double diameter() const { return diameter_; }

  // Closed containment with tolerance.
  bool contains(Point p, double tol = kOnEdgeTol) const { return ring_contains(vertices_, p, tol); }
  bool on_boundary(Point p, double tol = kOnEdgeTol) const;
  std::optional<BoundaryPoint> locate_on_boundary(Point p, double tol = kOnEdgeTol) const;
  // Vertex index equal to p within tol, or -1.
  int find_vertex(Point p, double tol = kOnEdgeTol) const;

 private:
  void finalize();

  std::vector<Point> vertices_;
  std::vector<bool> reflex_;
  std::vector<int> reflex_list_;
  double diameter_ = 0.0;
};

// True when the closed segment ab lies inside the closed polygon.
bool segment_inside(const Polygon& poly, Point a, Point b, double tol = kOnEdgeTol);

struct Chord {
  Segment segment;        // a is the hit against -direction, b against +direction
  BoundaryPoint back;     // boundary point at segment.a
  BoundaryPoint front;    // boundary point at segment.b
  double theta_used = 0;  // degrees; differs from the request when perturbed
  bool perturbed = false;
};

// Maximal chord of P through vertex v parallel to theta. v must be a vertex
// whose incident edges lie strictly on one side of the line.
Chord max_chord_through(const Polygon& poly, int v, Angle theta);
Chord max_chord_through(const Polygon& poly, Point v, Angle theta);

inline constexpr double kChordPerturbDeg = 1e-7;

}  // namespace mwt
