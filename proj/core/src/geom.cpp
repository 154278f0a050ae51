#include "mwt/geom.hpp"

#include <algorithm>
#include <limits>

#include "mwt/events.hpp"

namespace mwt {

std::string_view to_string(EventType type) {
  switch (type) {
    case EventType::Validity: return "validity";
    case EventType::Domination: return "domination";
    case EventType::Jumping: return "jumping";
    case EventType::Passing: return "passing";
    case EventType::Bending: return "bending";
    case EventType::Cuddle: return "cuddle";
  }
  return "unknown";
}

EventAngleError::EventAngleError(EventType type, std::vector<int> witnesses, double theta_deg,
                                 const std::string& what)
    : std::runtime_error(what), type_(type), witnesses_(std::move(witnesses)), theta_deg_(theta_deg) {}

double normalize_degrees(double deg) {
  if (!std::isfinite(deg)) throw GeometryError("angle is not finite");
  double r = std::fmod(deg, 180.0);
  if (r < 0.0) r += 180.0;
  if (r >= 180.0) r -= 180.0;  // fmod rounding at the wrap
  return r;
}

Angle::Angle(double degrees) : deg_(normalize_degrees(degrees)) {}

Point Angle::direction() const {
  const double r = radians();
  return {std::cos(r), std::sin(r)};
}

int orient(Point p, Point q, Point r) {
  const double v = orient_value(p, q, r);
  if (v > kOrientTol) return 1;
  if (v < -kOrientTol) return -1;
  return 0;
}

Point reflect_point(Point p, const Segment& mirror) {
  const Point d = mirror.b - mirror.a;
  const double len2 = dot(d, d);
  if (!(len2 > 0.0)) throw GeometryError("degenerate mirror");
  const double s = dot(p - mirror.a, d) / len2;
  const Point foot = mirror.a + s * d;
  return 2.0 * foot - p;
}

double segment_parameter(Point p, const Segment& s) {
  const Point d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return 0.0;
  return std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
}

Point project_to_segment(Point p, const Segment& s) {
  return s.a + segment_parameter(p, s) * (s.b - s.a);
}

double point_segment_distance(Point p, const Segment& s) {
  return distance(p, project_to_segment(p, s));
}

std::optional<Point> line_intersection(const Segment& s, const Segment& t) {
  const Point r = s.b - s.a;
  const Point q = t.b - t.a;
  const double den = cross(r, q);
  if (std::abs(den) <= 1e-15 * norm(r) * norm(q)) return std::nullopt;
  const double u = cross(t.a - s.a, q) / den;
  return s.a + u * r;
}

double signed_area(std::span<const Point> ring) {
  double a = 0.0;
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) a += cross(ring[i], ring[(i + 1) % n]);
  return 0.5 * a;
}

bool ring_contains(std::span<const Point> ring, Point p, double tol) {
  const size_t n = ring.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    if (point_segment_distance(p, {ring[i], ring[(i + 1) % n]}) <= tol) return true;
  }
  bool inside = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point a = ring[i];
    const Point b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

namespace {

bool segments_touch(const Segment& s, const Segment& t, double tol) {
  const auto side = [](const Segment& l, Point p) {
    const double len = l.length();
    return len == 0.0 ? 0.0 : orient_value(l.a, l.b, p) / len;
  };
  const double d1 = side(s, t.a), d2 = side(s, t.b);
  const double d3 = side(t, s.a), d4 = side(t, s.b);
  if (((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol)) &&
      ((d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol))) {
    return true;
  }
  return point_segment_distance(t.a, s) <= tol || point_segment_distance(t.b, s) <= tol ||
         point_segment_distance(s.a, t) <= tol || point_segment_distance(s.b, t) <= tol;
}

}  // namespace

Polygon Polygon::from_points(std::vector<Point> pts, PolygonDiagnostics* diag) {
  PolygonDiagnostics local;
  PolygonDiagnostics& dg = diag ? *diag : local;
  dg = {};

  for (size_t i = 0; i < pts.size(); ++i) {
    if (!std::isfinite(pts[i].x) || !std::isfinite(pts[i].y)) {
      throw GeometryError("vertex " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  if (pts.size() < 3) throw GeometryError("polygon needs at least 3 vertices");
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      if (near(pts[i], pts[j], kOnEdgeTol)) {
        throw GeometryError("duplicate vertices " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }

  std::vector<int> ids(pts.size());
  for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);

  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) {
      const Point a = pts[(i + n - 1) % n];
      const Point b = pts[i];
      const Point c = pts[(i + 1) % n];
      const double len = distance(a, c);
      if (std::abs(orient_value(a, b, c)) / std::max(len, 1e-300) <= kOrientTol) {
        if (dot(b - a, c - b) <= 0.0) {
          throw GeometryError("vertex " + std::to_string(ids[i]) + " folds back onto its neighbours");
        }
        dg.merged_collinear.push_back(ids[i]);
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (pts.size() < 3) throw GeometryError("polygon is degenerate after merging collinear vertices");

  const double area = signed_area(pts);
  if (std::abs(area) <= kOrientTol) throw GeometryError("polygon has zero area");
  if (area < 0.0) {
    std::reverse(pts.begin(), pts.end());
    std::reverse(ids.begin(), ids.end());
    dg.reversed = true;
  }

  const size_t n = pts.size();
  for (size_t i = 0; i < n; ++i) {
    const Segment e{pts[i], pts[(i + 1) % n]};
    for (size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      const Segment f{pts[j], pts[(j + 1) % n]};
      if (segments_touch(e, f, kOnEdgeTol)) {
        throw GeometryError("edges starting at vertices " + std::to_string(ids[i]) + " and " +
                            std::to_string(ids[j]) + " intersect");
      }
    }
  }

  Polygon poly;
  poly.vertices_ = std::move(pts);
  poly.finalize();
  return poly;
}

Polygon Polygon::trusted(std::vector<Point> pts) {
  if (pts.size() < 3) throw GeometryError("polygon needs at least 3 vertices");
  Polygon poly;
  poly.vertices_ = std::move(pts);
  poly.finalize();
  return poly;
}

void Polygon::finalize() {
  const int n = size();
  reflex_.assign(static_cast<size_t>(n), false);
  reflex_list_.clear();
  for (int i = 0; i < n; ++i) {
    if (orient_value(vertex(i - 1), vertex(i), vertex(i + 1)) < 0.0) {
      reflex_[static_cast<size_t>(i)] = true;
      reflex_list_.push_back(i);
    }
  }
  diameter_ = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) diameter_ = std::max(diameter_, distance(vertex(i), vertex(j)));
  }
}

bool Polygon::on_boundary(Point p, double tol) const { return locate_on_boundary(p, tol).has_value(); }

std::optional<BoundaryPoint> Polygon::locate_on_boundary(Point p, double tol) const {
  const int v = find_vertex(p, tol);
  if (v >= 0) return BoundaryPoint{vertex(v), v, 0.0};
  double best = std::numeric_limits<double>::infinity();
  std::optional<BoundaryPoint> out;
  for (int i = 0; i < size(); ++i) {
    const Segment e = edge(i);
    const double d = point_segment_distance(p, e);
    if (d <= tol && d < best) {
      best = d;
      out = BoundaryPoint{p, i, segment_parameter(p, e)};
    }
  }
  return out;
}

int Polygon::find_vertex(Point p, double tol) const {
  for (int i = 0; i < size(); ++i) {
    if (near(vertex(i), p, tol)) return i;
  }
  return -1;
}

bool segment_inside(const Polygon& poly, Point a, Point b, double tol) {
  if (!poly.contains(a, tol) || !poly.contains(b, tol)) return false;
  const Segment s{a, b};
  const double len = s.length();
  if (len <= tol) return true;
  std::vector<double> cuts{0.0, 1.0};
  for (int i = 0; i < poly.size(); ++i) {
    const Segment e = poly.edge(i);
    const double elen = e.length();
    const double dc = orient_value(a, b, e.a) / len;
    const double dd = orient_value(a, b, e.b) / len;
    const double da = orient_value(e.a, e.b, a) / elen;
    const double db = orient_value(e.a, e.b, b) / elen;
    if (((dc > tol && dd < -tol) || (dc < -tol && dd > tol)) &&
        ((da > tol && db < -tol) || (da < -tol && db > tol))) {
      return false;
    }
    for (Point q : {e.a, e.b}) {
      if (point_segment_distance(q, s) <= tol) cuts.push_back(segment_parameter(q, s));
    }
    // Transversal contact where the edge only grazes the segment line.
    if ((dc > tol && dd < -tol) || (dc < -tol && dd > tol)) {
      if (auto x = line_intersection(s, e)) {
        if (point_segment_distance(*x, s) <= tol) cuts.push_back(segment_parameter(*x, s));
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] <= 1e-12) continue;
    const Point m = a + (0.5 * (cuts[i] + cuts[i + 1])) * (b - a);
    if (!poly.contains(m, tol)) return false;
  }
  return true;
}

namespace {

struct RayHit {
  BoundaryPoint where;
  double t = 0.0;
};

// First boundary crossing of the ray from vertex v along dir. Crossings are
// decided by exact signs; a vertex lying exactly on the ray counts as being on
// the positive side.
std::optional<RayHit> shoot(const Polygon& poly, int v, Point dir) {
  const Point o = poly.vertex(v);
  const int n = poly.size();
  std::optional<RayHit> best;
  for (int i = 0; i < n; ++i) {
    if (i == v || poly.wrap(i + 1) == v) continue;
    const Point a = poly.vertex(i);
    const Point b = poly.vertex(i + 1);
    const double sa = cross(dir, a - o);
    const double sb = cross(dir, b - o);
    if ((sa >= 0.0) == (sb >= 0.0)) continue;
    const double u = sa / (sa - sb);
    const Point p = a + u * (b - a);
    const double t = dot(p - o, dir);
    if (t <= 0.0) continue;
    if (!best || t < best->t) {
      BoundaryPoint bp{p, i, u};
      if (u >= 1.0) bp = {b, poly.wrap(i + 1), 0.0};
      if (u <= 0.0) bp = {a, i, 0.0};
      best = RayHit{bp, t};
    }
  }
  return best;
}

bool ray_grazes_vertex(const Polygon& poly, int v, Point dir, double t_hit) {
  const Point o = poly.vertex(v);
  for (int w = 0; w < poly.size(); ++w) {
    if (w == v) continue;
    const Point q = poly.vertex(w);
    const double s = cross(dir, q - o);
    const double t = dot(q - o, dir);
    if (std::abs(s) <= kOrientTol && t > 0.0 && t <= t_hit + kOnEdgeTol) return true;
  }
  return false;
}

}  // namespace

Chord max_chord_through(const Polygon& poly, int v, Angle theta) {
  if (v < 0 || v >= poly.size()) throw GeometryError("vertex index out of range");
  const Point o = poly.vertex(v);
  Point dir = theta.direction();
  const double sp = cross(dir, poly.vertex(v - 1) - o);
  const double sn = cross(dir, poly.vertex(v + 1) - o);
  if (!((sp > kOrientTol && sn > kOrientTol) || (sp < -kOrientTol && sn < -kOrientTol))) {
    throw GeometryError("incident edges of vertex " + std::to_string(v) +
                        " do not lie strictly on one side of the line");
  }

  Chord chord;
  chord.theta_used = theta.degrees();
  auto fwd = shoot(poly, v, dir);
  auto bwd = shoot(poly, v, -1.0 * dir);
  if (!fwd || !bwd) throw GeometryError("ray from vertex " + std::to_string(v) + " does not exit");

  if (ray_grazes_vertex(poly, v, dir, fwd->t) || ray_grazes_vertex(poly, v, -1.0 * dir, bwd->t)) {
    const double perturbed = theta.degrees() + kChordPerturbDeg;
    const double r = perturbed * kPi / 180.0;
    dir = {std::cos(r), std::sin(r)};
    fwd = shoot(poly, v, dir);
    bwd = shoot(poly, v, -1.0 * dir);
    if (!fwd || !bwd) throw GeometryError("ray from vertex " + std::to_string(v) + " does not exit");
    chord.theta_used = perturbed;
    chord.perturbed = true;
  }

  chord.back = bwd->where;
  chord.front = fwd->where;
  chord.segment = {bwd->where.p, fwd->where.p};
  return chord;
}

Chord max_chord_through(const Polygon& poly, Point v, Angle theta) {
  const int idx = poly.find_vertex(v);
  if (idx < 0) throw GeometryError("point is not a vertex of the polygon");
  return max_chord_through(poly, idx, theta);
}

}  // namespace mwt
