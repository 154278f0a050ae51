#include "mwt/cuts.hpp"

#include <cmath>

#include "mwt/events.hpp"

namespace mwt {

const char* to_string(CutColor c) { return c == CutColor::Red ? "red" : "blue"; }
const char* to_string(CutKind k) { return k == CutKind::Forward ? "forward" : "backward"; }
const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Convex: return "convex";
    case VertexClass::Red: return "red";
    case VertexClass::Blue: return "blue";
    case VertexClass::Uncolored: return "uncolored";
    case VertexClass::Boundary: return "boundary";
  }
  return "?";
}

VertexClass classify_vertex(const Polygon& poly, int v, Angle theta) {
  if (!poly.is_reflex(v)) return VertexClass::Convex;
  const Point o = poly.vertex(v);
  const Point d = theta.direction();
  const double sp = cross(d, poly.vertex(v - 1) - o);
  const double sn = cross(d, poly.vertex(v + 1) - o);
  if (std::abs(sp) <= kOrientTol || std::abs(sn) <= kOrientTol) return VertexClass::Boundary;
  if (sp > 0.0 && sn > 0.0) return VertexClass::Blue;
  if (sp < 0.0 && sn < 0.0) return VertexClass::Red;
  return VertexClass::Uncolored;
}

namespace {

// Counterclockwise turn from a to b in [0, 2pi).
double ccw_turn(Point a, Point b) {
  double t = std::atan2(cross(a, b), dot(a, b));
  if (t < 0.0) t += 2.0 * kPi;
  return t;
}

std::string angle_text(Angle theta) { return std::to_string(theta.degrees()); }

}  // namespace

std::vector<ThetaCut> compute_cuts(const Polygon& poly, Angle theta) {
  const int n = poly.size();
  std::vector<VertexClass> cls(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    cls[static_cast<size_t>(v)] = classify_vertex(poly, v, theta);
    if (cls[static_cast<size_t>(v)] == VertexClass::Boundary) {
      throw EventAngleError(EventType::Validity, {v}, theta.degrees(),
                            "validity event: an edge at vertex " + std::to_string(v) +
                                " is parallel to theta=" + angle_text(theta));
    }
  }

  const Point d = theta.direction();
  for (int v = 0; v < n; ++v) {
    const VertexClass cv = cls[static_cast<size_t>(v)];
    if (cv != VertexClass::Red && cv != VertexClass::Blue) continue;
    for (int w = v + 1; w < n; ++w) {
      if (cls[static_cast<size_t>(w)] != cv) continue;
      const Point a = poly.vertex(v);
      const Point b = poly.vertex(w);
      if (std::abs(cross(d, b - a)) <= kOrientTol && segment_inside(poly, a, b)) {
        throw EventAngleError(EventType::Domination, {v, w}, theta.degrees(),
                              "domination event: same-colored vertices " + std::to_string(v) +
                                  " and " + std::to_string(w) + " are collinear at theta=" +
                                  angle_text(theta));
      }
    }
  }

  std::vector<ThetaCut> cuts;
  for (int v = 0; v < n; ++v) {
    const VertexClass cv = cls[static_cast<size_t>(v)];
    if (cv != VertexClass::Red && cv != VertexClass::Blue) continue;
    const Chord chord = max_chord_through(poly, v, theta);
    const Point o = poly.vertex(v);
    const BoundaryPoint at_v{o, v, 0.0};
    const Point to_next = poly.vertex(v + 1) - o;
    // The forward cut bounds the component entered first when walking the
    // boundary counterclockwise from v.
    const bool forward_is_plus = ccw_turn(to_next, d) < ccw_turn(to_next, -1.0 * d);

    ThetaCut fwd;
    fwd.vertex_index = v;
    fwd.vertex = o;
    fwd.color = cv == VertexClass::Red ? CutColor::Red : CutColor::Blue;
    fwd.kind = CutKind::Forward;
    fwd.theta = theta;
    fwd.perturbed = chord.perturbed;
    ThetaCut bwd = fwd;
    bwd.kind = CutKind::Backward;

    const BoundaryPoint& ahead = forward_is_plus ? chord.front : chord.back;
    const BoundaryPoint& behind = forward_is_plus ? chord.back : chord.front;
    fwd.tail = at_v;
    fwd.head = ahead;
    bwd.tail = behind;
    bwd.head = at_v;
    fwd.chord = {fwd.tail.p, fwd.head.p};
    bwd.chord = {bwd.tail.p, bwd.head.p};
    cuts.push_back(fwd);
    cuts.push_back(bwd);
  }
  return cuts;
}

std::vector<Point> left_region(const Polygon& poly, const ThetaCut& cut) {
  const int n = poly.size();
  const auto cyc = [n](double x) {
    double r = std::fmod(x, static_cast<double>(n));
    if (r < 0.0) r += n;
    return r;
  };
  const double u_head = cut.head.param();
  const double span = cyc(cut.tail.param() - u_head);
  std::vector<Point> ring{cut.chord.a, cut.chord.b};
  for (int k = static_cast<int>(std::floor(u_head)) + 1;; ++k) {
    const double off = cyc(k - u_head);
    if (off == 0.0) continue;
    if (off >= span) break;
    ring.push_back(poly.vertex(k));
  }
  return ring;
}

bool left_region_contains(const Polygon& poly, const ThetaCut& cut, Point p) {
  if (!poly.contains(p)) throw GeometryError("query point lies outside the polygon");
  return ring_contains(left_region(poly, cut), p);
}

}  // namespace mwt
