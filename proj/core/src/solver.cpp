#include "mwt/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mwt {

namespace {

void push_unique(std::vector<int>& out, int v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

// Highest source-reflex vertex on the boundary chain first..last (inclusive,
// walking counterclockwise), measured along `up`.
int highest_on_chain(const ReducedPolygon& rp, int first, int last, Point up) {
  const Polygon& P = rp.polygon;
  int best = -1;
  double best_h = -std::numeric_limits<double>::infinity();
  for (int k = first;; k = P.wrap(k + 1)) {
    if (rp.origin[static_cast<size_t>(k)].reflex_in_source) {
      const double h = dot(P.vertex(k), up);
      if (h > best_h + 1e-12) {
        best_h = h;
        best = k;
      }
    }
    if (k == last) break;
  }
  return best;
}

}  // namespace

std::vector<int> candidate_vertices(const ReducedPolygon& rp, const Triangulation& tri) {
  const Polygon& P = rp.polygon;
  const size_t m = rp.essential.size();
  if (m < 2) throw GeometryError("candidate set needs at least two essential edges");

  std::vector<int> out;
  if (m == 2) {
    const int e0 = rp.essential[0];
    const int e1 = rp.essential[1];
    const Gate& g0 = rp.gates[static_cast<size_t>(rp.essential_gate[0])];
    const Gate& g1 = rp.gates[static_cast<size_t>(rp.essential_gate[1])];
    if (g0.cut.color == g1.cut.color) {
      // Gates parallel to the x-axis after rotating by -theta; "up" points
      // away from the left regions, into the reduced polygon.
      const Segment c = g0.cut.chord;
      const Point d = (1.0 / c.length()) * (c.b - c.a);
      const Point up{d.y, -d.x};
      const int a = highest_on_chain(rp, P.wrap(e0 + 1), e1, up);
      const int b = highest_on_chain(rp, P.wrap(e1 + 1), e0, up);
      if (a >= 0) push_unique(out, a);
      if (b >= 0) push_unique(out, b);
      if (out.empty()) {
        for (int v : {e0, P.wrap(e0 + 1), e1, P.wrap(e1 + 1)}) push_unique(out, v);
      }
      return out;
    }
    const int ends[4] = {e0, P.wrap(e0 + 1), e1, P.wrap(e1 + 1)};
    for (int v : ends) push_unique(out, v);
    for (int p : ends) {
      const Sleeve s = unroll(rp, tri, p);
      const SleevePath path = shortest_path(s);
      const auto& pv = path.vertices;
      for (size_t a = 0; a + 1 < pv.size(); ++a) {
        bool crosses = false;
        for (const Mirror& mir : s.mirrors) {
          if (mir.portal >= 0 && mir.portal > pv[a].portal && mir.portal <= pv[a + 1].portal) crosses = true;
        }
        if (crosses) {
          if (a > 0) push_unique(out, pv[a].vertex);
          break;
        }
      }
    }
    return out;
  }

  for (int k = 0; k < P.size(); ++k) {
    if (rp.origin[static_cast<size_t>(k)].reflex_in_source) push_unique(out, k);
  }
  for (int e : rp.essential) {
    push_unique(out, e);
    push_unique(out, P.wrap(e + 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Tour tour_through(const ReducedPolygon& rp, const Triangulation& tri, int v, double* path_length) {
  const Sleeve s = unroll(rp, tri, v);
  const SleevePath path = shortest_path(s);
  if (path_length) *path_length = path.length;
  return fold_back(rp, s, path);
}

namespace {

Tour point_tour(Point p, TourTag tag, Angle theta) {
  Tour t;
  t.cycle = {p};
  t.tags = {tag};
  t.length = 0.0;
  t.theta = theta;
  return t;
}

// A point common to the closed left regions of all gates, if any. Such a
// point lies on some gate chord, so chord endpoints and midpoints suffice.
std::optional<std::pair<Point, TourTag>> common_point(const Polygon& poly, const std::vector<Gate>& gates) {
  std::vector<std::vector<Point>> regions;
  for (const Gate& g : gates) regions.push_back(left_region(poly, g.cut));

  const auto in_all = [&](Point q) {
    for (const auto& r : regions) {
      if (!ring_contains(r, q)) return false;
    }
    return true;
  };

  for (int pass = 0; pass < 3; ++pass) {
    for (size_t i = 0; i < gates.size(); ++i) {
      const Gate& g = gates[i];
      const Point q = pass == 0 ? g.gate_vertex : pass == 1 ? g.far_point() : g.span().midpoint();
      if (!in_all(q)) continue;
      TourTag tag;
      if (pass == 0) {
        tag.kind = TagKind::Stable;
        tag.polygon_vertex = g.cut.vertex_index;
      } else {
        tag.kind = TagKind::Moving;
        tag.gate = static_cast<int>(i);
        tag.color = g.cut.color;
        tag.at_far_end = pass == 1;
      }
      return std::make_pair(q, tag);
    }
  }
  return std::nullopt;
}

}  // namespace

SolveResult solve_theta(const Polygon& poly, Angle theta) {
  SolveResult r;
  r.cuts = compute_cuts(poly, theta);
  for (const ThetaCut& c : r.cuts) r.perturbed = r.perturbed || c.perturbed;
  r.gates = compute_gates(poly, r.cuts);

  if (r.gates.empty()) {
    int lowest = 0;
    for (int i = 1; i < poly.size(); ++i) {
      const Point a = poly.vertex(i);
      const Point b = poly.vertex(lowest);
      if (a.y < b.y || (a.y == b.y && a.x < b.x)) lowest = i;
    }
    TourTag tag;
    tag.kind = poly.is_reflex(lowest) ? TagKind::Stable : TagKind::Anchor;
    tag.polygon_vertex = lowest;
    r.tour = point_tour(poly.vertex(lowest), tag, theta);
    r.candidates_tried = {poly.vertex(lowest)};
    r.candidate_lengths = {0.0};
    r.winner = 0;
    return r;
  }

  if (auto common = common_point(poly, r.gates)) {
    r.tour = point_tour(common->first, common->second, theta);
    r.candidates_tried = {common->first};
    r.candidate_lengths = {0.0};
    r.winner = 0;
    return r;
  }

  r.reduced = reduce_polygon(poly, r.gates);
  const ReducedPolygon& rp = *r.reduced;
  const Triangulation tri = triangulate(rp);
  const std::vector<int> cands = candidate_vertices(rp, tri);

  const double tie = 1e-9 * (1.0 + poly.diameter());
  double best = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < cands.size(); ++k) {
    Tour t = tour_through(rp, tri, cands[k]);
    t.theta = theta;
    r.candidates_tried.push_back(rp.polygon.vertex(cands[k]));
    r.candidate_lengths.push_back(t.length);
    if (t.length < best - tie) {
      best = t.length;
      r.tour = std::move(t);
      r.winner = static_cast<int>(k);
    }
  }
  r.subpaths = decompose_subpaths(r.tour);
  return r;
}

std::vector<MaximalMovingSubpath> decompose_subpaths(const Tour& tour) {
  std::vector<MaximalMovingSubpath> out;
  const size_t n = tour.cycle.size();
  if (n <= 1) return out;

  std::vector<size_t> stable;
  for (size_t i = 0; i < n; ++i) {
    if (tour.tags[i].kind != TagKind::Moving) stable.push_back(i);
  }

  if (stable.empty()) {
    MaximalMovingSubpath sp;
    sp.cyclic = true;
    sp.start_stable = sp.end_stable = tour.cycle.front();
    for (size_t i = 0; i < n; ++i) {
      sp.moving.emplace_back(tour.cycle[i], tour.tags[i].gate);
      sp.colors.push_back(tour.tags[i].color);
    }
    out.push_back(std::move(sp));
    return out;
  }

  for (size_t k = 0; k < stable.size(); ++k) {
    const size_t s0 = stable[k];
    const size_t s1 = stable[(k + 1) % stable.size()];
    MaximalMovingSubpath sp;
    sp.start_stable = tour.cycle[s0];
    sp.end_stable = tour.cycle[s1];
    for (size_t i = (s0 + 1) % n; i != s1; i = (i + 1) % n) {
      sp.moving.emplace_back(tour.cycle[i], tour.tags[i].gate);
      sp.colors.push_back(tour.tags[i].color);
    }
    if (!sp.moving.empty()) out.push_back(std::move(sp));
  }
  return out;
}

TourStructure structure_of(const SolveResult& result) {
  TourStructure s;
  for (const TourTag& t : result.tour.tags) {
    if (t.kind == TagKind::Stable) s.stable.push_back(t.polygon_vertex);
  }
  std::sort(s.stable.begin(), s.stable.end());
  s.stable.erase(std::unique(s.stable.begin(), s.stable.end()), s.stable.end());

  for (const Gate& g : result.gates) {
    const int key = g.cut.vertex_index * 2 + (g.cut.kind == CutKind::Backward ? 1 : 0);
    s.gates.emplace_back(g.cut.vertex_index, static_cast<int>(g.cut.kind));
    s.gate_edges.emplace_back(key, g.gate_edge);
    int bits = 0;
    for (Point p : result.tour.cycle) {
      if (near(p, g.gate_vertex)) bits |= 1;
      if (near(p, g.far_point())) bits |= 2;
    }
    // Touching the far end also counts when the tour passes through it.
    const auto& cyc = result.tour.cycle;
    for (size_t i = 0; i < cyc.size() && cyc.size() > 1; ++i) {
      const Segment seg{cyc[i], cyc[(i + 1) % cyc.size()]};
      if (point_segment_distance(g.far_point(), seg) <= kOnEdgeTol) bits |= 2;
      if (point_segment_distance(g.gate_vertex, seg) <= kOnEdgeTol) bits |= 1;
    }
    s.touches.emplace_back(key, bits);
  }
  std::sort(s.gates.begin(), s.gates.end());
  std::sort(s.gate_edges.begin(), s.gate_edges.end());
  std::sort(s.touches.begin(), s.touches.end());
  return s;
}

}  // namespace mwt
