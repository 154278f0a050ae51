#include "mwt/sleeve.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace mwt {

// ---------------------------------------------------------------------------
// Triangulation (ear clipping)

Triangulation triangulate(const Polygon& poly) {
  const int n = poly.size();
  if (n < 3) throw GeometryError("cannot triangulate fewer than 3 vertices");
  const double scale = std::max(poly.diameter() * poly.diameter(), 1e-300);
  const double area_eps = 1e-14 * scale;

  Triangulation out;
  std::vector<int> ring(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ring[static_cast<size_t>(i)] = i;

  const auto P = [&](int i) { return poly.vertex(i); };
  while (ring.size() > 3) {
    const int m = static_cast<int>(ring.size());
    int chosen = -1;
    int fallback = -1;
    double fallback_area = -1.0;
    for (int i = 0; i < m && chosen < 0; ++i) {
      const int a = ring[static_cast<size_t>((i + m - 1) % m)];
      const int b = ring[static_cast<size_t>(i)];
      const int c = ring[static_cast<size_t>((i + 1) % m)];
      const double area = orient_value(P(a), P(b), P(c));
      if (area > fallback_area) {
        fallback_area = area;
        fallback = i;
      }
      if (area <= area_eps) continue;
      bool ear = true;
      for (int j : ring) {
        if (j == a || j == b || j == c) continue;
        const Point q = P(j);
        if (near(q, P(a), 1e-12) || near(q, P(b), 1e-12) || near(q, P(c), 1e-12)) continue;
        if (orient_value(P(a), P(b), q) >= -area_eps && orient_value(P(b), P(c), q) >= -area_eps &&
            orient_value(P(c), P(a), q) >= -area_eps) {
          ear = false;
          break;
        }
      }
      if (ear) chosen = i;
    }
    if (chosen < 0) chosen = fallback;
    const int a = ring[static_cast<size_t>((chosen + m - 1) % m)];
    const int b = ring[static_cast<size_t>(chosen)];
    const int c = ring[static_cast<size_t>((chosen + 1) % m)];
    out.triangles.push_back({a, b, c});
    ring.erase(ring.begin() + chosen);
  }
  out.triangles.push_back({ring[0], ring[1], ring[2]});

  std::map<std::pair<int, int>, std::pair<int, int>> open_edges;
  out.neighbors.assign(out.triangles.size(), {-1, -1, -1});
  for (size_t t = 0; t < out.triangles.size(); ++t) {
    for (int k = 0; k < 3; ++k) {
      const int u = out.triangles[t][static_cast<size_t>(k)];
      const int w = out.triangles[t][static_cast<size_t>((k + 1) % 3)];
      const auto key = std::minmax(u, w);
      auto it = open_edges.find(key);
      if (it == open_edges.end()) {
        open_edges.emplace(key, std::make_pair(static_cast<int>(t), k));
      } else {
        const auto [t2, k2] = it->second;
        out.neighbors[t][static_cast<size_t>(k)] = t2;
        out.neighbors[static_cast<size_t>(t2)][static_cast<size_t>(k2)] = static_cast<int>(t);
        open_edges.erase(it);
      }
    }
  }
  return out;
}

Triangulation triangulate(const ReducedPolygon& rp) { return triangulate(rp.polygon); }

// ---------------------------------------------------------------------------
// Rigid motions

Rigid Rigid::then(const Rigid& next) const {
  Rigid r;
  r.m00 = next.m00 * m00 + next.m01 * m10;
  r.m01 = next.m00 * m01 + next.m01 * m11;
  r.m10 = next.m10 * m00 + next.m11 * m10;
  r.m11 = next.m10 * m01 + next.m11 * m11;
  r.t = next.apply(t);
  return r;
}

Rigid Rigid::inverse() const {
  // Orthogonal linear part: inverse is the transpose.
  Rigid r;
  r.m00 = m00;
  r.m01 = m10;
  r.m10 = m01;
  r.m11 = m11;
  const Point mt{r.m00 * t.x + r.m01 * t.y, r.m10 * t.x + r.m11 * t.y};
  r.t = -1.0 * mt;
  return r;
}

Rigid Rigid::reflection(const Segment& mirror) {
  const Point d = mirror.b - mirror.a;
  const double len = norm(d);
  if (!(len > 0.0)) throw GeometryError("degenerate mirror");
  const Point u = (1.0 / len) * d;
  Rigid r;
  r.m00 = 2 * u.x * u.x - 1;
  r.m01 = 2 * u.x * u.y;
  r.m10 = r.m01;
  r.m11 = 2 * u.y * u.y - 1;
  const Point ma{r.m00 * mirror.a.x + r.m01 * mirror.a.y, r.m10 * mirror.a.x + r.m11 * mirror.a.y};
  r.t = mirror.a - ma;
  return r;
}

// ---------------------------------------------------------------------------
// Unrolling

namespace {

bool has_vertex(const std::array<int, 3>& tri, int v) {
  return tri[0] == v || tri[1] == v || tri[2] == v;
}

int triangle_with_edge(const Triangulation& T, int u, int w) {
  for (size_t t = 0; t < T.triangles.size(); ++t) {
    const auto& tri = T.triangles[t];
    for (int k = 0; k < 3; ++k) {
      if (tri[static_cast<size_t>(k)] == u && tri[static_cast<size_t>((k + 1) % 3)] == w) {
        return static_cast<int>(t);
      }
    }
  }
  throw GeometryError("essential edge is not a triangulation edge");
}

// Breadth-first search from `from` in the dual tree until `accept` holds;
// returns the triangle chain from `from` to the accepted triangle.
template <class Accept>
std::vector<int> dual_search(const Triangulation& T, int from, Accept accept) {
  std::vector<int> parent(T.triangles.size(), -2);
  std::deque<int> queue{from};
  parent[static_cast<size_t>(from)] = -1;
  while (!queue.empty()) {
    const int t = queue.front();
    queue.pop_front();
    if (accept(t)) {
      std::vector<int> chain;
      for (int c = t; c != -1; c = parent[static_cast<size_t>(c)]) chain.push_back(c);
      std::reverse(chain.begin(), chain.end());
      return chain;
    }
    for (int nb : T.neighbors[static_cast<size_t>(t)]) {
      if (nb >= 0 && parent[static_cast<size_t>(nb)] == -2) {
        parent[static_cast<size_t>(nb)] = t;
        queue.push_back(nb);
      }
    }
  }
  throw GeometryError("triangulation dual graph is disconnected");
}

struct PanelRef {
  int triangle;
  int frame;
};

}  // namespace

Sleeve unroll(const ReducedPolygon& rp, const Triangulation& T, int v) {
  const Polygon& P = rp.polygon;
  const int n = P.size();
  if (v < 0 || v >= n) throw GeometryError("start vertex out of range");

  Sleeve s;
  s.source_vertex = v;
  s.source = P.vertex(v);
  s.frames.push_back(Rigid{});

  std::vector<PanelRef> chain;
  int frame = 0;
  int last_tri = -1;
  bool closed = false;

  const auto in_fan = [&](int t) { return has_vertex(T.triangles[static_cast<size_t>(t)], v); };
  const auto close_leg = [&]() {
    if (last_tri < 0 || closed) return;
    for (int t : dual_search(T, last_tri, in_fan)) chain.push_back({t, frame});
    closed = true;
  };

  for (int k = 0; k < n; ++k) {
    const int e = P.wrap(v + k);
    const int g = rp.gate_on_edge(e);
    if (g < 0) continue;
    const bool at_source = e == v;
    const bool at_image = P.wrap(e + 1) == v;
    if (at_image) close_leg();

    Mirror mir;
    mir.essential_edge = e;
    mir.gate = g;
    mir.frame_before = frame;
    mir.segment = s.frames[static_cast<size_t>(frame)].apply(P.edge(e));

    if (!at_source && !at_image) {
      const int t = triangle_with_edge(T, e, P.wrap(e + 1));
      std::vector<int> leg;
      if (last_tri < 0) {
        leg = dual_search(T, t, in_fan);
        std::reverse(leg.begin(), leg.end());
      } else {
        leg = dual_search(T, last_tri, [t](int x) { return x == t; });
      }
      for (int x : leg) chain.push_back({x, frame});
      last_tri = t;
      mir.portal = 0;  // placeholder, resolved below
    } else {
      mir.portal = -1;
    }
    s.mirrors.push_back(mir);
    s.frames.push_back(s.frames[static_cast<size_t>(frame)].then(Rigid::reflection(mir.segment)));
    ++frame;
  }
  close_leg();
  s.image = s.frames.back().apply(s.source);

  for (const PanelRef& pr : chain) {
    Panel panel;
    panel.triangle = pr.triangle;
    panel.frame = pr.frame;
    const auto& tri = T.triangles[static_cast<size_t>(pr.triangle)];
    for (int k = 0; k < 3; ++k) {
      panel.corners[static_cast<size_t>(k)] =
          s.frames[static_cast<size_t>(pr.frame)].apply(P.vertex(tri[static_cast<size_t>(k)]));
    }
    s.panels.push_back(panel);
  }

  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    const PanelRef a = chain[i];
    const PanelRef b = chain[i + 1];
    const auto& ta = T.triangles[static_cast<size_t>(a.triangle)];
    int pu = -1, pw = -1;
    int mirror_index = -1;
    if (a.frame != b.frame) {
      for (size_t m = 0; m < s.mirrors.size(); ++m) {
        if (s.mirrors[m].frame_before == a.frame && s.mirrors[m].portal >= 0) mirror_index = static_cast<int>(m);
      }
      if (mirror_index < 0 || a.triangle != b.triangle) throw GeometryError("broken sleeve chain");
      pu = s.mirrors[static_cast<size_t>(mirror_index)].essential_edge;
      pw = P.wrap(pu + 1);
    } else {
      const auto& tb = T.triangles[static_cast<size_t>(b.triangle)];
      std::vector<int> shared;
      for (int x : ta) {
        if (has_vertex(tb, x)) shared.push_back(x);
      }
      if (shared.size() != 2) throw GeometryError("consecutive panels do not share an edge");
      pu = shared[0];
      pw = shared[1];
    }
    int opposite = -1;
    for (int x : ta) {
      if (x != pu && x != pw) opposite = x;
    }
    const Rigid& f = s.frames[static_cast<size_t>(a.frame)];
    const Point o = f.apply(P.vertex(opposite));
    const Point qu = f.apply(P.vertex(pu));
    const Point qw = f.apply(P.vertex(pw));
    Portal portal;
    portal.mirror = mirror_index;
    if (orient_value(o, qu, qw) > 0.0) {
      portal.right = qu;
      portal.right_vertex = pu;
      portal.left = qw;
      portal.left_vertex = pw;
    } else {
      portal.right = qw;
      portal.right_vertex = pw;
      portal.left = qu;
      portal.left_vertex = pu;
    }
    if (mirror_index >= 0) s.mirrors[static_cast<size_t>(mirror_index)].portal = static_cast<int>(s.portals.size());
    s.portals.push_back(portal);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Funnel

SleevePath shortest_path(const Sleeve& sleeve) {
  SleevePath out;
  if (sleeve.degenerate()) {
    out.vertices.push_back({sleeve.source, -1, sleeve.source_vertex, 0});
    return out;
  }

  struct FunnelPortal {
    Point left, right;
    int left_vertex, right_vertex;
  };
  std::vector<FunnelPortal> fp;
  fp.push_back({sleeve.source, sleeve.source, sleeve.source_vertex, sleeve.source_vertex});
  for (const Portal& p : sleeve.portals) fp.push_back({p.left, p.right, p.left_vertex, p.right_vertex});
  fp.push_back({sleeve.image, sleeve.image, sleeve.source_vertex, sleeve.source_vertex});

  const auto emit = [&](Point p, int fidx, int vertex) {
    // A degenerate final portal can make the apex coincide with the image.
    if (!out.vertices.empty() && near(out.vertices.back().p, p, 1e-12)) {
      out.vertices.back() = {p, fidx - 1, vertex, 0};
      return;
    }
    out.vertices.push_back({p, fidx - 1, vertex, 0});
  };

  Point apex = fp[0].left, left = fp[0].left, right = fp[0].right;
  int apex_i = 0, left_i = 0, right_i = 0;
  emit(apex, 0, sleeve.source_vertex);

  const int count = static_cast<int>(fp.size());
  for (int i = 1; i < count; ++i) {
    const Point l = fp[static_cast<size_t>(i)].left;
    const Point r = fp[static_cast<size_t>(i)].right;

    if (orient_value(apex, right, r) >= 0.0) {
      if (apex == right || orient_value(apex, left, r) < 0.0) {
        right = r;
        right_i = i;
      } else {
        emit(left, left_i, fp[static_cast<size_t>(left_i)].left_vertex);
        apex = left;
        apex_i = left_i;
        left = right = apex;
        left_i = right_i = apex_i;
        i = apex_i;
        continue;
      }
    }

    if (orient_value(apex, left, l) <= 0.0) {
      if (apex == left || orient_value(apex, right, l) > 0.0) {
        left = l;
        left_i = i;
      } else {
        emit(right, right_i, fp[static_cast<size_t>(right_i)].right_vertex);
        apex = right;
        apex_i = right_i;
        left = right = apex;
        left_i = right_i = apex_i;
        i = apex_i;
        continue;
      }
    }
  }
  emit(sleeve.image, count - 1, sleeve.source_vertex);

  for (size_t k = 0; k + 1 < out.vertices.size(); ++k) {
    out.length += distance(out.vertices[k].p, out.vertices[k + 1].p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fold back

double Tour::cycle_length(const std::vector<Point>& cycle) {
  double len = 0.0;
  const size_t n = cycle.size();
  if (n < 2) return 0.0;
  for (size_t i = 0; i < n; ++i) len += distance(cycle[i], cycle[(i + 1) % n]);
  return len;
}

namespace {

constexpr double kMergeTol = 1e-9;

TourTag tag_for_vertex(const ReducedPolygon& rp, int w) {
  const ReducedVertex& o = rp.origin[static_cast<size_t>(w)];
  TourTag tag;
  if (o.reflex_in_source) {
    tag.kind = TagKind::Stable;
    tag.polygon_vertex = o.polygon_vertex;
  } else if (o.far_of_gate >= 0) {
    tag.kind = TagKind::Moving;
    tag.gate = o.far_of_gate;
    tag.color = rp.gates[static_cast<size_t>(o.far_of_gate)].cut.color;
    tag.at_far_end = true;
  } else {
    tag.kind = TagKind::Stable;
    tag.polygon_vertex = o.polygon_vertex;
  }
  return tag;
}

TourTag tag_for_crossing(const ReducedPolygon& rp, int g, Point x) {
  const Gate& gate = rp.gates[static_cast<size_t>(g)];
  TourTag tag;
  if (near(x, gate.gate_vertex, kMergeTol)) {
    tag.kind = TagKind::Stable;
    tag.polygon_vertex = gate.cut.vertex_index;
    return tag;
  }
  tag.kind = TagKind::Moving;
  tag.gate = g;
  tag.color = gate.cut.color;
  tag.at_far_end = near(x, gate.far_point(), kMergeTol);
  return tag;
}

}  // namespace

Tour fold_back(const ReducedPolygon& rp, const Sleeve& sleeve, const SleevePath& path) {
  Tour tour;
  tour.theta = rp.theta;

  std::vector<Point> pts;
  std::vector<TourTag> tags;
  pts.push_back(rp.polygon.vertex(sleeve.source_vertex));
  tags.push_back(tag_for_vertex(rp, sleeve.source_vertex));

  const auto& pv = path.vertices;
  for (size_t a = 0; a + 1 < pv.size(); ++a) {
    const PathVertex& ua = pv[a];
    const PathVertex& ub = pv[a + 1];
    const Segment seg{ua.p, ub.p};
    for (const Mirror& m : sleeve.mirrors) {
      if (m.portal < 0 || m.portal <= ua.portal || m.portal >= ub.portal) continue;
      Point x = ua.p;
      if (auto hit = line_intersection(seg, m.segment)) {
        x = project_to_segment(*hit, seg);
      } else if (point_segment_distance(ub.p, m.segment) < point_segment_distance(ua.p, m.segment)) {
        x = ub.p;
      }
      const Point original = sleeve.frames[static_cast<size_t>(m.frame_before)].inverse().apply(x);
      const Point on_gate = project_to_segment(original, rp.polygon.edge(m.essential_edge));
      if (distance(on_gate, original) > kOnEdgeTol) {
        throw GeometryError("folded path leaves its gate");
      }
      pts.push_back(on_gate);
      tags.push_back(tag_for_crossing(rp, m.gate, on_gate));
    }
    if (a + 2 < pv.size()) {
      pts.push_back(rp.polygon.vertex(ub.vertex));
      tags.push_back(tag_for_vertex(rp, ub.vertex));
    }
  }

  for (const Mirror& m : sleeve.mirrors) {
    if (m.portal < 0) {
      // Mirror through the source: the source touches this gate.
      const TourTag t = tag_for_crossing(rp, m.gate, pts.front());
      if (tags.front().kind == TagKind::Moving && t.kind == TagKind::Stable) tags.front() = t;
    }
  }

  // Merge coincident consecutive points, keeping stable tags.
  std::vector<Point> cyc;
  std::vector<TourTag> ctag;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (!cyc.empty() && near(cyc.back(), pts[i], kMergeTol)) {
      if (tags[i].kind == TagKind::Stable && ctag.back().kind == TagKind::Moving) ctag.back() = tags[i];
      continue;
    }
    cyc.push_back(pts[i]);
    ctag.push_back(tags[i]);
  }
  while (cyc.size() > 1 && near(cyc.back(), cyc.front(), kMergeTol)) {
    if (ctag.back().kind == TagKind::Stable && ctag.front().kind == TagKind::Moving) ctag.front() = ctag.back();
    cyc.pop_back();
    ctag.pop_back();
  }

  tour.cycle = std::move(cyc);
  tour.tags = std::move(ctag);
  tour.length = Tour::cycle_length(tour.cycle);
  return tour;
}

}  // namespace mwt
