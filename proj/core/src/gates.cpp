#include "mwt/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mwt {

int ReducedPolygon::gate_on_edge(int i) const {
  const int e = polygon.wrap(i);
  for (size_t k = 0; k < essential.size(); ++k) {
    if (essential[k] == e) return essential_gate[k];
  }
  return -1;
}

bool dominates(const Polygon& poly, const ThetaCut& c, const ThetaCut& other) {
  if (std::abs(c.theta.degrees() - other.theta.degrees()) > 1e-12) {
    throw GeometryError("dominance is only defined for cuts of the same direction");
  }
  const auto left_c = left_region(poly, c);
  const auto left_o = left_region(poly, other);
  for (Point p : {c.chord.a, c.chord.b, c.chord.midpoint()}) {
    if (!ring_contains(left_o, p)) return false;
  }
  return !ring_contains(left_c, other.chord.midpoint());
}

std::vector<Gate> compute_gates(const Polygon& poly, const std::vector<ThetaCut>& cuts) {
  std::vector<Gate> gates;
  for (size_t i = 0; i < cuts.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < cuts.size() && !dominated; ++j) {
      if (i != j && dominates(poly, cuts[j], cuts[i])) dominated = true;
    }
    if (dominated) continue;
    Gate g;
    g.cut = cuts[i];
    g.gate_vertex = cuts[i].vertex;
    g.gate_edge = cuts[i].far_end().edge;
    gates.push_back(g);
  }
  return gates;
}

namespace {

ReducedVertex origin_of(const Polygon& poly, const BoundaryPoint& bp, int far_gate) {
  ReducedVertex r;
  if (bp.at_vertex()) {
    r.polygon_vertex = bp.edge;
    r.reflex_in_source = poly.is_reflex(bp.edge);
  }
  r.far_of_gate = far_gate;
  return r;
}

}  // namespace

ReducedPolygon reduce_polygon(const Polygon& poly, const std::vector<Gate>& gates) {
  ReducedPolygon out;
  out.gates = gates;
  if (!gates.empty()) out.theta = gates.front().cut.theta;
  if (gates.empty()) {
    out.polygon = poly;
    for (int i = 0; i < poly.size(); ++i) {
      out.origin.push_back({i, -1, poly.is_reflex(i)});
    }
    return out;
  }

  const int n = poly.size();
  const auto cyc = [n](double x) {
    double r = std::fmod(x, static_cast<double>(n));
    if (r < 0.0) r += n;
    return r;
  };

  std::vector<size_t> order(gates.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return gates[a].cut.head.param() < gates[b].cut.head.param();
  });

  const size_t m = order.size();
  for (size_t i = 0; i < m; ++i) {
    const ThetaCut& c = gates[order[i]].cut;
    const ThetaCut& nx = gates[order[(i + 1) % m]].cut;
    const double removed = cyc(c.tail.param() - c.head.param());
    const double to_next = m == 1 ? static_cast<double>(n) : cyc(nx.head.param() - c.head.param());
    if (!(removed + 1e-12 < to_next)) {
      throw GeometryError("gate left regions overlap; the reduced polygon is empty");
    }
  }

  std::vector<Point> ring;
  const auto far_gate_of = [](const ThetaCut& c, bool tail_end, int gi) {
    const bool is_far = (c.kind == CutKind::Forward) ? !tail_end : tail_end;
    return is_far ? gi : -1;
  };

  for (size_t i = 0; i < m; ++i) {
    const int gi = static_cast<int>(order[i]);
    const int gn = static_cast<int>(order[(i + 1) % m]);
    const ThetaCut& c = gates[static_cast<size_t>(gi)].cut;
    const ThetaCut& nx = gates[static_cast<size_t>(gn)].cut;

    ring.push_back(c.tail.p);
    out.origin.push_back(origin_of(poly, c.tail, far_gate_of(c, true, gi)));

    const double u0 = c.tail.param();
    const double span = cyc(nx.head.param() - u0) + (m == 1 && nx.head.param() == u0 ? n : 0.0);
    for (int k = static_cast<int>(std::floor(u0)) + 1;; ++k) {
      const double off = cyc(k - u0);
      if (off == 0.0) continue;
      if (off >= span) break;
      ring.push_back(poly.vertex(k));
      out.origin.push_back({poly.wrap(k), -1, poly.is_reflex(k)});
    }

    ring.push_back(nx.head.p);
    out.origin.push_back(origin_of(poly, nx.head, far_gate_of(nx, false, gn)));
    out.essential.push_back(static_cast<int>(ring.size()) - 1);
    out.essential_gate.push_back(gn);
  }

  for (size_t i = 0; i < ring.size(); ++i) {
    if (near(ring[i], ring[(i + 1) % ring.size()], 1e-12)) {
      throw GeometryError("gates share an endpoint; the reduced polygon is degenerate");
    }
  }
  if (ring.size() < 3 || signed_area(ring) <= 0.0) {
    throw GeometryError("reduced polygon is degenerate");
  }
  out.polygon = Polygon::trusted(std::move(ring));
  return out;
}

}  // namespace mwt
