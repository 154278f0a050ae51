#include "mwt/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mwt/gates.hpp"
#include "mwt/rotor.hpp"
#include "mwt/solver.hpp"

namespace mwt {

namespace {

double segment_distance(const Segment& s, const Segment& t) {
  const double d1 = orient_value(s.a, s.b, t.a);
  const double d2 = orient_value(s.a, s.b, t.b);
  const double d3 = orient_value(t.a, t.b, s.a);
  const double d4 = orient_value(t.a, t.b, s.b);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return 0.0;
  return std::min({point_segment_distance(s.a, t), point_segment_distance(s.b, t), point_segment_distance(t.a, s),
                   point_segment_distance(t.b, s)});
}

}  // namespace

ValidationReport validate_tour(const Polygon& poly, Angle theta, const Tour& tour, double tol) {
  if (tour.cycle.empty()) throw std::invalid_argument("empty tour");
  for (Point p : tour.cycle) {
    if (!poly.contains(p) && !poly.on_boundary(p, tol)) throw GeometryError("tour point outside the polygon");
  }
  ValidationReport rep;
  const auto& cyc = tour.cycle;
  for (const ThetaCut& c : compute_cuts(poly, theta)) {
    const Segment span{c.vertex, c.far_end().p};
    const auto ring = left_region(poly, c);
    bool ok = false;
    double gap = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < cyc.size() && !ok; ++i) {
      if (ring_contains(ring, cyc[i], tol)) ok = true;
      const double d = cyc.size() == 1 ? point_segment_distance(cyc[i], span)
                                       : segment_distance({cyc[i], cyc[(i + 1) % cyc.size()]}, span);
      if (d <= tol) ok = true;
      gap = std::min(gap, d);
    }
    if (!ok) {
      rep.valid = false;
      rep.violated_cuts.push_back(c);
      rep.max_violation = std::max(rep.max_violation, gap);
    }
  }
  return rep;
}

Geodesic::Geodesic(const Polygon& poly) : poly_(&poly), reflex_(poly.reflex_vertices()) {
  const size_t r = reflex_.size();
  const double inf = std::numeric_limits<double>::infinity();
  dist_.assign(r, std::vector<double>(r, inf));
  for (size_t i = 0; i < r; ++i) {
    dist_[i][i] = 0.0;
    for (size_t j = i + 1; j < r; ++j) {
      const Point a = poly.vertex(reflex_[i]);
      const Point b = poly.vertex(reflex_[j]);
      if (segment_inside(poly, a, b)) dist_[i][j] = dist_[j][i] = distance(a, b);
    }
  }
  for (size_t k = 0; k < r; ++k)
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) dist_[i][j] = std::min(dist_[i][j], dist_[i][k] + dist_[k][j]);
}

double Geodesic::operator()(Point a, Point b) const {
  if (segment_inside(*poly_, a, b)) return distance(a, b);
  const size_t r = reflex_.size();
  std::vector<double> from_a(r, std::numeric_limits<double>::infinity());
  for (size_t i = 0; i < r; ++i) {
    const Point v = poly_->vertex(reflex_[i]);
    if (segment_inside(*poly_, a, v)) from_a[i] = distance(a, v);
  }
  double best = std::numeric_limits<double>::infinity();
  for (size_t j = 0; j < r; ++j) {
    const Point v = poly_->vertex(reflex_[j]);
    if (!segment_inside(*poly_, v, b)) continue;
    const double tail = distance(v, b);
    for (size_t i = 0; i < r; ++i) best = std::min(best, from_a[i] + dist_[i][j] + tail);
  }
  return best;
}

double reference_min_tour(const Polygon& poly, Angle theta, int m) {
  if (m < 2) throw std::invalid_argument("reference_min_tour needs m >= 2");
  const std::vector<Gate> gates = compute_gates(poly, compute_cuts(poly, theta));
  const size_t G = gates.size();
  if (G > 4) throw std::invalid_argument("reference_min_tour supports at most four gates");
  if (G <= 1) return 0.0;

  const Geodesic geo(poly);
  std::vector<std::vector<Point>> layer(G);
  for (size_t g = 0; g < G; ++g) {
    const Segment s = gates[g].span();
    for (int i = 0; i < m; ++i) layer[g].push_back(s.a + (static_cast<double>(i) / (m - 1)) * (s.b - s.a));
  }
  const size_t M = static_cast<size_t>(m);
  // dist[g][h][i * M + j]
  std::vector<std::vector<std::vector<double>>> dist(G, std::vector<std::vector<double>>(G));
  const auto table = [&](size_t g, size_t h) -> const std::vector<double>& {
    auto& t = dist[g][h];
    if (t.empty()) {
      t.resize(M * M);
      for (size_t i = 0; i < M; ++i)
        for (size_t j = 0; j < M; ++j) t[i * M + j] = geo(layer[g][i], layer[h][j]);
    }
    return t;
  };

  std::vector<size_t> rest(G - 1);
  std::iota(rest.begin(), rest.end(), 1);
  double best = std::numeric_limits<double>::infinity();
  const double inf = std::numeric_limits<double>::infinity();
  do {
    std::vector<size_t> order{0};
    order.insert(order.end(), rest.begin(), rest.end());
    for (size_t s0 = 0; s0 < M; ++s0) {
      std::vector<double> cur(M, inf);
      const auto& t0 = table(order[0], order[1]);
      for (size_t j = 0; j < M; ++j) cur[j] = t0[s0 * M + j];
      for (size_t k = 1; k + 1 < G; ++k) {
        const auto& t = table(order[k], order[k + 1]);
        std::vector<double> nxt(M, inf);
        for (size_t i = 0; i < M; ++i) {
          if (cur[i] == inf) continue;
          for (size_t j = 0; j < M; ++j) nxt[j] = std::min(nxt[j], cur[i] + t[i * M + j]);
        }
        cur = std::move(nxt);
      }
      const auto& back = table(order[G - 1], order[0]);
      for (size_t i = 0; i < M; ++i) best = std::min(best, cur[i] + back[i * M + s0]);
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

std::vector<std::pair<double, double>> dense_sweep(const Polygon& poly, double step_deg) {
  if (!(step_deg > 0.0)) throw std::invalid_argument("dense_sweep needs a positive step");
  const std::vector<double> ev = event_angles(enumerate_candidate_events(poly));
  std::vector<std::pair<double, double>> out;
  const long steps = static_cast<long>(std::ceil(180.0 / step_deg - 1e-9));
  for (long k = 0; k < steps; ++k) {
    double t = k * step_deg;
    for (double e : ev) {
      if (std::abs(e - t) <= 1e-9) t += 1e-5;
    }
    double len;
    try {
      len = solve_theta(poly, Angle(t)).tour.length;
    } catch (const EventAngleError&) {
      len = solve_theta(poly, Angle(t + 1e-5)).tour.length;
    }
    out.emplace_back(k * step_deg, len);
  }
  return out;
}

Polygon random_polygon(std::mt19937_64& rng, int n_min, int n_max, double twist) {
  std::uniform_int_distribution<int> count(n_min, n_max);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    const int n = count(rng);
    std::vector<double> ang(static_cast<size_t>(n));
    for (double& a : ang) a = 2.0 * kPi * unit(rng);
    std::sort(ang.begin(), ang.end());
    bool spread = true;
    for (int i = 0; i < n; ++i) {
      const double gap = i + 1 < n ? ang[i + 1] - ang[i] : ang[0] + 2.0 * kPi - ang[i];
      if (gap < 0.02 || gap > kPi * 0.95) spread = false;
    }
    if (!spread) continue;
    std::vector<Point> pts;
    for (double a : ang) {
      const double r = twist > 0.0 ? 10.0 * (0.15 + 0.85 * unit(rng)) : 10.0 * (0.3 + 0.7 * unit(rng));
      const double phi = a + twist * r / 10.0;
      pts.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    try {
      return Polygon::from_points(pts);
    } catch (const GeometryError&) {
    }
  }
}

Polygon random_twisted_polygon(std::mt19937_64& rng, int n_min, int n_max) {
  std::uniform_real_distribution<double> tw(1.5, 3.5);
  return random_polygon(rng, n_min, n_max, tw(rng));
}

Polygon random_notched_polygon(std::mt19937_64& rng, int notches) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double W = 10.0, H = 6.0;
  for (;;) {
    // Notch slots along the x-axis, each on the top or bottom side.
    std::vector<double> xs(static_cast<size_t>(2 * notches));
    for (double& x : xs) x = 0.5 + (W - 1.0) * unit(rng);
    std::sort(xs.begin(), xs.end());
    std::vector<std::array<double, 4>> bottom, top;  // x0, x1, tip x, depth
    bool ok = true;
    for (int k = 0; k < notches; ++k) {
      const double x0 = xs[static_cast<size_t>(2 * k)], x1 = xs[static_cast<size_t>(2 * k + 1)];
      if (x1 - x0 < 0.3) ok = false;
      const double tip = x0 + (x1 - x0) * unit(rng) + (unit(rng) - 0.5) * 2.0;
      const double depth = H * (0.3 + 0.6 * unit(rng));
      (unit(rng) < 0.5 ? bottom : top).push_back({x0, x1, tip, depth});
    }
    if (!ok) continue;
    std::vector<Point> pts{{0.0, 0.0}};
    for (const auto& b : bottom) {
      pts.push_back({b[0], 0.0});
      pts.push_back({b[2], b[3]});
      pts.push_back({b[1], 0.0});
    }
    pts.push_back({W, 0.0});
    pts.push_back({W, H});
    for (auto it = top.rbegin(); it != top.rend(); ++it) {
      pts.push_back({(*it)[1], H});
      pts.push_back({(*it)[2], H - (*it)[3]});
      pts.push_back({(*it)[0], H});
    }
    pts.push_back({0.0, H});
    try {
      return Polygon::from_points(pts);
    } catch (const GeometryError&) {
    }
  }
}

std::vector<Polygon> random_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> notches(2, 3);
  std::vector<Polygon> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(i % 2 == 0 ? random_twisted_polygon(rng) : random_notched_polygon(rng, notches(rng)));
  }
  return out;
}

}  // namespace mwt
