#include "mwt/rotor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace mwt {

SweepConfig SweepConfig::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("sweep config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("sweep config: expected an object");
  SweepConfig c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    const auto& v = it.value();
    if (!v.is_number()) throw std::invalid_argument("sweep config: " + k + " must be a number");
    if (k == "samples_per_interval") {
      if (!v.is_number_integer() || v.get<long long>() < 2) {
        throw std::invalid_argument("sweep config: samples_per_interval must be an integer >= 2");
      }
      c.samples_per_interval = v.get<int>();
    } else if (k == "refine_tol_deg") {
      c.refine_tol_deg = v.get<double>();
      if (!(c.refine_tol_deg > 0.0)) throw std::invalid_argument("sweep config: refine_tol_deg must be positive");
    } else if (k == "jump_threshold") {
      c.jump_threshold = v.get<double>();
      if (!(c.jump_threshold > 0.0)) throw std::invalid_argument("sweep config: jump_threshold must be positive");
    } else if (k == "grid_fallback_step_deg") {
      c.grid_fallback_step_deg = v.get<double>();
      if (!(c.grid_fallback_step_deg > 0.0)) {
        throw std::invalid_argument("sweep config: grid_fallback_step_deg must be positive");
      }
    } else {
      throw std::invalid_argument("sweep config: unknown key " + k);
    }
  }
  return c;
}

namespace {

constexpr double kEventMergeDeg = 1e-9;

double edge_angle(Point a, Point b) {
  return normalize_degrees(std::atan2(b.y - a.y, b.x - a.x) * 180.0 / kPi);
}

EventType classify_pair(const Polygon& poly, int u, int w, Angle theta) {
  const auto cls = [&](int v) {
    try {
      return classify_vertex(poly, v, theta);
    } catch (const std::exception&) {
      return VertexClass::Boundary;
    }
  };
  const VertexClass cu = cls(u);
  const VertexClass cw = cls(w);
  const bool u_col = cu == VertexClass::Red || cu == VertexClass::Blue;
  const bool w_col = cw == VertexClass::Red || cw == VertexClass::Blue;
  if (u_col && w_col) return cu == cw ? EventType::Domination : EventType::Jumping;
  return EventType::Passing;
}

}  // namespace

std::vector<Event> enumerate_candidate_events(const Polygon& poly) {
  std::vector<Event> out;
  const int n = poly.size();
  for (int u = 0; u < n; ++u) {
    if (!poly.is_reflex(u)) continue;
    const int prev = poly.wrap(u - 1);
    const int next = poly.wrap(u + 1);
    out.push_back({Angle(edge_angle(poly.vertex(prev), poly.vertex(u))), EventType::Validity, {u, prev}});
    out.push_back({Angle(edge_angle(poly.vertex(u), poly.vertex(next))), EventType::Validity, {u, next}});
  }
  for (int u = 0; u < n; ++u) {
    if (!poly.is_reflex(u)) continue;
    for (int w = 0; w < n; ++w) {
      if (w == u || w == poly.wrap(u - 1) || w == poly.wrap(u + 1)) continue;
      if (poly.is_reflex(w) && w < u) continue;  // pair already emitted from w
      if (!segment_inside(poly, poly.vertex(u), poly.vertex(w))) continue;
      const Angle a(edge_angle(poly.vertex(u), poly.vertex(w)));
      out.push_back({a, classify_pair(poly, u, w, a), {u, w}});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Event& a, const Event& b) {
    return a.angle.degrees() < b.angle.degrees();
  });
  // Drop exact repeats (same angle, type and witnesses); multiplicity of
  // distinct validity events is kept.
  std::vector<Event> dedup;
  for (const Event& e : out) {
    bool dup = false;
    for (auto it = dedup.rbegin(); it != dedup.rend(); ++it) {
      if (e.angle.degrees() - it->angle.degrees() > kEventMergeDeg) break;
      auto wa = e.witnesses;
      auto wb = it->witnesses;
      // Validity witnesses are (owner, neighbour); an edge joining two reflex
      // vertices yields one event per owner.
      if (e.type != EventType::Validity) {
        std::sort(wa.begin(), wa.end());
        std::sort(wb.begin(), wb.end());
      }
      if (it->type == e.type && wa == wb) dup = true;
    }
    if (!dup) dedup.push_back(e);
  }
  return dedup;
}

std::vector<double> event_angles(const std::vector<Event>& events) {
  std::vector<double> a;
  for (const Event& e : events) a.push_back(e.angle.degrees());
  std::sort(a.begin(), a.end());
  std::vector<double> out;
  for (double x : a) {
    if (out.empty() || x - out.back() > kEventMergeDeg) out.push_back(x);
  }
  if (out.size() > 1 && out.front() + 180.0 - out.back() <= kEventMergeDeg) out.pop_back();
  return out;
}

double length_at(const Polygon& poly, double theta_deg) {
  static constexpr double kNudges[] = {0.0, 1e-7, -1e-7, 1e-6, -1e-6, 1e-5, -1e-5};
  for (double d : kNudges) {
    try {
      return solve_theta(poly, Angle(theta_deg + d)).tour.length;
    } catch (const EventAngleError&) {
    }
  }
  throw GeometryError("no event-free angle near " + std::to_string(theta_deg));
}

// ---------------------------------------------------------------------------
// Frozen structure

FrozenStructure freeze(const Polygon& poly, const SolveResult& result) {
  FrozenStructure fs;
  fs.polygon = poly;
  fs.theta = result.tour.theta;
  fs.length = result.tour.length;
  for (const Gate& g : result.gates) {
    fs.gates.push_back({g.cut.vertex_index, g.gate_edge, g.cut.kind, g.cut.color});
  }
  for (const TourTag& t : result.tour.tags) {
    FrozenStructure::Item it;
    if (t.kind == TagKind::Moving) {
      it.kind = t.at_far_end ? FrozenStructure::ItemKind::FarEnd : FrozenStructure::ItemKind::Reflect;
      it.gate = t.gate;
    } else {
      if (t.polygon_vertex < 0 && result.tour.cycle.size() > 1) {
        throw GeometryError("tour vertex without a polygon vertex id cannot be frozen");
      }
      it.vertex = t.polygon_vertex;
    }
    fs.items.push_back(it);
  }
  return fs;
}

namespace {

struct GateNow {
  Point vertex;
  Point far;
};

GateNow rebuild_gate(const FrozenStructure& fs, const FrozenStructure::FrozenGate& g, Angle theta) {
  const Polygon& P = fs.polygon;
  const Point v = P.vertex(g.vertex);
  std::optional<Point> dir;
  for (const ThetaCut& c : compute_cuts(P, theta)) {
    if (c.vertex_index == g.vertex && c.kind == g.kind) dir = c.far_end().p - v;
  }
  if (!dir) {
    throw EventAngleError(EventType::Validity, {g.vertex}, theta.degrees(), "gate vertex lost its color");
  }
  const Segment e = P.edge(g.edge);
  const Segment ray{v, v + *dir};
  const auto hit = line_intersection(ray, e);
  if (!hit) {
    throw EventAngleError(EventType::Passing, {g.vertex}, theta.degrees(), "gate edge parallel to the cut");
  }
  const double t = segment_parameter(*hit, e);
  if (t < -1e-9 || t > 1.0 + 1e-9 || dot(*hit - v, *dir) <= 0.0) {
    throw EventAngleError(EventType::Passing, {g.vertex, g.edge}, theta.degrees(), "far end left the frozen gate edge");
  }
  return {v, *hit};
}

// Straight unrolled path a -> mirrors -> b. Returns the touch points.
std::vector<Point> reflect_run(Point a, Point b, const std::vector<Segment>& mirrors, double& len) {
  const size_t k = mirrors.size();
  // image of b through all mirrors: R_1(R_2(...R_k(b)))
  Point img = b;
  for (size_t j = k; j-- > 0;) img = reflect_point(img, mirrors[j]);
  len = distance(a, img);

  // Unrolled mirrors: U_j = R_1 ... R_{j-1}(m_j).
  std::vector<Point> touches;
  Rigid acc;  // original -> unrolled
  for (size_t j = 0; j < k; ++j) {
    const Segment u = acc.apply(mirrors[j]);
    const auto hit = line_intersection(Segment{a, img}, u);
    if (!hit) throw EventAngleError(EventType::Cuddle, {}, 0.0, "reflection path parallel to a gate");
    const double t = segment_parameter(*hit, u);
    if (t < -1e-9 || t > 1.0 + 1e-9) {
      throw EventAngleError(EventType::Cuddle, {}, 0.0, "reflection point left its gate");
    }
    touches.push_back(acc.inverse().apply(*hit));
    acc = Rigid::reflection(mirrors[j]).then(acc);
  }
  return touches;
}

}  // namespace

double evaluate_close_tour(const FrozenStructure& fs, double eps_deg) {
  if (eps_deg == 0.0) return fs.length;
  if (fs.items.size() <= 1) return 0.0;
  const Angle theta(fs.theta.degrees() + eps_deg);
  const Polygon& P = fs.polygon;

  std::vector<GateNow> gates;
  for (const auto& g : fs.gates) gates.push_back(rebuild_gate(fs, g, theta));

  const size_t n = fs.items.size();
  std::vector<std::optional<Point>> fixed(n);
  for (size_t i = 0; i < n; ++i) {
    const auto& it = fs.items[i];
    if (it.kind == FrozenStructure::ItemKind::Stable) fixed[i] = P.vertex(it.vertex);
    if (it.kind == FrozenStructure::ItemKind::FarEnd) fixed[i] = gates[static_cast<size_t>(it.gate)].far;
  }
  const auto mirror_of = [&](size_t i) {
    const GateNow& g = gates[static_cast<size_t>(fs.items[i].gate)];
    return Segment{g.vertex, g.far};
  };

  std::vector<Point> cycle(n);
  double total = 0.0;
  size_t first = n;
  for (size_t i = 0; i < n; ++i) {
    if (fixed[i]) {
      first = i;
      break;
    }
  }

  if (first == n) {
    // Closed billiard: pick the touch point on the first mirror that
    // minimizes the closed length (golden section on the mirror parameter).
    const Segment m0 = mirror_of(0);
    std::vector<Segment> rest;
    for (size_t i = 1; i < n; ++i) rest.push_back(mirror_of(i));
    const auto f = [&](double s) {
      const Point p = m0.a + s * (m0.b - m0.a);
      double l = 0.0;
      try {
        reflect_run(p, p, rest, l);
      } catch (const EventAngleError&) {
        return std::numeric_limits<double>::infinity();
      }
      return l;
    };
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0, hi = 1.0;
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - g * (hi - lo);
        f1 = f(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + g * (hi - lo);
        f2 = f(x2);
      }
    }
    const double s = 0.5 * (lo + hi);
    const Point p = m0.a + s * (m0.b - m0.a);
    cycle[0] = p;
    const auto touch = reflect_run(p, p, rest, total);
    for (size_t i = 1; i < n; ++i) cycle[i] = touch[i - 1];
  } else {
    for (size_t k = 0; k < n;) {
      const size_t i = (first + k) % n;
      cycle[i] = *fixed[i];
      size_t j = (i + 1) % n;
      size_t steps = 1;
      std::vector<Segment> mirrors;
      std::vector<size_t> slots;
      while (!fixed[j]) {
        mirrors.push_back(mirror_of(j));
        slots.push_back(j);
        j = (j + 1) % n;
        ++steps;
      }
      double l = 0.0;
      const auto touch = reflect_run(*fixed[i], *fixed[j], mirrors, l);
      for (size_t q = 0; q < slots.size(); ++q) cycle[slots[q]] = touch[q];
      total += l;
      k += steps;
    }
  }

  for (size_t i = 0; i < n; ++i) {
    const Point a = cycle[i];
    const Point b = cycle[(i + 1) % n];
    if (!segment_inside(P, a, b)) {
      throw EventAngleError(EventType::Bending, {}, theta.degrees(), "frozen tour segment left the polygon");
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Interval minimization

namespace {

struct Sample {
  double theta = 0.0;
  double length = 0.0;
  TourStructure structure;
};

Sample sample_at(const Polygon& poly, double theta_deg) {
  static constexpr double kNudges[] = {0.0, 1e-7, -1e-7, 1e-6, -1e-6};
  for (double d : kNudges) {
    try {
      const SolveResult r = solve_theta(poly, Angle(theta_deg + d));
      return {theta_deg, r.tour.length, structure_of(r)};
    } catch (const EventAngleError&) {
    }
  }
  throw GeometryError("no event-free angle near " + std::to_string(theta_deg));
}

EventType change_type(const TourStructure& a, const TourStructure& b) {
  if (a.gates != b.gates) return EventType::Domination;
  if (a.gate_edges != b.gate_edges) return EventType::Passing;
  if (a.stable != b.stable) return EventType::Bending;
  return EventType::Cuddle;
}

struct Bisected {
  Sample left;
  Sample right;
};

Bisected bisect(const Polygon& poly, Sample a, Sample b, double tol, double jump) {
  for (int it = 0; it < 80 && b.theta - a.theta > tol; ++it) {
    const Sample m = sample_at(poly, 0.5 * (a.theta + b.theta));
    const bool change_left = !(m.structure == a.structure) || std::abs(m.length - a.length) > jump;
    if (change_left) {
      b = m;
    } else {
      a = m;
    }
  }
  return {a, b};
}

}  // namespace

IntervalReport minimize_interval(const Polygon& poly, double lo_deg, double hi_deg, const SweepConfig& cfg) {
  IntervalReport rep;
  rep.lo_deg = lo_deg;
  rep.hi_deg = hi_deg;
  const double jump = cfg.jump_threshold > 0.0 ? cfg.jump_threshold : 0.05 * (1.0 + poly.diameter());
  const double lo = lo_deg + cfg.guard_deg;
  const double hi = hi_deg - cfg.guard_deg;
  if (!(hi > lo)) {
    const double mid = 0.5 * (lo_deg + hi_deg);
    rep.best_theta_deg = normalize_degrees(mid);
    rep.best_length = length_at(poly, mid);
    return rep;
  }

  const int by_step = static_cast<int>(std::ceil((hi - lo) / cfg.grid_fallback_step_deg)) + 1;
  const int count = std::max({cfg.samples_per_interval, by_step, 2});
  std::vector<Sample> s;
  s.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    s.push_back(sample_at(poly, lo + (hi - lo) * i / (count - 1)));
  }

  // Tour-dependent events: structure changes and length jumps.
  std::vector<Sample> extra;
  int budget = 256;
  for (size_t i = 0; i + 1 < s.size() && budget > 0; ++i) {
    const bool changed = !(s[i].structure == s[i + 1].structure);
    const bool jumped = std::abs(s[i].length - s[i + 1].length) > jump;
    if (!changed && !jumped) continue;
    --budget;
    const Bisected b = bisect(poly, s[i], s[i + 1], cfg.refine_tol_deg, jump);
    extra.push_back(b.left);
    extra.push_back(b.right);
    Event e;
    e.angle = Angle(0.5 * (b.left.theta + b.right.theta));
    e.type = change_type(b.left.structure, b.right.structure);
    rep.detected.push_back(e);
  }

  // Golden-section refinement around each sampled local minimum.
  std::vector<std::pair<double, double>> evals;
  for (const Sample& x : s) evals.emplace_back(x.theta, x.length);
  for (const Sample& x : extra) evals.emplace_back(x.theta, x.length);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (size_t i = 0; i < s.size(); ++i) {
    const double y = s[i].length;
    const bool left_ok = i == 0 || y <= s[i - 1].length;
    const bool right_ok = i + 1 == s.size() || y <= s[i + 1].length;
    if (!left_ok || !right_ok || y <= 0.0) continue;
    double a = s[i == 0 ? 0 : i - 1].theta;
    double b = s[i + 1 == s.size() ? i : i + 1].theta;
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = length_at(poly, x1), f2 = length_at(poly, x2);
    for (int it = 0; it < 100 && b - a > cfg.refine_tol_deg; ++it) {
      if (f1 <= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - g * (b - a);
        f1 = length_at(poly, x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + g * (b - a);
        f2 = length_at(poly, x2);
      }
    }
    evals.emplace_back(x1, f1);
    evals.emplace_back(x2, f2);
  }

  std::sort(evals.begin(), evals.end());
  double best = std::numeric_limits<double>::infinity();
  double best_theta = lo;
  for (const auto& [t, l] : evals) {
    if (l < best) {
      best = l;
      best_theta = t;
    }
  }

  if (best <= 0.0) {
    // Flat zero range: midpoint of the widest run of zero samples.
    double run_lo = 0.0, width = -1.0;
    for (size_t i = 0; i < evals.size();) {
      if (evals[i].second > 0.0) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j + 1 < evals.size() && evals[j + 1].second <= 0.0) ++j;
      if (evals[j].first - evals[i].first > width) {
        width = evals[j].first - evals[i].first;
        run_lo = evals[i].first;
      }
      i = j + 1;
    }
    best_theta = run_lo + 0.5 * width;
    best = length_at(poly, best_theta);
    if (best > 0.0) {
      // Midpoint left the run (should not happen inside an interval); fall
      // back to the run start.
      best_theta = run_lo;
      best = length_at(poly, run_lo);
    }
    rep.zero_width = width;
  }
  rep.best_theta_deg = normalize_degrees(best_theta);
  rep.best_length = best;
  rep.samples = std::move(evals);
  return rep;
}

SweepReport optimize(const Polygon& poly, const SweepConfig& cfg) {
  SweepReport rep;
  rep.events = enumerate_candidate_events(poly);
  const std::vector<double> cuts = event_angles(rep.events);

  std::vector<std::pair<double, double>> spans;
  if (cuts.empty()) {
    spans.emplace_back(0.0, 180.0);
  } else {
    for (size_t i = 0; i + 1 < cuts.size(); ++i) spans.emplace_back(cuts[i], cuts[i + 1]);
    spans.emplace_back(cuts.back(), cuts.front() + 180.0);
  }

  bool have = false;
  double best_zero_width = -1.0;
  for (const auto& [a, b] : spans) {
    IntervalReport ir = minimize_interval(poly, a, b, cfg);
    for (const auto& [t, l] : ir.samples) rep.samples.emplace_back(normalize_degrees(t), l);
    for (const Event& e : ir.detected) rep.events.push_back(e);
    const double tie = 1e-12 * (1.0 + poly.diameter());
    bool take = !have || ir.best_length < rep.best_length - tie;
    if (have && ir.best_length <= 0.0 && rep.best_length <= 0.0 && ir.zero_width > best_zero_width) take = true;
    if (take) {
      have = true;
      rep.best_length = ir.best_length;
      rep.best_theta = Angle(ir.best_theta_deg);
      if (ir.best_length <= 0.0) best_zero_width = ir.zero_width;
    }
    ir.samples.clear();
    rep.intervals.push_back(std::move(ir));
  }

  std::stable_sort(rep.events.begin(), rep.events.end(), [](const Event& x, const Event& y) {
    return x.angle.degrees() < y.angle.degrees();
  });
  std::sort(rep.samples.begin(), rep.samples.end());

  if (rep.best_length <= 0.0 && !rep.samples.empty()) {
    // Zero runs may span several intervals; take the widest one on the
    // circle of directions.
    const auto& sm = rep.samples;
    const size_t n = sm.size();
    size_t start = n;
    for (size_t i = 0; i < n; ++i) {
      if (sm[i].second > 0.0) {
        start = i;
        break;
      }
    }
    if (start == n) {
      rep.best_theta = Angle(90.0);
    } else {
      double width = -1.0, mid = rep.best_theta.degrees();
      for (size_t k = 1; k <= n;) {
        const size_t i = (start + k) % n;
        if (sm[i].second > 0.0) {
          ++k;
          continue;
        }
        size_t len = 0;
        while (k + len + 1 <= n && sm[(start + k + len + 1) % n].second <= 0.0) ++len;
        const double a = sm[i].first;
        double b = sm[(start + k + len) % n].first;
        if (b < a) b += 180.0;
        if (b - a > width) {
          width = b - a;
          mid = 0.5 * (a + b);
        }
        k += len + 1;
      }
      if (length_at(poly, mid) <= 0.0) rep.best_theta = Angle(mid);
    }
  }

  for (double d : {0.0, 1e-7, -1e-7, 1e-6, -1e-6}) {
    try {
      SolveResult r = solve_theta(poly, Angle(rep.best_theta.degrees() + d));
      rep.best_theta = Angle(rep.best_theta.degrees() + d);
      rep.best_tour = std::move(r.tour);
      break;
    } catch (const EventAngleError&) {
    }
  }
  rep.best_length = rep.best_tour.length;
  return rep;
}

std::vector<std::pair<double, double>> event_free_intervals(const SweepReport& report) {
  const std::vector<double> cuts = event_angles(report.events);
  std::vector<std::pair<double, double>> out;
  if (cuts.empty()) {
    out.emplace_back(0.0, 180.0);
    return out;
  }
  for (size_t i = 0; i + 1 < cuts.size(); ++i) out.emplace_back(cuts[i], cuts[i + 1]);
  out.emplace_back(cuts.back(), cuts.front() + 180.0);
  return out;
}

}  // namespace mwt
