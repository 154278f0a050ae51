#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mwt/oracle.hpp"

namespace mwt::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write file");
  out << data;
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

std::string num(double v) {
  if (std::abs(v) < 5e-10) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

std::string pt(Point p) { return "[" + num(p.x) + ", " + num(p.y) + "]"; }

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Point read_point(const json& p, const std::string& where) {
  if (p.is_array() && p.size() == 2 && p[0].is_number() && p[1].is_number()) {
    return {p[0].get<double>(), p[1].get<double>()};
  }
  if (p.is_object() && p.contains("x") && p.contains("y") && p["x"].is_number() && p["y"].is_number()) {
    return {p["x"].get<double>(), p["y"].get<double>()};
  }
  throw InputError(where + ": expected [x, y] or {\"x\": .., \"y\": ..}");
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string cut_json(const ThetaCut& c, const char* indent) {
  std::ostringstream o;
  o << indent << "{\"vertex\": " << c.vertex_index << ", \"kind\": " << quote(lower(to_string(c.kind)))
    << ", \"color\": " << quote(lower(to_string(c.color))) << ", \"from\": " << pt(c.chord.a)
    << ", \"to\": " << pt(c.chord.b) << ", \"far_end\": " << pt(c.far_end().p)
    << ", \"far_edge\": " << c.far_end().edge << "}";
  return o.str();
}

std::string tour_json(const Tour& t, const char* indent) {
  std::ostringstream o;
  o << "[";
  for (size_t i = 0; i < t.cycle.size(); ++i) {
    const TourTag& g = t.tags[i];
    o << (i ? "," : "") << "\n" << indent << "  {\"x\": " << num(t.cycle[i].x) << ", \"y\": " << num(t.cycle[i].y);
    switch (g.kind) {
      case TagKind::Stable:
        o << ", \"kind\": \"stable\", \"vertex\": " << g.polygon_vertex;
        break;
      case TagKind::Anchor:
        o << ", \"kind\": \"anchor\", \"vertex\": " << g.polygon_vertex;
        break;
      case TagKind::Moving:
        o << ", \"kind\": \"moving\", \"gate\": " << g.gate << ", \"color\": " << quote(lower(to_string(g.color)))
          << ", \"at_far_end\": " << (g.at_far_end ? "true" : "false");
        break;
    }
    o << "}";
  }
  o << "\n" << indent << "]";
  return o.str();
}

std::string event_json(const Event& e) {
  std::ostringstream o;
  o << "{\"angle_deg\": " << num(e.angle.degrees()) << ", \"type\": " << quote(lower(to_string(e.type)))
    << ", \"witnesses\": [";
  for (size_t i = 0; i < e.witnesses.size(); ++i) o << (i ? ", " : "") << e.witnesses[i];
  o << "]}";
  return o.str();
}

PolygonDocument load_checked(const std::string& path, std::ostream& err) {
  PolygonDocument d = load_polygon(path);
  if (d.diagnostics.reversed) err << "warning: " << path << ": vertices were clockwise; reversed\n";
  if (!d.diagnostics.merged_collinear.empty()) {
    err << "warning: " << path << ": merged " << d.diagnostics.merged_collinear.size() << " collinear vertices\n";
  }
  return d;
}

void check_theta(double t) {
  if (!std::isfinite(t) || t < 0.0 || t >= 180.0) throw InputError("theta-deg must lie in [0, 180)");
}

int refuse(const std::vector<Event>& evs, double theta, std::ostream& err) {
  const Event& e = evs.front();
  char a[32], b[32];
  std::snprintf(a, sizeof a, "%.4f", normalize_degrees(e.angle.degrees() - 1e-3));
  std::snprintf(b, sizeof b, "%.4f", normalize_degrees(e.angle.degrees() + 1e-3));
  err << "error: theta " << theta << " is at a " << lower(to_string(e.type)) << " event (angle "
      << num(e.angle.degrees()) << ", vertices";
  for (int w : e.witnesses) err << " " << w;
  err << "); try " << a << " or " << b << "\n";
  return kEventAngle;
}

int refuse(const EventAngleError& e, std::ostream& err) {
  err << "error: " << lower(to_string(e.type())) << " event at theta " << num(e.theta_deg()) << ": " << e.what()
      << "; try " << num(normalize_degrees(e.theta_deg() - 1e-3)) << " or "
      << num(normalize_degrees(e.theta_deg() + 1e-3)) << "\n";
  return kEventAngle;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const EventAngleError& e) {
    return refuse(e, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace

PolygonDocument parse_polygon(const std::string& text, const std::string& origin) {
  const json j = parse_json(text, origin);
  const json* verts = nullptr;
  PolygonDocument d;
  if (j.is_object()) {
    if (j.contains("name")) {
      if (!j["name"].is_string()) throw InputError(origin + ": name must be a string");
      d.name = j["name"].get<std::string>();
    }
    if (!j.contains("vertices")) throw InputError(origin + ": missing \"vertices\"");
    verts = &j["vertices"];
  } else {
    verts = &j;
  }
  if (!verts->is_array()) throw InputError(origin + ": vertices must be an array");
  std::vector<Point> pts;
  for (size_t i = 0; i < verts->size(); ++i) {
    pts.push_back(read_point((*verts)[i], origin + ": vertex " + std::to_string(i)));
  }
  try {
    d.polygon = Polygon::from_points(pts, &d.diagnostics);
  } catch (const GeometryError& e) {
    throw InputError(origin + ": " + e.what());
  }
  return d;
}

PolygonDocument load_polygon(const std::string& path) { return parse_polygon(read_file(path), path); }

std::vector<Point> parse_tour(const std::string& text, const std::string& origin) {
  const json j = parse_json(text, origin);
  const json& list = j.is_object() && j.contains("tour") ? j["tour"] : j;
  if (!list.is_array() || list.empty()) throw InputError(origin + ": tour must be a non-empty array");
  std::vector<Point> out;
  for (size_t i = 0; i < list.size(); ++i) {
    out.push_back(read_point(list[i], origin + ": tour point " + std::to_string(i)));
  }
  return out;
}

std::vector<Event> refusing_events(const Polygon& poly, double theta_deg, double tol_deg) {
  std::vector<Event> out;
  for (const Event& e : enumerate_candidate_events(poly)) {
    if (e.type != EventType::Validity && e.type != EventType::Domination) continue;
    double d = std::abs(normalize_degrees(theta_deg) - e.angle.degrees());
    d = std::min(d, 180.0 - d);
    if (d <= tol_deg) out.push_back(e);
  }
  return out;
}

std::string solve_document(const SolveResult& r) {
  std::ostringstream o;
  o << "{\n  \"theta_deg\": " << num(r.tour.theta.degrees()) << ",\n  \"length\": " << num(r.tour.length)
    << ",\n  \"perturbed\": " << (r.perturbed ? "true" : "false") << ",\n  \"tour\": " << tour_json(r.tour, "  ")
    << ",\n  \"gates\": [";
  for (size_t i = 0; i < r.gates.size(); ++i) {
    o << (i ? "," : "") << "\n" << cut_json(r.gates[i].cut, "    ");
  }
  o << (r.gates.empty() ? "" : "\n  ") << "],\n  \"cuts\": [";
  for (size_t i = 0; i < r.cuts.size(); ++i) o << (i ? "," : "") << "\n" << cut_json(r.cuts[i], "    ");
  o << (r.cuts.empty() ? "" : "\n  ") << "]\n}\n";
  return o.str();
}

std::string sweep_document(const SweepReport& r) {
  std::ostringstream o;
  o << "{\n  \"best_theta_deg\": " << num(r.best_theta.degrees()) << ",\n  \"best_length\": " << num(r.best_length)
    << ",\n  \"best_tour\": " << tour_json(r.best_tour, "  ") << ",\n  \"events\": [";
  for (size_t i = 0; i < r.events.size(); ++i) o << (i ? "," : "") << "\n    " << event_json(r.events[i]);
  o << (r.events.empty() ? "" : "\n  ") << "],\n  \"intervals\": [";
  for (size_t i = 0; i < r.intervals.size(); ++i) {
    const IntervalReport& v = r.intervals[i];
    o << (i ? "," : "") << "\n    {\"lo_deg\": " << num(v.lo_deg) << ", \"hi_deg\": " << num(v.hi_deg)
      << ", \"best_theta_deg\": " << num(v.best_theta_deg) << ", \"best_length\": " << num(v.best_length) << "}";
  }
  o << (r.intervals.empty() ? "" : "\n  ") << "],\n  \"sample_count\": " << r.samples.size() << "\n}\n";
  return o.str();
}

std::string samples_csv(const std::vector<std::pair<double, double>>& samples) {
  std::string out = "theta_deg,length\n";
  for (const auto& [t, l] : samples) out += num(t) + "," + num(l) + "\n";
  return out;
}

std::string render_svg(const Polygon& poly, const std::vector<ThetaCut>& cuts, const std::vector<Gate>& gates,
                       const Tour& tour) {
  double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
  for (Point p : poly.vertices()) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  const double span = std::max(x1 - x0, y1 - y0);
  const double s = 560.0 / (span > 0 ? span : 1.0);
  const double w = (x1 - x0) * s + 40, h = (y1 - y0) * s + 40;
  const auto X = [&](Point p) { return num(20 + (p.x - x0) * s); };
  const auto Y = [&](Point p) { return num(20 + (y1 - p.y) * s); };
  const auto line = [&](Point a, Point b, const std::string& style) {
    return "<line x1=\"" + X(a) + "\" y1=\"" + Y(a) + "\" x2=\"" + X(b) + "\" y2=\"" + Y(b) + "\" " + style + "/>\n";
  };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h) << "\">\n";
  o << "<polygon points=\"";
  for (Point p : poly.vertices()) o << X(p) << "," << Y(p) << " ";
  o << "\" fill=\"#f3f3f3\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
  for (const ThetaCut& c : cuts) {
    o << line(c.vertex, c.far_end().p, "stroke=\"#888\" stroke-width=\"1\" stroke-dasharray=\"5,4\"");
  }
  for (const Gate& g : gates) {
    const char* col = g.cut.color == CutColor::Red ? "#c0392b" : "#2956b2";
    o << line(g.gate_vertex, g.far_point(), std::string("stroke=\"") + col + "\" stroke-width=\"3\"");
  }
  if (tour.cycle.size() > 1) {
    o << "<polygon points=\"";
    for (Point p : tour.cycle) o << X(p) << "," << Y(p) << " ";
    o << "\" fill=\"none\" stroke=\"#1e8449\" stroke-width=\"2\"/>\n";
  }
  for (size_t i = 0; i < tour.cycle.size(); ++i) {
    const Point p = tour.cycle[i];
    if (tour.tags[i].kind == TagKind::Moving) {
      o << "<circle cx=\"" << X(p) << "\" cy=\"" << Y(p) << "\" r=\"5\" fill=\"white\" stroke=\"#1e8449\"/>\n";
    } else {
      o << "<circle cx=\"" << X(p) << "\" cy=\"" << Y(p) << "\" r=\"4\" fill=\"#1e8449\"/>\n";
    }
  }
  o << "</svg>\n";
  return o.str();
}

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_theta(o.theta_deg);
    const PolygonDocument d = load_checked(o.polygon, err);
    const auto evs = refusing_events(d.polygon, o.theta_deg);
    if (!evs.empty()) return refuse(evs, o.theta_deg, err);
    const SolveResult r = solve_theta(d.polygon, Angle(o.theta_deg));
    const std::string doc = solve_document(r);
    if (o.json) {
      write_file(*o.json, doc);
      out << "length " << num(r.tour.length) << "\n";
    } else {
      out << doc;
    }
    if (o.svg) write_file(*o.svg, render_svg(d.polygon, r.cuts, r.gates, r.tour));
    return static_cast<int>(kOk);
  });
}

int cmd_optimize(const OptimizeOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PolygonDocument d = load_checked(o.polygon, err);
    SweepConfig cfg;
    if (o.config) cfg = SweepConfig::from_json(read_file(*o.config));
    const SweepReport r = optimize(d.polygon, cfg);
    const std::string doc = sweep_document(r);
    if (o.json) {
      write_file(*o.json, doc);
      out << "best_theta_deg " << num(r.best_theta.degrees()) << "\nbest_length " << num(r.best_length) << "\n";
    } else {
      out << doc;
    }
    if (o.csv) write_file(*o.csv, samples_csv(r.samples));
    if (o.svg) {
      const SolveResult s = solve_theta(d.polygon, r.best_theta);
      write_file(*o.svg, render_svg(d.polygon, s.cuts, s.gates, r.best_tour));
    }
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_theta(o.theta_deg);
    const PolygonDocument d = load_checked(o.polygon, err);
    Tour t;
    t.cycle = parse_tour(read_file(o.tour), o.tour);
    t.theta = Angle(o.theta_deg);
    t.length = Tour::cycle_length(t.cycle);
    ValidationReport rep;
    try {
      rep = validate_tour(d.polygon, t.theta, t);
    } catch (const GeometryError& e) {
      err << "invalid: " << e.what() << "\n";
      return static_cast<int>(kInvalidTour);
    }
    if (rep.valid) {
      out << "valid\n";
      return static_cast<int>(kOk);
    }
    out << "invalid: " << rep.violated_cuts.size() << " violated cut(s), max distance " << num(rep.max_violation)
        << "\n";
    for (const ThetaCut& c : rep.violated_cuts) {
      out << "  " << lower(to_string(c.color)) << " " << lower(to_string(c.kind)) << " cut at vertex "
          << c.vertex_index << " " << pt(c.vertex) << " -> " << pt(c.far_end().p) << "\n";
    }
    return static_cast<int>(kInvalidTour);
  });
}

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(o.step_deg > 0.0) || !std::isfinite(o.step_deg)) throw InputError("step-deg must be positive");
    const PolygonDocument d = load_checked(o.polygon, err);
    const auto samples = dense_sweep(d.polygon, o.step_deg);
    write_file(o.csv, samples_csv(samples));
    double best = samples.front().second, at = samples.front().first;
    for (const auto& [t, l] : samples) {
      if (l < best) {
        best = l;
        at = t;
      }
    }
    out << "samples " << samples.size() << "\nmin_length " << num(best) << " at " << num(at) << "\n";
    return static_cast<int>(kOk);
  });
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shortest watchman tours under theta-monotone visibility"};
  app.require_subcommand(1, 1);

  SolveOptions so;
  auto* solve = app.add_subcommand("solve", "Shortest tour at a fixed direction");
  solve->add_option("--polygon", so.polygon, "Polygon JSON file")->required();
  solve->add_option("--theta-deg", so.theta_deg, "Direction in degrees, [0, 180)")->required();
  solve->add_option("--svg", so.svg, "Write an SVG drawing");
  solve->add_option("--json", so.json, "Write the result document here instead of stdout");

  OptimizeOptions oo;
  auto* opt = app.add_subcommand("optimize", "Best direction by rotational sweep");
  opt->add_option("--polygon", oo.polygon, "Polygon JSON file")->required();
  opt->add_option("--config", oo.config, "Sweep configuration JSON");
  opt->add_option("--csv", oo.csv, "Write sampled (theta, length) pairs");
  opt->add_option("--svg", oo.svg, "Write an SVG of the best tour");
  opt->add_option("--json", oo.json, "Write the report here instead of stdout");

  VerifyOptions vo;
  auto* ver = app.add_subcommand("verify", "Check a tour against every cut");
  ver->add_option("--polygon", vo.polygon, "Polygon JSON file")->required();
  ver->add_option("--theta-deg", vo.theta_deg, "Direction in degrees, [0, 180)")->required();
  ver->add_option("--tour", vo.tour, "Tour JSON file")->required();

  SweepOptions wo;
  auto* swp = app.add_subcommand("sweep", "Tour length on a uniform grid of directions");
  swp->add_option("--polygon", wo.polygon, "Polygon JSON file")->required();
  swp->add_option("--step-deg", wo.step_deg, "Grid step in degrees")->required();
  swp->add_option("--csv", wo.csv, "Output CSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  if (solve->parsed()) return cmd_solve(so, out, err);
  if (opt->parsed()) return cmd_optimize(oo, out, err);
  if (ver->parsed()) return cmd_verify(vo, out, err);
  return cmd_sweep(wo, out, err);
}

}  // namespace mwt::cli
