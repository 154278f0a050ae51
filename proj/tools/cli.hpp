#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwt/geom.hpp"
#include "mwt/rotor.hpp"
#include "mwt/solver.hpp"

namespace mwt::cli {

enum ExitCode : int { kOk = 0, kBadInput = 1, kEventAngle = 2, kInvalidTour = 3 };

// Malformed or unreadable input; the message names the file and location.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PolygonDocument {
  std::string name;
  Polygon polygon;
  PolygonDiagnostics diagnostics;
};

PolygonDocument parse_polygon(const std::string& text, const std::string& origin = "<input>");
PolygonDocument load_polygon(const std::string& path);

// Accepts a solve result document, {"tour": [...]} or a bare point list.
// Points may be [x, y] pairs or objects with x and y.
std::vector<Point> parse_tour(const std::string& text, const std::string& origin = "<input>");

// Candidate events within tol_deg of theta that the CLI refuses to solve at.
std::vector<Event> refusing_events(const Polygon& poly, double theta_deg, double tol_deg = 1e-4);

std::string solve_document(const SolveResult& r);
std::string sweep_document(const SweepReport& r);
std::string samples_csv(const std::vector<std::pair<double, double>>& samples);
std::string render_svg(const Polygon& poly, const std::vector<ThetaCut>& cuts, const std::vector<Gate>& gates,
                       const Tour& tour);

struct SolveOptions {
  std::string polygon;
  double theta_deg = 0.0;
  std::optional<std::string> svg;
  std::optional<std::string> json;
};

struct OptimizeOptions {
  std::string polygon;
  std::optional<std::string> config;
  std::optional<std::string> csv;
  std::optional<std::string> svg;
  std::optional<std::string> json;
};

struct VerifyOptions {
  std::string polygon;
  double theta_deg = 0.0;
  std::string tour;
};

struct SweepOptions {
  std::string polygon;
  double step_deg = 1.0;
  std::string csv;
};

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err);
int cmd_optimize(const OptimizeOptions& o, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err);

// Parses argv and dispatches to one command.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace mwt::cli
