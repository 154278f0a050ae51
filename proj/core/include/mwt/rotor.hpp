#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwt/events.hpp"
#include "mwt/geom.hpp"
#include "mwt/sleeve.hpp"
#include "mwt/solver.hpp"

namespace mwt {

struct Event {
  Angle angle;
  EventType type = EventType::Validity;
  std::vector<int> witnesses;  // polygon vertex ids
};

struct SweepConfig {
  int samples_per_interval = 64;
  double refine_tol_deg = 1e-6;
  double jump_threshold = -1.0;  // negative: 0.05 * (1 + diameter)
  double grid_fallback_step_deg = 0.5;
  double guard_deg = 1e-5;

  // Parses a flat JSON object; unknown keys and bad values throw
  // std::invalid_argument.
  static SweepConfig from_json(const std::string& text);
};

struct IntervalReport {
  double lo_deg = 0.0;  // may exceed 180 for the wraparound interval
  double hi_deg = 0.0;
  double best_theta_deg = 0.0;
  double best_length = 0.0;
  double zero_width = -1.0;     // widest run of zero-length samples, if any
  std::vector<Event> detected;  // tour-dependent events found by bisection
  std::vector<std::pair<double, double>> samples;
};

struct SweepReport {
  Angle best_theta;
  Tour best_tour;
  double best_length = 0.0;
  std::vector<Event> events;  // candidate events, then detected ones, sorted by angle
  std::vector<std::pair<double, double>> samples;  // (theta deg, length), sorted
  std::vector<IntervalReport> intervals;
};

// Validity events (with multiplicity) and reflex-vertex pair angles, sorted.
std::vector<Event> enumerate_candidate_events(const Polygon& poly);

// Distinct event angles in [0, 180), merged within 1e-9 degrees.
std::vector<double> event_angles(const std::vector<Event>& events);

// Combinatorial data that stays fixed between events.
struct FrozenStructure {
  enum class ItemKind { Stable, FarEnd, Reflect };
  struct Item {
    ItemKind kind = ItemKind::Stable;
    int vertex = -1;  // Stable: polygon vertex
    int gate = -1;    // FarEnd / Reflect: index into gates
  };
  struct FrozenGate {
    int vertex = -1;
    int edge = -1;
    CutKind kind = CutKind::Forward;
    CutColor color = CutColor::Red;
  };
  Polygon polygon;
  Angle theta;
  double length = 0.0;
  std::vector<Item> items;  // cyclic tour order
  std::vector<FrozenGate> gates;
};

FrozenStructure freeze(const Polygon& poly, const SolveResult& result);

// Length of the tour with the frozen structure at theta + eps_deg. Throws
// EventAngleError (Bending or Cuddle) when the structure is infeasible there.
double evaluate_close_tour(const FrozenStructure& fs, double eps_deg);

// Minimum of the tour length over the open interval (lo_deg, hi_deg).
IntervalReport minimize_interval(const Polygon& poly, double lo_deg, double hi_deg, const SweepConfig& cfg = {});

SweepReport optimize(const Polygon& poly, const SweepConfig& cfg = {});

// Intervals between consecutive events of a report (candidate and detected).
std::vector<std::pair<double, double>> event_free_intervals(const SweepReport& report);

// Tour length at theta; nudges by a tiny angle when theta hits an event.
double length_at(const Polygon& poly, double theta_deg);

}  // namespace mwt
