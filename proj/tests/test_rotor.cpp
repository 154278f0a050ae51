#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "mwt/rotor.hpp"

using namespace mwt;

namespace {
int count_type(const std::vector<Event>& ev, EventType t) {
  int n = 0;
  for (const Event& e : ev) n += e.type == t;
  return n;
}
}  // namespace

TEST_CASE("candidate events") {
  SUBCASE("DOUBLE validity angles") {
    const auto ev = enumerate_candidate_events(fx::dbl());
    CHECK(count_type(ev, EventType::Validity) == 4);
    int near_lo = 0, near_hi = 0;
    for (const Event& e : ev) {
      if (e.type != EventType::Validity) continue;
      near_lo += std::abs(e.angle.degrees() - fx::kValidityDeg) < 1e-9;
      near_hi += std::abs(e.angle.degrees() - (180.0 - fx::kValidityDeg)) < 1e-9;
    }
    CHECK(near_lo == 2);
    CHECK(near_hi == 2);
    // The line through both reflex vertices, slope 1/2, issues cuts of both colors.
    bool jumping = false;
    for (const Event& e : ev) {
      jumping |= e.type == EventType::Jumping && std::abs(e.angle.degrees() - std::atan(0.5) * 180.0 / kPi) < 1e-9;
    }
    CHECK(jumping);
  }
  SUBCASE("SQUARE") { CHECK(enumerate_candidate_events(fx::square()).empty()); }
  SUBCASE("UNOTCH") {
    const auto ev = enumerate_candidate_events(fx::unotch());
    CHECK(count_type(ev, EventType::Validity) == 2);
  }
  SUBCASE("sorted ascending") {
    const auto ev = enumerate_candidate_events(fx::dbl());
    for (size_t i = 1; i < ev.size(); ++i) CHECK(ev[i - 1].angle.degrees() <= ev[i].angle.degrees());
    const auto a = event_angles(ev);
    for (size_t i = 1; i < a.size(); ++i) CHECK(a[i] - a[i - 1] > 1e-9);
  }
}

TEST_CASE("evaluate_close_tour") {
  const Polygon d = fx::dbl();
  const SolveResult r = solve_theta(d, Angle(0));
  const FrozenStructure fs = freeze(d, r);
  CHECK(evaluate_close_tour(fs, 0.0) == r.tour.length);
  CHECK(evaluate_close_tour(fs, 0.5) == doctest::Approx(solve_theta(d, Angle(0.5)).tour.length).epsilon(1e-12));
  CHECK(evaluate_close_tour(fs, -0.5) == doctest::Approx(solve_theta(d, Angle(179.5)).tour.length).epsilon(1e-12));
  // Far past the jumping event the frozen structure no longer fits.
  CHECK_THROWS_AS(evaluate_close_tour(fs, 60.0), EventAngleError);
}

TEST_CASE("minimize_interval") {
  SUBCASE("SQUARE is flat zero") {
    const IntervalReport r = minimize_interval(fx::square(), 0.0, 180.0);
    CHECK(r.best_length == 0.0);
  }
  SUBCASE("DOUBLE uncolored range") {
    const IntervalReport r = minimize_interval(fx::dbl(), fx::kValidityDeg, 180.0 - fx::kValidityDeg);
    CHECK(r.best_length == 0.0);
    CHECK(r.best_theta_deg > fx::kValidityDeg);
    CHECK(r.best_theta_deg < 180.0 - fx::kValidityDeg);
  }
  SUBCASE("DOUBLE below the jumping angle is positive") {
    const double jump = std::atan(0.5) * 180.0 / kPi;
    SweepConfig cfg;
    cfg.samples_per_interval = 32;
    const IntervalReport r = minimize_interval(fx::dbl(), -(180.0 - 146.30993247402023), jump, cfg);
    CHECK(r.best_length > 0.0);
  }
  SUBCASE("narrow interval evaluates the midpoint") {
    const IntervalReport r = minimize_interval(fx::dbl(), 10.0, 10.0 + 1e-6);
    CHECK(r.best_length > 0.0);
  }
}

TEST_CASE("optimize fixtures") {
  for (const Polygon& p : {fx::square(), fx::unotch(), fx::dbl()}) {
    const SweepReport r = optimize(p);
    CHECK(r.best_length == 0.0);
    CHECK(solve_theta(p, r.best_theta).tour.length == doctest::Approx(r.best_length).epsilon(1e-7));
  }
  const SweepReport d = optimize(fx::dbl());
  // Zero range of DOUBLE runs from the jumping angle to the upper validity angle.
  CHECK(d.best_theta.degrees() > std::atan(0.5) * 180.0 / kPi);
  CHECK(d.best_theta.degrees() < 180.0 - fx::kValidityDeg);
}

TEST_CASE("optimize is deterministic") {
  const SweepReport a = optimize(fx::dbl());
  const SweepReport b = optimize(fx::dbl());
  CHECK(a.best_theta.degrees() == b.best_theta.degrees());
  CHECK(a.samples == b.samples);
}

TEST_CASE("sweep config parsing") {
  const SweepConfig c = SweepConfig::from_json(
      R"({"samples_per_interval": 16, "refine_tol_deg": 1e-5, "jump_threshold": 0.2, "grid_fallback_step_deg": 1})");
  CHECK(c.samples_per_interval == 16);
  CHECK(c.refine_tol_deg == 1e-5);
  CHECK(c.jump_threshold == 0.2);
  CHECK(c.grid_fallback_step_deg == 1.0);
  CHECK(SweepConfig::from_json("{}").samples_per_interval == 64);
  CHECK_THROWS_AS(SweepConfig::from_json(R"({"samples": 3})"), std::invalid_argument);
  CHECK_THROWS_AS(SweepConfig::from_json(R"({"samples_per_interval": 1})"), std::invalid_argument);
  CHECK_THROWS_AS(SweepConfig::from_json(R"({"refine_tol_deg": "x"})"), std::invalid_argument);
  CHECK_THROWS_AS(SweepConfig::from_json("[1, 2"), std::invalid_argument);
}
