#include <cmath>

#include <doctest.h>

#include "slm/experiments.hpp"
#include "slm/oracle.hpp"

using namespace slm;

TEST_CASE("uniform grid") {
  const auto grid = uniform_grid_deg(10.0);
  REQUIRE(grid.size() == 36);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 350.0);
  CHECK(uniform_grid_deg(90.0).size() == 4);
  CHECK_THROWS_AS(uniform_grid_deg(0.0), ConfigError);
}

TEST_CASE("bs sweep structural invariants") {
  BsSweepOptions options;
  options.events_per_point = 500;
  options.phi_grid_deg = uniform_grid_deg(30.0);
  options.grid_step_deg = 30.0;
  options.seed = 5;
  const SweepResult result = run_bs_sweep(options);
  REQUIRE(result.points.size() == 12);
  for (const SweepPoint& p : result.points) {
    CHECK(p.counts[0] + p.counts[1] == 500);
    CHECK(p.counts[2] == 0);
    CHECK(p.counts[3] == 0);
    CHECK(p.sim_intensity >= 0.0);
    CHECK(p.sim_intensity <= 1.0);
    CHECK(p.theory_intensity >= 0.0);
    CHECK(p.theory_intensity <= 1.0);
    CHECK(p.abs_error == std::abs(p.sim_intensity - p.theory_intensity));
  }
  CHECK(result.rms_error <= result.max_error);
  CHECK(result.settings.protocol == "bs");
}

TEST_CASE("bs sweep is deterministic in the seed") {
  BsSweepOptions options;
  options.events_per_point = 300;
  options.phi_grid_deg = uniform_grid_deg(45.0);
  options.seed = 9;
  const SweepResult a = run_bs_sweep(options);
  const SweepResult b = run_bs_sweep(options);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].counts == b.points[i].counts);
    CHECK(a.points[i].sim_intensity == b.points[i].sim_intensity);
  }
  options.seed = 10;
  const SweepResult c = run_bs_sweep(options);
  bool differs = false;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    differs = differs || a.points[i].counts != c.points[i].counts;
  }
  CHECK(differs);
}

TEST_CASE("bs sweep tracks the analytic intensities at alpha 0.98") {
  BsSweepOptions options;  // defaults: alpha 0.98, p0 0.5, 1e4 events, 36 points
  options.seed = 1;
  const SweepResult result = run_bs_sweep(options);
  CHECK(result.rms_error < 0.02);
}

TEST_CASE("bs sweep is flat at 0.5 for single-channel input") {
  for (double p0 : {1.0, 0.0}) {
    BsSweepOptions options;
    options.p0 = p0;
    options.seed = 1;
    const SweepResult result = run_bs_sweep(options);
    for (const SweepPoint& p : result.points) {
      CHECK(p.theory_intensity == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(std::abs(p.sim_intensity - 0.5) <= 0.02);
    }
  }
}

TEST_CASE("low alpha loses fringe contrast") {
  BsSweepOptions options;
  options.alpha = 0.25;
  options.seed = 1;
  const SweepResult result = run_bs_sweep(options);
  const SweepPoint& peak = result.points[9];  // phi = 90
  REQUIRE(peak.phi_deg == 90.0);
  CHECK(peak.sim_intensity >= 0.75);
  CHECK(peak.sim_intensity <= 0.85);
}

TEST_CASE("literal selection rule produces the complement curve") {
  BsSweepOptions options;
  options.rule = SelectRule::literal;
  options.seed = 1;
  const SweepResult result = run_bs_sweep(options);
  double sum_sq = 0.0;
  for (const SweepPoint& p : result.points) {
    const double err = p.sim_intensity - (1.0 - p.theory_intensity);
    sum_sq += err * err;
  }
  CHECK(std::sqrt(sum_sq / static_cast<double>(result.points.size())) < 0.05);
  // And, by the same token, it does not match the direct curve.
  CHECK(result.rms_error > 0.3);
}

TEST_CASE("warmup events are run but not counted") {
  BsSweepOptions options;
  options.events_per_point = 400;
  options.phi_grid_deg = uniform_grid_deg(90.0);
  options.seed = 3;
  const SweepResult plain = run_bs_sweep(options);
  options.warmup = 50;
  const SweepResult warmed = run_bs_sweep(options);
  bool differs = false;
  for (std::size_t i = 0; i < plain.points.size(); ++i) {
    CHECK(warmed.points[i].counts[0] + warmed.points[i].counts[1] == 400);
    differs = differs || warmed.points[i].counts != plain.points[i].counts;
  }
  CHECK(differs);
}

TEST_CASE("fixed-angle mode uses the configured base angle") {
  BsSweepOptions options;
  options.randomize_angles = false;
  options.base_psi1_deg = 45.0;
  options.events_per_point = 200;
  options.phi_grid_deg = {0.0, 90.0};
  options.seed = 4;
  const SweepResult result = run_bs_sweep(options);
  // Theory at phi = 90 with psi0 = 135, psi1 = 45.
  const auto expected =
      oracle::bs_intensities(0.5, Angle::degrees(135.0), Angle::degrees(45.0));
  CHECK(result.points[1].theory_intensity == doctest::Approx(expected[0]).epsilon(1e-12));
}

TEST_CASE("mzi sweep matches the interferometer law") {
  MziSweepOptions options;  // alpha 0.98, phi1 = 0, channel 2
  options.seed = 1;
  const SweepResult result = run_mzi_sweep(options);
  REQUIRE(result.points.size() == 36);
  CHECK(result.rms_error < 0.02);
  for (const SweepPoint& p : result.points) {
    CHECK(p.counts[0] + p.counts[1] == 10000);
    CHECK(p.counts[2] + p.counts[3] == 10000);
    CHECK(std::abs(p.arm_intensity() - 0.5) <= 0.02);
  }
  CHECK(result.settings.protocol == "mzi");
}

TEST_CASE("mzi sweep honors phi1 and the reported channel") {
  MziSweepOptions options;
  options.phi1_deg = 30.0;
  options.events_per_point = 400;
  options.phi0_grid_deg = {0.0, 30.0, 120.0};
  options.seed = 2;
  const SweepResult result = run_mzi_sweep(options);
  CHECK(result.points[0].phi_deg == -30.0);
  CHECK(result.points[1].phi_deg == 0.0);
  CHECK(result.points[1].theory_intensity == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(result.points[2].theory_intensity ==
        doctest::Approx(std::pow(std::sin(Angle::degrees(45.0).rad()), 2)).epsilon(1e-12));

  options.report_channel = 3;
  const SweepResult flipped = run_mzi_sweep(options);
  CHECK(flipped.points[1].theory_intensity == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(flipped.points[1].sim_intensity ==
        doctest::Approx(1.0 - result.points[1].sim_intensity).epsilon(1e-12));
}

TEST_CASE("error scaling slope is negative and deterministic") {
  ScalingOptions options;
  options.event_counts = {1000, 10000};
  options.repetitions = 2;
  options.seed = 6;
  const ScalingResult a = run_error_scaling(options);
  const ScalingResult b = run_error_scaling(options);
  REQUIRE(a.samples.size() == 2);
  CHECK(a.slope < 0.0);
  CHECK(a.slope == b.slope);
  CHECK(a.samples[0].mean_abs_error > a.samples[1].mean_abs_error);
}

TEST_CASE("scaling rejects bad event counts") {
  ScalingOptions options;
  options.event_counts = {1000, 500};
  CHECK_THROWS_AS(run_error_scaling(options), ConfigError);
  options.event_counts = {50};
  CHECK_THROWS_AS(run_error_scaling(options), ConfigError);
  options.event_counts = {};
  CHECK_THROWS_AS(run_error_scaling(options), ConfigError);
}

TEST_CASE("visibility decreases with alpha") {
  VisibilityOptions options;
  options.alphas = {0.98, 0.25};
  options.events_per_point = 10000;
  options.seed = 1;
  const VisibilityResult result = run_visibility_study(options);
  REQUIRE(result.points.size() == 2);
  CHECK(result.points[0].visibility > 0.95);
  CHECK(result.points[1].visibility >= 0.5);
  CHECK(result.points[1].visibility <= 0.7);
  CHECK(result.points[0].visibility > result.points[1].visibility);
}

TEST_CASE("sweep options are validated") {
  BsSweepOptions bs;
  bs.alpha = 1.0;
  CHECK_THROWS_AS(run_bs_sweep(bs), ConfigError);
  bs.alpha = 0.98;
  bs.p0 = 1.5;
  CHECK_THROWS_AS(run_bs_sweep(bs), ConfigError);
  bs.p0 = 0.5;
  bs.events_per_point = 0;
  CHECK_THROWS_AS(run_bs_sweep(bs), ConfigError);

  MziSweepOptions mzi;
  mzi.report_channel = 1;
  CHECK_THROWS_AS(run_mzi_sweep(mzi), ConfigError);
  mzi.report_channel = 2;
  mzi.warmup = -1;
  CHECK_THROWS_AS(run_mzi_sweep(mzi), ConfigError);
}
