#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "slm/network.hpp"

namespace slm {

// One measured point of a phase sweep.
struct SweepPoint {
  double phi_deg = 0.0;                  // swept phase difference
  std::array<std::int64_t, 4> counts{};  // N0..N3; N2 = N3 = 0 for single-splitter runs
  double sim_intensity = 0.0;
  double theory_intensity = 0.0;
  double abs_error = 0.0;

  std::int64_t n(int i) const { return counts[static_cast<std::size_t>(i)]; }
  // N0/(N0+N1): the intensity on the first detector pair.
  double arm_intensity() const {
    return static_cast<double>(counts[0]) / static_cast<double>(counts[0] + counts[1]);
  }
};

// Settings echoed into every CSV so a file identifies its own run.
struct RunSettings {
  std::string protocol;  // "bs" or "mzi"
  double alpha = 0.98;
  double p0 = 0.5;
  double phi1_deg = 0.0;
  std::int64_t events_per_point = 10000;
  std::uint64_t seed = 1;
  double grid_step_deg = 10.0;
  std::int64_t warmup = 0;
  SelectRule rule = SelectRule::corrected;
  int report_channel = 0;  // numerator channel of sim_intensity
};

struct SweepResult {
  RunSettings settings;
  std::vector<SweepPoint> points;
  double rms_error = 0.0;
  double max_error = 0.0;
};

// Equally spaced grid 0, step, 2*step, ... below 360.
std::vector<double> uniform_grid_deg(double step_deg);

// Streaming consumer for --trace output; called once per hop.
using TraceSink = std::function<void(const TraceHop&)>;

// Beam-splitter sweep. For each grid value phi the source angles are set to
// psi0 - psi1 = phi (psi1 redrawn uniformly per point unless
// randomize_angles is off, in which case psi1 = base_psi1_deg), then
// events_per_point events run on one persistent network; machine state is
// never reset between points. `warmup` extra events run uncounted before
// each point's counting window. sim_intensity is N0/(N0+N1), compared
// against the analytic beam-splitter intensity.
struct BsSweepOptions {
  double alpha = 0.98;
  double p0 = 0.5;
  std::int64_t events_per_point = 10000;
  std::vector<double> phi_grid_deg = uniform_grid_deg(10.0);
  double grid_step_deg = 10.0;  // echo only; phi_grid_deg is authoritative
  std::uint64_t seed = 1;
  std::int64_t warmup = 0;
  SelectRule rule = SelectRule::corrected;
  bool randomize_angles = true;
  double base_psi1_deg = 0.0;
  TraceSink trace;
};

SweepResult run_bs_sweep(const BsSweepOptions& options);

// Interferometer sweep. Input is channel 0 only; the input phase is drawn
// once per run. phi0 walks the grid with phi1 fixed; each point records
// N0..N3 deltas. sim_intensity is N2/(N2+N3) or N3/(N2+N3) per
// report_channel, compared against the analytic interferometer intensity;
// phi_deg records the difference phi0 - phi1.
struct MziSweepOptions {
  double alpha = 0.98;
  double phi1_deg = 0.0;
  std::int64_t events_per_point = 10000;
  std::vector<double> phi0_grid_deg = uniform_grid_deg(10.0);
  double grid_step_deg = 10.0;
  std::uint64_t seed = 1;
  std::int64_t warmup = 0;
  SelectRule rule = SelectRule::corrected;
  int report_channel = 2;  // 2 or 3
  bool randomize_input_phase = true;
  double base_psi0_deg = 0.0;
  TraceSink trace;
};

SweepResult run_mzi_sweep(const MziSweepOptions& options);

// Error-scaling study: mean absolute deviation of the beam-splitter sweep
// from theory as a function of events per point, with a log-log slope fit.
// Each (events, repetition) pair runs an independent sweep with seed
// `seed + k`, k counting pairs in order.
struct ScalingOptions {
  double alpha = 0.98;
  std::vector<std::int64_t> event_counts = {1000, 10000, 100000};
  int repetitions = 5;
  std::uint64_t seed = 1;
  SelectRule rule = SelectRule::corrected;
};

struct ScalingSample {
  std::int64_t events_per_point = 0;
  double mean_abs_error = 0.0;
};

struct ScalingResult {
  ScalingOptions options;
  std::vector<ScalingSample> samples;
  double slope = 0.0;      // d ln(error) / d ln(events)
  double intercept = 0.0;  // ln(error) at ln(events) = 0
};

ScalingResult run_error_scaling(const ScalingOptions& options);

// Fringe visibility (Imax - Imin)/(Imax + Imin) of the p0 = 1/2
// beam-splitter sweep, from the sampled intensity extremes, per alpha.
// Sweep i uses seed `seed + i`.
struct VisibilityOptions {
  std::vector<double> alphas = {0.98, 0.75, 0.5, 0.25};
  std::int64_t events_per_point = 10000;
  std::uint64_t seed = 1;
  SelectRule rule = SelectRule::corrected;
};

struct VisibilityPoint {
  double alpha = 0.0;
  double visibility = 0.0;
  double max_intensity = 0.0;
  double min_intensity = 0.0;
};

struct VisibilityResult {
  VisibilityOptions options;
  std::vector<VisibilityPoint> points;
};

VisibilityResult run_visibility_study(const VisibilityOptions& options);

}  // namespace slm
