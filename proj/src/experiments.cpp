#include "slm/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "slm/oracle.hpp"

namespace slm {

namespace {

void check_common(double alpha, std::int64_t events_per_point, std::int64_t warmup) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must be in (0,1)");
  if (events_per_point < 1) throw ConfigError("events_per_point must be >= 1");
  if (warmup < 0) throw ConfigError("warmup must be >= 0");
}

// Runs warmup + events_per_point propagations and returns the counter
// deltas of the counting window.
template <std::size_t N>
std::array<std::int64_t, N> run_point(NetworkGraph& graph,
                                      const std::array<DeviceId, N>& taps,
                                      RandomStream& rng, std::int64_t warmup,
                                      std::int64_t events, const TraceSink& sink) {
  PropagationTrace trace;
  PropagationTrace* trace_ptr = sink ? &trace : nullptr;
  auto drive = [&](std::int64_t count) {
    for (std::int64_t i = 0; i < count; ++i) {
      trace.clear();
      graph.propagate(rng, trace_ptr);
      for (const TraceHop& hop : trace) sink(hop);
    }
  };
  drive(warmup);
  std::array<std::int64_t, N> before{};
  for (std::size_t i = 0; i < N; ++i) before[i] = graph.counters(taps[i]).total();
  drive(events);
  std::array<std::int64_t, N> delta{};
  for (std::size_t i = 0; i < N; ++i) delta[i] = graph.counters(taps[i]).total() - before[i];
  return delta;
}

void finish_errors(SweepResult& result) {
  double sum_sq = 0.0;
  double max_err = 0.0;
  for (const SweepPoint& p : result.points) {
    sum_sq += p.abs_error * p.abs_error;
    max_err = std::max(max_err, p.abs_error);
  }
  result.rms_error = result.points.empty() ? 0.0 : std::sqrt(sum_sq / static_cast<double>(result.points.size()));
  result.max_error = max_err;
}

}  // namespace

std::vector<double> uniform_grid_deg(double step_deg) {
  if (!(step_deg > 0.0)) throw ConfigError("grid_step_deg must be > 0");
  std::vector<double> grid;
  for (double phi = 0.0; phi < 360.0 - 1e-9; phi += step_deg) grid.push_back(phi);
  return grid;
}

SweepResult run_bs_sweep(const BsSweepOptions& options) {
  check_common(options.alpha, options.events_per_point, options.warmup);
  if (!(options.p0 >= 0.0 && options.p0 <= 1.0)) throw ConfigError("p0 must be in [0,1]");
  if (options.phi_grid_deg.empty()) throw ConfigError("phase grid is empty");

  RandomStream rng(options.seed);
  BeamSplitterNetworkConfig config;
  config.alpha = options.alpha;
  config.rule = options.rule;
  config.source.p0 = options.p0;
  config.source.randomize_angles = options.randomize_angles;
  BeamSplitterNetwork bench = build_beam_splitter_network(config, rng);

  SweepResult result;
  result.settings = RunSettings{"bs",          options.alpha, options.p0, 0.0,
                                options.events_per_point, options.seed,
                                options.grid_step_deg,    options.warmup,
                                options.rule,  0};
  result.points.reserve(options.phi_grid_deg.size());

  const std::array<DeviceId, 2> taps{bench.tap0, bench.tap1};
  for (double phi_deg : options.phi_grid_deg) {
    const double psi1_deg = options.randomize_angles ? 360.0 * rng.next_uniform()
                                                     : options.base_psi1_deg;
    const double psi0_deg = psi1_deg + phi_deg;
    SourceConfig& source = bench.graph.source();
    source.psi0 = Angle::degrees(psi0_deg);
    source.psi1 = Angle::degrees(psi1_deg);

    const auto counts = run_point(bench.graph, taps, rng, options.warmup,
                                  options.events_per_point, options.trace);
    SweepPoint point;
    point.phi_deg = phi_deg;
    point.counts = {counts[0], counts[1], 0, 0};
    point.sim_intensity = static_cast<double>(counts[0]) / static_cast<double>(counts[0] + counts[1]);
    point.theory_intensity =
        oracle::bs_intensities(options.p0, source.psi0, source.psi1)[0];
    point.abs_error = std::abs(point.sim_intensity - point.theory_intensity);
    result.points.push_back(point);
  }
  finish_errors(result);
  return result;
}

SweepResult run_mzi_sweep(const MziSweepOptions& options) {
  check_common(options.alpha, options.events_per_point, options.warmup);
  if (options.report_channel != 2 && options.report_channel != 3) {
    throw ConfigError("report_channel must be 2 or 3");
  }
  if (options.phi0_grid_deg.empty()) throw ConfigError("phase grid is empty");

  RandomStream rng(options.seed);
  MziNetworkConfig config;
  config.alpha = options.alpha;
  config.rule = options.rule;
  config.phi1 = Angle::degrees(options.phi1_deg);
  config.source.p0 = 1.0;
  config.source.randomize_angles = options.randomize_input_phase;
  MziNetwork bench = build_mzi_network(config, rng);

  // The input phase is fixed for the whole run; one draw when randomized.
  const double psi0_deg = options.randomize_input_phase ? 360.0 * rng.next_uniform()
                                                        : options.base_psi0_deg;
  bench.graph.source().psi0 = Angle::degrees(psi0_deg);

  SweepResult result;
  result.settings = RunSettings{"mzi",         options.alpha, 1.0, options.phi1_deg,
                                options.events_per_point, options.seed,
                                options.grid_step_deg,    options.warmup,
                                options.rule,  options.report_channel};
  result.points.reserve(options.phi0_grid_deg.size());

  const std::array<DeviceId, 4> taps{bench.arm_tap0, bench.arm_tap1,
                                     bench.out_tap2, bench.out_tap3};
  for (double phi0_deg : options.phi0_grid_deg) {
    bench.graph.set_phase(bench.shifter0, Angle::degrees(phi0_deg));

    const auto counts = run_point(bench.graph, taps, rng, options.warmup,
                                  options.events_per_point, options.trace);
    const auto theory = oracle::mzi_intensities(Angle::degrees(phi0_deg),
                                                Angle::degrees(options.phi1_deg));
    SweepPoint point;
    point.phi_deg = phi0_deg - options.phi1_deg;
    point.counts = counts;
    const double pair_total = static_cast<double>(counts[2] + counts[3]);
    const double i2 = static_cast<double>(counts[2]) / pair_total;
    point.sim_intensity = options.report_channel == 2 ? i2 : 1.0 - i2;
    point.theory_intensity = options.report_channel == 2 ? theory[0] : theory[1];
    point.abs_error = std::abs(point.sim_intensity - point.theory_intensity);
    result.points.push_back(point);
  }
  finish_errors(result);
  return result;
}

ScalingResult run_error_scaling(const ScalingOptions& options) {
  if (options.event_counts.empty()) throw ConfigError("event_counts is empty");
  for (std::size_t i = 0; i < options.event_counts.size(); ++i) {
    if (options.event_counts[i] < 100) throw ConfigError("event counts must be >= 100");
    if (i > 0 && options.event_counts[i] <= options.event_counts[i - 1]) {
      throw ConfigError("event counts must be strictly increasing");
    }
  }
  if (options.repetitions < 1) throw ConfigError("repetitions must be >= 1");

  ScalingResult result;
  result.options = options;
  std::uint64_t sweep_index = 0;
  for (std::int64_t events : options.event_counts) {
    double error_sum = 0.0;
    for (int rep = 0; rep < options.repetitions; ++rep, ++sweep_index) {
      BsSweepOptions sweep;
      sweep.alpha = options.alpha;
      sweep.p0 = 0.5;
      sweep.events_per_point = events;
      sweep.seed = options.seed + sweep_index;
      sweep.rule = options.rule;
      const SweepResult run = run_bs_sweep(sweep);
      double point_sum = 0.0;
      for (const SweepPoint& p : run.points) point_sum += p.abs_error;
      error_sum += point_sum / static_cast<double>(run.points.size());
    }
    result.samples.push_back(
        ScalingSample{events, error_sum / static_cast<double>(options.repetitions)});
  }

  // Least-squares line through (ln events, ln error).
  const double n = static_cast<double>(result.samples.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const ScalingSample& s : result.samples) {
    const double x = std::log(static_cast<double>(s.events_per_point));
    const double y = std::log(s.mean_abs_error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  result.slope = denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
  result.intercept = (sy - result.slope * sx) / n;
  return result;
}

VisibilityResult run_visibility_study(const VisibilityOptions& options) {
  if (options.alphas.empty()) throw ConfigError("alphas is empty");
  VisibilityResult result;
  result.options = options;
  std::uint64_t sweep_index = 0;
  for (double alpha : options.alphas) {
    BsSweepOptions sweep;
    sweep.alpha = alpha;
    sweep.p0 = 0.5;
    sweep.events_per_point = options.events_per_point;
    sweep.seed = options.seed + sweep_index++;
    sweep.rule = options.rule;
    const SweepResult run = run_bs_sweep(sweep);
    double lo = 1.0, hi = 0.0;
    for (const SweepPoint& p : run.points) {
      lo = std::min(lo, p.sim_intensity);
      hi = std::max(hi, p.sim_intensity);
    }
    result.points.push_back(VisibilityPoint{alpha, (hi - lo) / (hi + lo), hi, lo});
  }
  return result;
}

}  // namespace slm
