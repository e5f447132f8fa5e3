// Command-line front-end: one subcommand per experiment protocol plus a
// self-check mode. All results are CSV on stdout or a file.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slm/csv.hpp"
#include "slm/experiments.hpp"
#include "slm/selfcheck.hpp"

namespace {

const CLI::Validator AlphaRange(
    [](std::string& s) -> std::string {
      try {
        const double v = std::stod(s);
        if (v > 0.0 && v < 1.0) return {};
      } catch (...) {
      }
      return "alpha must be in (0,1)";
    },
    "FLOAT in (0,1)");

const CLI::Validator GridStep(
    [](std::string& s) -> std::string {
      try {
        const double v = std::stod(s);
        if (v > 0.0 && v <= 360.0) return {};
      } catch (...) {
      }
      return "grid step must be in (0,360]";
    },
    "FLOAT in (0,360]");

void print_trace(const slm::TraceHop& hop) { std::cerr << slm::format_hop(hop) << '\n'; }

template <typename Result>
void emit_result(const Result& result, const std::string& path) {
  if (path == "-") {
    slm::write_csv(result, std::cout);
  } else {
    slm::write_csv_file(result, path);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Event-by-event simulator of single-photon beam-splitter and "
      "Mach-Zehnder interferometer experiments built from stochastic "
      "learning machines."};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  double alpha = 0.98;
  std::int64_t events = 10000;
  double grid_step = 10.0;
  std::int64_t warmup = 0;
  std::string out_path = "-";
  bool trace = false;
  bool literal = false;

  auto add_common = [&](CLI::App* cmd, bool sweep) {
    cmd->add_option("--alpha", alpha, "Learning control parameter")
        ->capture_default_str()
        ->check(AlphaRange);
    cmd->add_option("--seed", seed, "Random stream seed")
        ->envname("SLM_SEED")
        ->capture_default_str();
    cmd->add_option("-o,--out", out_path, "Output path; - for stdout")->capture_default_str();
    cmd->add_flag("--paper-literal-select", literal,
                  "Flip the output-selection inequality (comparison mode)");
    if (sweep) {
      cmd->add_option("-n,--events,--events-per-point", events, "Events per data point")
          ->capture_default_str()
          ->check(CLI::PositiveNumber);
      cmd->add_option("--grid-step", grid_step, "Phase grid step in degrees")
          ->capture_default_str()
          ->check(GridStep);
      cmd->add_option("--warmup", warmup, "Uncounted events before each point")
          ->capture_default_str()
          ->check(CLI::NonNegativeNumber);
      cmd->add_flag("--trace", trace, "Print one line per propagation hop to stderr");
    }
  };

  // bs
  double p0 = 0.5;
  bool fixed_angles = false;
  double psi1_deg = 0.0;
  CLI::App* bs = app.add_subcommand("bs", "Beam-splitter interference sweep");
  add_common(bs, true);
  bs->add_option("--p0", p0, "Probability of emission on input channel 0")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  bs->add_flag("--fixed-angles", fixed_angles,
               "Do not redraw the source angles per point; use --psi1 as the base");
  bs->add_option("--psi1", psi1_deg, "Base psi1 in degrees for --fixed-angles")
      ->capture_default_str();

  // mzi
  double phi1_deg = 0.0;
  int report_channel = 2;
  bool fixed_phase = false;
  double psi0_deg = 0.0;
  CLI::App* mzi = app.add_subcommand("mzi", "Mach-Zehnder interferometer sweep");
  add_common(mzi, true);
  mzi->add_option("--phi1", phi1_deg, "Fixed arm-1 phase in degrees")->capture_default_str();
  mzi->add_option("--report-channel", report_channel,
                  "Detector channel reported as sim_intensity (2 or 3)")
      ->capture_default_str()
      ->check(CLI::IsMember({2, 3}));
  mzi->add_flag("--fixed-phase", fixed_phase,
                "Do not draw the input phase; use --psi0 instead");
  mzi->add_option("--psi0", psi0_deg, "Input phase in degrees for --fixed-phase")
      ->capture_default_str();

  // scaling
  std::vector<std::int64_t> counts = {1000, 10000, 100000};
  int repetitions = 5;
  CLI::App* scaling = app.add_subcommand("scaling", "Error scaling vs events per point");
  add_common(scaling, false);
  scaling->add_option("--counts", counts, "Events-per-point values, strictly increasing")
      ->delimiter(',')
      ->capture_default_str();
  scaling->add_option("--reps", repetitions, "Sweeps averaged per value")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  // visibility
  std::vector<double> alphas = {0.98, 0.75, 0.5, 0.25};
  CLI::App* visibility =
      app.add_subcommand("visibility", "Fringe visibility vs the learning parameter");
  add_common(visibility, false);
  visibility->add_option("--alphas", alphas, "Learning parameters to sweep")
      ->delimiter(',')
      ->capture_default_str();
  visibility->add_option("-n,--events,--events-per-point", events, "Events per data point")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  // selfcheck
  int cases = 10000;
  CLI::App* selfcheck = app.add_subcommand("selfcheck", "Run the property suites");
  selfcheck->add_option("--seed", seed, "Random stream seed")
      ->envname("SLM_SEED")
      ->capture_default_str();
  selfcheck->add_option("--cases", cases, "Random cases per property")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  selfcheck->add_flag("--paper-literal-select", literal,
                      "Flip the output-selection inequality (comparison mode)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const slm::SelectRule rule =
      literal ? slm::SelectRule::literal : slm::SelectRule::corrected;
  try {
    if (bs->parsed()) {
      slm::BsSweepOptions options;
      options.alpha = alpha;
      options.p0 = p0;
      options.events_per_point = events;
      options.phi_grid_deg = slm::uniform_grid_deg(grid_step);
      options.grid_step_deg = grid_step;
      options.seed = seed;
      options.warmup = warmup;
      options.rule = rule;
      options.randomize_angles = !fixed_angles;
      options.base_psi1_deg = psi1_deg;
      if (trace) options.trace = print_trace;
      emit_result(slm::run_bs_sweep(options), out_path);
    } else if (mzi->parsed()) {
      slm::MziSweepOptions options;
      options.alpha = alpha;
      options.phi1_deg = phi1_deg;
      options.events_per_point = events;
      options.phi0_grid_deg = slm::uniform_grid_deg(grid_step);
      options.grid_step_deg = grid_step;
      options.seed = seed;
      options.warmup = warmup;
      options.rule = rule;
      options.report_channel = report_channel;
      options.randomize_input_phase = !fixed_phase;
      options.base_psi0_deg = psi0_deg;
      if (trace) options.trace = print_trace;
      emit_result(slm::run_mzi_sweep(options), out_path);
    } else if (scaling->parsed()) {
      slm::ScalingOptions options;
      options.alpha = alpha;
      options.event_counts = counts;
      options.repetitions = repetitions;
      options.seed = seed;
      options.rule = rule;
      emit_result(slm::run_error_scaling(options), out_path);
    } else if (visibility->parsed()) {
      slm::VisibilityOptions options;
      options.alphas = alphas;
      options.events_per_point = events;
      options.seed = seed;
      options.rule = rule;
      emit_result(slm::run_visibility_study(options), out_path);
    } else if (selfcheck->parsed()) {
      slm::SelfCheckOptions options;
      options.rule = rule;
      options.seed = seed;
      options.cases = cases;
      return slm::selfcheck_main(options, std::cout);
    }
  } catch (const slm::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
