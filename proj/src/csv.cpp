#include "slm/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace slm {

namespace {

// 12 significant digits, locale-independent.
std::string real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* rule_name(SelectRule rule) {
  return rule == SelectRule::corrected ? "corrected" : "paper-literal";
}

std::string config_echo(const RunSettings& s) {
  std::string line = "# config=protocol=" + s.protocol;
  line += " alpha=" + real(s.alpha);
  line += " p0=" + real(s.p0);
  line += " phi1_deg=" + real(s.phi1_deg);
  line += " events_per_point=" + std::to_string(s.events_per_point);
  line += " seed=" + std::to_string(s.seed);
  line += " grid_step_deg=" + real(s.grid_step_deg);
  line += " warmup=" + std::to_string(s.warmup);
  line += " select=" + std::string(rule_name(s.rule));
  line += " report_channel=" + std::to_string(s.report_channel);
  return line;
}

}  // namespace

void write_csv(const SweepResult& result, std::ostream& out) {
  const bool mzi = result.settings.protocol == "mzi";
  out << "phi_deg,n0,n1,n2,n3,sim_intensity,theory_intensity,abs_error\n";
  for (const SweepPoint& p : result.points) {
    out << real(p.phi_deg) << ',' << p.counts[0] << ',' << p.counts[1] << ',';
    if (mzi) {
      out << p.counts[2] << ',' << p.counts[3];
    } else {
      out << ',';
    }
    out << ',' << real(p.sim_intensity) << ',' << real(p.theory_intensity) << ','
        << real(p.abs_error) << '\n';
  }
  out << "# rms_error=" << real(result.rms_error)
      << " max_error=" << real(result.max_error) << '\n';
  out << config_echo(result.settings) << '\n';
}

void write_csv(const ScalingResult& result, std::ostream& out) {
  out << "events_per_point,mean_abs_error\n";
  for (const ScalingSample& s : result.samples) {
    out << s.events_per_point << ',' << real(s.mean_abs_error) << '\n';
  }
  out << "# slope=" << real(result.slope) << " intercept=" << real(result.intercept) << '\n';
  std::string counts;
  for (std::size_t i = 0; i < result.options.event_counts.size(); ++i) {
    counts += (i ? ";" : "") + std::to_string(result.options.event_counts[i]);
  }
  out << "# config=protocol=scaling alpha=" << real(result.options.alpha)
      << " event_counts=" << counts
      << " repetitions=" << result.options.repetitions
      << " seed=" << result.options.seed
      << " select=" << rule_name(result.options.rule) << '\n';
}

void write_csv(const VisibilityResult& result, std::ostream& out) {
  out << "alpha,visibility,max_intensity,min_intensity\n";
  for (const VisibilityPoint& p : result.points) {
    out << real(p.alpha) << ',' << real(p.visibility) << ',' << real(p.max_intensity)
        << ',' << real(p.min_intensity) << '\n';
  }
  out << "# config=protocol=visibility events_per_point=" << result.options.events_per_point
      << " seed=" << result.options.seed
      << " select=" << rule_name(result.options.rule) << '\n';
}

template <typename Result>
std::string csv_string_impl(const Result& result) {
  std::ostringstream out;
  write_csv(result, out);
  return out.str();
}

std::string csv_string(const SweepResult& result) { return csv_string_impl(result); }
std::string csv_string(const ScalingResult& result) { return csv_string_impl(result); }
std::string csv_string(const VisibilityResult& result) { return csv_string_impl(result); }

template <typename Result>
void write_csv_file(const Result& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_csv(result, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

template void write_csv_file<SweepResult>(const SweepResult&, const std::string&);
template void write_csv_file<ScalingResult>(const ScalingResult&, const std::string&);
template void write_csv_file<VisibilityResult>(const VisibilityResult&, const std::string&);

}  // namespace slm
