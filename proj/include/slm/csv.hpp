#pragma once

#include <iosfwd>
#include <string>

#include "slm/experiments.hpp"

namespace slm {

// Sweep CSV: the header
//   phi_deg,n0,n1,n2,n3,sim_intensity,theory_intensity,abs_error
// (n2, n3 left empty for beam-splitter runs), one row per point, then two
// trailing comment lines with the error summary and the configuration echo.
// Reals carry 12 significant digits; output is byte-deterministic for fixed
// inputs.
void write_csv(const SweepResult& result, std::ostream& out);
std::string csv_string(const SweepResult& result);

// events_per_point,mean_abs_error rows plus slope/config comments.
void write_csv(const ScalingResult& result, std::ostream& out);
std::string csv_string(const ScalingResult& result);

// alpha,visibility,max_intensity,min_intensity rows plus a config comment.
void write_csv(const VisibilityResult& result, std::ostream& out);
std::string csv_string(const VisibilityResult& result);

// Writes any of the above to a file. Throws std::runtime_error when the
// path cannot be opened or written.
template <typename Result>
void write_csv_file(const Result& result, const std::string& path);

}  // namespace slm
