#pragma once

#include <cstdint>

#include "slm/core.hpp"

namespace slm {

// Single-photon source. Emits on channel 0 with probability p0, carrying
// (cos psi0, sin psi0); otherwise on channel 1 carrying (cos psi1, sin psi1).
struct SourceConfig {
  double p0 = 0.5;
  Angle psi0;
  Angle psi1;
  bool randomize_angles = true;  // sweep-level per-point redraw of the angles
};

// Throws ConfigError unless 0 <= p0 <= 1.
void validate(const SourceConfig& source);

// One channel draw per call, even for the degenerate p0 = 0 or 1, so the
// draw order does not depend on the configuration.
Event emit(const SourceConfig& source, RandomStream& rng, std::uint64_t sequence);

// Plane rotation by phi; the event-level equivalent of multiplying the
// amplitude y0 + i y1 by e^{i phi}. Positive phi rotates counterclockwise.
Message rotate(const Message& m, Angle phi);

// Non-destructive event counters of a tap.
struct TapCounters {
  std::int64_t n0 = 0;
  std::int64_t n1 = 0;

  std::int64_t total() const { return n0 + n1; }
};

// Counts the event on its channel; the event itself passes through unchanged.
void tap_count(TapCounters& counters, const Event& event);

}  // namespace slm
