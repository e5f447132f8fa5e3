#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>

namespace slm {

// Absolute tolerance for the unit-norm and probability-simplex invariants.
inline constexpr double kNormTolerance = 1e-12;

// Raised when a run configuration fails validation (alpha, p0, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Plane angle. Radians internally; every external surface speaks degrees.
class Angle {
 public:
  constexpr Angle() = default;
  static constexpr Angle radians(double value) { return Angle(value); }
  static constexpr Angle degrees(double value) {
    return Angle(value * std::numbers::pi / 180.0);
  }

  constexpr double rad() const { return rad_; }
  constexpr double deg() const { return rad_ * 180.0 / std::numbers::pi; }

  constexpr Angle operator-() const { return Angle(-rad_); }
  friend constexpr Angle operator+(Angle a, Angle b) { return Angle(a.rad_ + b.rad_); }
  friend constexpr Angle operator-(Angle a, Angle b) { return Angle(a.rad_ - b.rad_); }

 private:
  constexpr explicit Angle(double value) : rad_(value) {}
  double rad_ = 0.0;
};

// The payload a photon event carries: a two-dimensional unit vector encoding
// the optical phase accumulated along the photon's path.
struct Message {
  double y0 = 1.0;
  double y1 = 0.0;

  double norm_sq() const { return y0 * y0 + y1 * y1; }
  bool is_unit(double tol = kNormTolerance) const {
    return std::abs(norm_sq() - 1.0) <= tol;
  }
};

// Builds the message (cos psi, sin psi). Angles outside one turn wrap.
Message make_message(Angle psi);

// Port index on a two-port device.
enum class Channel : int { c0 = 0, c1 = 1 };

constexpr int index(Channel c) { return static_cast<int>(c); }
constexpr Channel other(Channel c) {
  return c == Channel::c0 ? Channel::c1 : Channel::c0;
}
constexpr Channel channel_of(int i) {
  return i == 0 ? Channel::c0 : Channel::c1;
}

// One photon arrival: exactly one input channel, one message.
struct Event {
  Channel channel = Channel::c0;
  Message message;
  std::uint64_t sequence = 0;  // strictly increasing over a run
};

// Seedable uniform stream behind every stochastic choice in a run.
//
// Reproducibility contract: equal seeds give identical draw sequences. The
// engine is std::mt19937_64, which the standard pins bit-exactly, and
// next_uniform() keeps the top 53 bits of one engine step, so sequences are
// portable across platforms too.
//
// A run consumes draws in a fixed order:
//   1. machine-state initialization at network build time, in device order
//      (three draws per stochastic machine),
//   2. per data point: source angle redraw, when enabled,
//   3. per event: the source channel draw, then one output-selection draw
//      for each machine the event traverses, in propagation order.
//
// Comparisons of a draw r against a probability resolve exact equality
// (measure zero, but it matters for replay) to the channel-1 branch.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  // Next variate in [0, 1), 53-bit resolution.
  double next_uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace slm
