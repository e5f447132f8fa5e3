#include "slm/oracle.hpp"

#include <cmath>

namespace slm::oracle {

namespace {
constexpr Complex kImag{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

Amplitudes input_state(double p0, Angle psi0, Angle psi1) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) {
    throw ConfigError("p0 must be in [0,1]");
  }
  return Amplitudes{std::sqrt(p0) * std::polar(1.0, psi0.rad()),
                    std::sqrt(1.0 - p0) * std::polar(1.0, psi1.rad())};
}

Amplitudes bs_amplitudes(const Amplitudes& in) {
  return Amplitudes{kInvSqrt2 * (in.a0 + kImag * in.a1),
                    kInvSqrt2 * (in.a1 + kImag * in.a0)};
}

std::array<double, 2> bs_intensities(double p0, Angle psi0, Angle psi1) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) {
    throw ConfigError("p0 must be in [0,1]");
  }
  const double cross = 2.0 * std::sqrt(p0 * (1.0 - p0)) * std::sin((psi0 - psi1).rad());
  const double i0 = 0.5 * (1.0 + cross);
  return {i0, 1.0 - i0};
}

Amplitudes mzi_amplitudes(const Amplitudes& in, Angle phi0, Angle phi1) {
  Amplitudes arms = bs_amplitudes(in);
  arms.a0 *= std::polar(1.0, phi0.rad());
  arms.a1 *= std::polar(1.0, phi1.rad());
  return bs_amplitudes(arms);
}

std::array<double, 2> mzi_intensities(Angle phi0, Angle phi1) {
  const double half = 0.5 * (phi0 - phi1).rad();
  const double s = std::sin(half);
  const double c = std::cos(half);
  return {s * s, c * c};
}

}  // namespace slm::oracle
