#pragma once

#include <array>
#include <complex>

#include "slm/core.hpp"

namespace slm::oracle {

using Complex = std::complex<double>;

// Photon mode amplitudes; |a0|^2 + |a1|^2 = 1 for a normalized state.
struct Amplitudes {
  Complex a0;
  Complex a1;

  double norm_sq() const { return std::norm(a0) + std::norm(a1); }
};

// Input state sqrt(p0) e^{i psi0} on mode 0, sqrt(1-p0) e^{i psi1} on mode 1.
// Throws ConfigError unless 0 <= p0 <= 1.
Amplitudes input_state(double p0, Angle psi0, Angle psi1);

// 50/50 beam splitter: b0 = (a0 + i a1)/sqrt(2), b1 = (a1 + i a0)/sqrt(2).
Amplitudes bs_amplitudes(const Amplitudes& in);

// Beam-splitter output intensities for the input_state family, in closed
// form:
//   |b0|^2 = (1 + 2 sqrt(p0 (1-p0)) sin(psi0 - psi1)) / 2,
//   |b1|^2 = 1 - |b0|^2.
// Agrees with |bs_amplitudes(input_state(...))|^2 to double precision.
std::array<double, 2> bs_intensities(double p0, Angle psi0, Angle psi1);

// Mach-Zehnder interferometer: beam splitter, per-arm phase factors
// (e^{i phi0}, e^{i phi1}), beam splitter.
Amplitudes mzi_amplitudes(const Amplitudes& in, Angle phi0, Angle phi1);

// Interferometer output intensities for a photon entering on mode 0 only:
//   (sin^2((phi0 - phi1)/2), cos^2((phi0 - phi1)/2)),
// independent of the input phase.
std::array<double, 2> mzi_intensities(Angle phi0, Angle phi1);

}  // namespace slm::oracle
