#include "slm/devices.hpp"

#include <cmath>

namespace slm {

void validate(const SourceConfig& source) {
  if (!(source.p0 >= 0.0 && source.p0 <= 1.0)) {
    throw ConfigError("p0 must be in [0,1]");
  }
}

Event emit(const SourceConfig& source, RandomStream& rng, std::uint64_t sequence) {
  const double u = rng.next_uniform();
  const Channel ch = u < source.p0 ? Channel::c0 : Channel::c1;
  const Angle psi = ch == Channel::c0 ? source.psi0 : source.psi1;
  return Event{ch, make_message(psi), sequence};
}

Message rotate(const Message& m, Angle phi) {
  const double c = std::cos(phi.rad());
  const double s = std::sin(phi.rad());
  return Message{m.y0 * c - m.y1 * s, m.y0 * s + m.y1 * c};
}

void tap_count(TapCounters& counters, const Event& event) {
  (event.channel == Channel::c0 ? counters.n0 : counters.n1) += 1;
}

}  // namespace slm
