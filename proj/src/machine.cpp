#include "slm/machine.hpp"

#include <cmath>
#include <numbers>

namespace slm {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Candidates below this norm carry no resolvable direction; the selection
// probability of such a candidate is zero up to rounding.
constexpr double kDegenerateNorm = 1e-12;

Message unit_message(const std::array<double, 2>& v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1]);
  return Message{v[0] / n, v[1] / n};
}

}  // namespace

FrontEndState init_front_end(double alpha, RandomStream& rng) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("alpha must be in (0,1)");
  }
  FrontEndState state;
  state.alpha = alpha;
  const double r = rng.next_uniform();
  state.prob = {r, 1.0 - r};
  for (auto& reg : state.stored) {
    reg = make_message(Angle::radians(2.0 * std::numbers::pi * rng.next_uniform()));
  }
  return state;
}

void update_front_end(FrontEndState& state, const Event& event) {
  const int k = index(event.channel);
  const double alpha = state.alpha;
  state.prob[0] = alpha * state.prob[0] + (k == 0 ? 1.0 - alpha : 0.0);
  state.prob[1] = alpha * state.prob[1] + (k == 1 ? 1.0 - alpha : 0.0);
  state.stored[static_cast<std::size_t>(k)] = event.message;
}

std::array<double, 2> closed_form_prob(const std::array<double, 2>& initial,
                                       std::span<const Channel> arrivals,
                                       double alpha) {
  const auto n = arrivals.size();
  const double decay = std::pow(alpha, static_cast<double>(n));
  std::array<double, 2> x{decay * initial[0], decay * initial[1]};
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (1.0 - alpha) * std::pow(alpha, static_cast<double>(n - 1 - i));
    x[static_cast<std::size_t>(index(arrivals[i]))] += w;
  }
  return x;
}

TransformOutput transform(const FrontEndState& state) {
  const double s0 = std::sqrt(state.prob[0]);
  const double s1 = std::sqrt(state.prob[1]);
  const Message& r0 = state.stored[0];
  const Message& r1 = state.stored[1];
  TransformOutput t;
  t.out0 = {kInvSqrt2 * (r0.y0 * s0 - r1.y1 * s1),
            kInvSqrt2 * (r1.y0 * s1 + r0.y1 * s0)};
  t.out1 = {kInvSqrt2 * (r1.y0 * s1 - r0.y1 * s0),
            kInvSqrt2 * (r0.y0 * s0 + r1.y1 * s1)};
  return t;
}

RoutedMessage route_output(const TransformOutput& t, double r, SelectRule rule) {
  const double w0 = t.weight0();
  // Equality resolves to channel 1 under either rule.
  Channel ch;
  if (rule == SelectRule::corrected) {
    ch = r < w0 ? Channel::c0 : Channel::c1;
  } else {
    ch = w0 < r ? Channel::c0 : Channel::c1;
  }
  const auto& candidate = ch == Channel::c0 ? t.out0 : t.out1;
  if (candidate[0] * candidate[0] + candidate[1] * candidate[1] <
      kDegenerateNorm * kDegenerateNorm) {
    ch = other(ch);
  }
  return RoutedMessage{ch, unit_message(ch == Channel::c0 ? t.out0 : t.out1)};
}

RoutedMessage select_output(const TransformOutput& t, RandomStream& rng,
                            SelectRule rule) {
  return route_output(t, rng.next_uniform(), rule);
}

RoutedMessage process_event(FrontEndState& state, const Event& event,
                            RandomStream& rng, SelectRule rule) {
  update_front_end(state, event);
  return select_output(transform(state), rng, rule);
}

}  // namespace slm
