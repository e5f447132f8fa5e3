#pragma once

#include <array>
#include <span>

#include "slm/core.hpp"

namespace slm {

// Learning stage of a stochastic machine: a running estimate of the two
// channel-arrival probabilities plus the last message seen on each channel.
struct FrontEndState {
  std::array<double, 2> prob{0.5, 0.5};  // nonnegative, sums to one
  std::array<Message, 2> stored{};       // per-channel message registers
  double alpha = 0.98;                   // learning control, in (0, 1)
};

// Candidate output messages. They are generally not unit vectors; their
// squared norms sum to one and are the routing probabilities of the two
// output channels.
struct TransformOutput {
  std::array<double, 2> out0{};  // candidate for output channel 0
  std::array<double, 2> out1{};  // candidate for output channel 1

  double weight0() const { return out0[0] * out0[0] + out0[1] * out0[1]; }
  double weight1() const { return out1[0] * out1[0] + out1[1] * out1[1]; }
};

// Output-selection rule. `corrected` routes to channel 0 with probability
// |out0|^2, which reproduces the analytic beam-splitter intensities.
// `literal` flips the inequality, routing to channel 0 with probability
// 1 - |out0|^2; it exists for comparison runs (see the --paper-literal-select
// flag) and produces the channel-complement interference curve.
enum class SelectRule { corrected, literal };

struct RoutedMessage {
  Channel channel = Channel::c0;
  Message message;
};

// Fresh state: prob = (r, 1-r) with r uniform, both registers random unit
// vectors. Consumes exactly three draws. Throws ConfigError unless
// 0 < alpha < 1.
FrontEndState init_front_end(double alpha, RandomStream& rng);

// Learning rule: prob_i <- alpha * prob_i + (1-alpha) * [i == arrival channel],
// and the arrival channel's register takes the incoming message.
void update_front_end(FrontEndState& state, const Event& event);

// Closed-form value of prob after an arrival sequence k_1..k_n:
//   x_n = alpha^n x_0 + (1-alpha) * sum_{i=0}^{n-1} alpha^{n-1-i} e(k_{i+1})
// with e(k) the unit vector of channel k. Cross-checks the iterated rule.
std::array<double, 2> closed_form_prob(const std::array<double, 2>& initial,
                                       std::span<const Channel> arrivals,
                                       double alpha);

// Mixing stage: combines the registers and the probability estimate into the
// two output candidates. Acts like the beam-splitter unitary on the
// amplitudes a_k = sqrt(prob_k) e^{i psi_k} encoded by the registers.
TransformOutput transform(const FrontEndState& state);

// Routing decision for a given uniform draw r; pure, for exact-r tests.
// The selected candidate leaves renormalized to unit length. A degenerate
// candidate (norm below 1e-12) yields the other channel instead.
RoutedMessage route_output(const TransformOutput& t, double r, SelectRule rule);

// Draws r from the stream and routes.
RoutedMessage select_output(const TransformOutput& t, RandomStream& rng,
                            SelectRule rule = SelectRule::corrected);

// One full machine step: learn from the event, transform, select.
RoutedMessage process_event(FrontEndState& state, const Event& event,
                            RandomStream& rng,
                            SelectRule rule = SelectRule::corrected);

}  // namespace slm
