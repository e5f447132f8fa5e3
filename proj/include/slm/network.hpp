#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slm/devices.hpp"
#include "slm/machine.hpp"

namespace slm {

using DeviceId = int;

// Raised for wiring defects: dangling ports, cycles, missing source.
class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DeviceKind { source, beam_splitter, phase_shifter, tap };

// One processing hop of an event through a device.
struct TraceHop {
  std::uint64_t event = 0;
  DeviceId device = 0;
  Channel in = Channel::c0;
  Channel out = Channel::c0;
};
using PropagationTrace = std::vector<TraceHop>;

// "event=<n> device=<id> in=<ch> out=<ch>"
std::string format_hop(const TraceHop& hop);

// Where a propagation ended: the absorbing tap and what arrived there.
struct TerminalHit {
  DeviceId device = 0;
  Channel channel = Channel::c0;
  Message message;
};

// Directed two-port device graph with synchronous hop-by-hop propagation.
// Exactly one message is in flight at any instant; device state updates
// happen in hop order, so the state seen at hop h+1 reflects everything
// through hop h. Terminal sinks are taps with no outgoing edge.
class NetworkGraph {
 public:
  DeviceId add_source(const SourceConfig& config);
  // Machine state is initialized from the stream here, at build time.
  DeviceId add_beam_splitter(double alpha, RandomStream& rng,
                             SelectRule rule = SelectRule::corrected);
  DeviceId add_phase_shifter(Angle phi);
  DeviceId add_tap();

  // Wires (from, out port) -> (to, in port). Each output port carries at
  // most one edge and each input port accepts at most one.
  void connect(DeviceId from, Channel out, DeviceId to, Channel in);

  // Structural invariants: exactly one source, acyclic wiring, valid ids.
  // Port uniqueness is already enforced by connect(). Throws TopologyError.
  void validate() const;

  // Emits one event at the source and walks it device to device until an
  // absorbing tap ends the propagation. Appends one TraceHop per processing
  // device when `trace` is given.
  TerminalHit propagate(RandomStream& rng, PropagationTrace* trace = nullptr);

  std::size_t device_count() const { return devices_.size(); }
  std::size_t edge_count() const;
  DeviceKind kind(DeviceId id) const;
  std::size_t count_kind(DeviceKind kind) const;

  SourceConfig& source();
  const TapCounters& counters(DeviceId tap) const;
  const FrontEndState& machine_state(DeviceId beam_splitter) const;
  void set_phase(DeviceId phase_shifter, Angle phi);

  // Sequence number the next emitted event will carry.
  std::uint64_t next_sequence() const { return next_sequence_; }

 private:
  struct BeamSplitterSlot {
    FrontEndState state;
    SelectRule rule;
  };
  struct PhaseShifterSlot {
    Angle phi;
  };
  struct TapSlot {
    TapCounters counters;
  };
  using Slot = std::variant<SourceConfig, BeamSplitterSlot, PhaseShifterSlot, TapSlot>;

  struct PortRef {
    DeviceId device;
    Channel port;
  };

  DeviceId add_device(Slot slot);
  void check_id(DeviceId id) const;

  std::vector<Slot> devices_;
  std::vector<std::array<std::optional<PortRef>, 2>> out_edges_;
  std::vector<std::array<bool, 2>> in_used_;
  std::optional<DeviceId> source_id_;
  std::uint64_t next_sequence_ = 0;
};

// Source -> beam splitter -> two terminal taps (N0, N1).
struct BeamSplitterNetworkConfig {
  double alpha = 0.98;
  SourceConfig source;
  SelectRule rule = SelectRule::corrected;
};

struct BeamSplitterNetwork {
  NetworkGraph graph;
  DeviceId source = 0;
  DeviceId splitter = 0;
  DeviceId tap0 = 0;
  DeviceId tap1 = 0;

  std::int64_t count0() const { return graph.counters(tap0).total(); }
  std::int64_t count1() const { return graph.counters(tap1).total(); }
};

BeamSplitterNetwork build_beam_splitter_network(const BeamSplitterNetworkConfig& config,
                                                RandomStream& rng);

// Source -> BS1; each arm through a counting tap (N0, N1) and a phase
// shifter into BS2; BS2 into two terminal taps (N2, N3). One device per
// physical component of the interferometer.
struct MziNetworkConfig {
  double alpha = 0.98;
  Angle phi0;
  Angle phi1;
  SourceConfig source{1.0, Angle{}, Angle{}, true};
  SelectRule rule = SelectRule::corrected;
};

struct MziNetwork {
  NetworkGraph graph;
  DeviceId source = 0;
  DeviceId splitter_in = 0;
  DeviceId arm_tap0 = 0;
  DeviceId arm_tap1 = 0;
  DeviceId shifter0 = 0;
  DeviceId shifter1 = 0;
  DeviceId splitter_out = 0;
  DeviceId out_tap2 = 0;
  DeviceId out_tap3 = 0;

  // N0..N3
  std::array<std::int64_t, 4> counts() const {
    return {graph.counters(arm_tap0).total(), graph.counters(arm_tap1).total(),
            graph.counters(out_tap2).total(), graph.counters(out_tap3).total()};
  }
};

MziNetwork build_mzi_network(const MziNetworkConfig& config, RandomStream& rng);

}  // namespace slm
