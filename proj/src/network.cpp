#include "slm/network.hpp"

#include <functional>

namespace slm {

std::string format_hop(const TraceHop& hop) {
  return "event=" + std::to_string(hop.event) + " device=" + std::to_string(hop.device) +
         " in=" + std::to_string(index(hop.in)) + " out=" + std::to_string(index(hop.out));
}

DeviceId NetworkGraph::add_device(Slot slot) {
  devices_.push_back(std::move(slot));
  out_edges_.emplace_back();
  in_used_.push_back({false, false});
  return static_cast<DeviceId>(devices_.size()) - 1;
}

DeviceId NetworkGraph::add_source(const SourceConfig& config) {
  slm::validate(config);
  if (source_id_) {
    throw TopologyError("network already has a source (device " +
                        std::to_string(*source_id_) + ")");
  }
  const DeviceId id = add_device(config);
  source_id_ = id;
  return id;
}

DeviceId NetworkGraph::add_beam_splitter(double alpha, RandomStream& rng, SelectRule rule) {
  return add_device(BeamSplitterSlot{init_front_end(alpha, rng), rule});
}

DeviceId NetworkGraph::add_phase_shifter(Angle phi) {
  return add_device(PhaseShifterSlot{phi});
}

DeviceId NetworkGraph::add_tap() { return add_device(TapSlot{}); }

void NetworkGraph::check_id(DeviceId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= devices_.size()) {
    throw TopologyError("unknown device id " + std::to_string(id));
  }
}

void NetworkGraph::connect(DeviceId from, Channel out, DeviceId to, Channel in) {
  check_id(from);
  check_id(to);
  auto& edge = out_edges_[static_cast<std::size_t>(from)][static_cast<std::size_t>(index(out))];
  if (edge) {
    throw TopologyError("output port " + std::to_string(index(out)) + " of device " +
                        std::to_string(from) + " is already connected");
  }
  auto& used = in_used_[static_cast<std::size_t>(to)][static_cast<std::size_t>(index(in))];
  if (used) {
    throw TopologyError("input port " + std::to_string(index(in)) + " of device " +
                        std::to_string(to) + " is already connected");
  }
  edge = PortRef{to, in};
  used = true;
}

std::size_t NetworkGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& ports : out_edges_) {
    n += (ports[0] ? 1u : 0u) + (ports[1] ? 1u : 0u);
  }
  return n;
}

DeviceKind NetworkGraph::kind(DeviceId id) const {
  check_id(id);
  const Slot& slot = devices_[static_cast<std::size_t>(id)];
  if (std::holds_alternative<SourceConfig>(slot)) return DeviceKind::source;
  if (std::holds_alternative<BeamSplitterSlot>(slot)) return DeviceKind::beam_splitter;
  if (std::holds_alternative<PhaseShifterSlot>(slot)) return DeviceKind::phase_shifter;
  return DeviceKind::tap;
}

std::size_t NetworkGraph::count_kind(DeviceKind k) const {
  std::size_t n = 0;
  for (DeviceId id = 0; static_cast<std::size_t>(id) < devices_.size(); ++id) {
    if (kind(id) == k) ++n;
  }
  return n;
}

SourceConfig& NetworkGraph::source() {
  if (!source_id_) throw TopologyError("network has no source");
  return std::get<SourceConfig>(devices_[static_cast<std::size_t>(*source_id_)]);
}

const TapCounters& NetworkGraph::counters(DeviceId tap) const {
  check_id(tap);
  const auto* slot = std::get_if<TapSlot>(&devices_[static_cast<std::size_t>(tap)]);
  if (!slot) throw TopologyError("device " + std::to_string(tap) + " is not a tap");
  return slot->counters;
}

const FrontEndState& NetworkGraph::machine_state(DeviceId beam_splitter) const {
  check_id(beam_splitter);
  const auto* slot = std::get_if<BeamSplitterSlot>(&devices_[static_cast<std::size_t>(beam_splitter)]);
  if (!slot) {
    throw TopologyError("device " + std::to_string(beam_splitter) + " is not a beam splitter");
  }
  return slot->state;
}

void NetworkGraph::set_phase(DeviceId phase_shifter, Angle phi) {
  check_id(phase_shifter);
  auto* slot = std::get_if<PhaseShifterSlot>(&devices_[static_cast<std::size_t>(phase_shifter)]);
  if (!slot) {
    throw TopologyError("device " + std::to_string(phase_shifter) + " is not a phase shifter");
  }
  slot->phi = phi;
}

void NetworkGraph::validate() const {
  if (!source_id_) throw TopologyError("network has no source");
  // Depth-first cycle check over the device graph.
  enum class Mark { unseen, active, done };
  std::vector<Mark> marks(devices_.size(), Mark::unseen);
  std::function<void(DeviceId)> visit = [&](DeviceId id) {
    auto& mark = marks[static_cast<std::size_t>(id)];
    if (mark == Mark::active) {
      throw TopologyError("network contains a cycle through device " + std::to_string(id));
    }
    if (mark == Mark::done) return;
    mark = Mark::active;
    for (const auto& edge : out_edges_[static_cast<std::size_t>(id)]) {
      if (edge) visit(edge->device);
    }
    mark = Mark::done;
  };
  for (DeviceId id = 0; static_cast<std::size_t>(id) < devices_.size(); ++id) {
    visit(id);
  }
}

TerminalHit NetworkGraph::propagate(RandomStream& rng, PropagationTrace* trace) {
  if (!source_id_) throw TopologyError("network has no source");
  const std::uint64_t sequence = next_sequence_++;
  Event event = emit(source(), rng, sequence);

  DeviceId at = *source_id_;
  Channel out_port = event.channel;
  std::size_t hops = 0;
  for (;;) {
    const auto& edge = out_edges_[static_cast<std::size_t>(at)][static_cast<std::size_t>(index(out_port))];
    if (!edge) {
      if (kind(at) == DeviceKind::tap) {
        return TerminalHit{at, out_port, event.message};
      }
      throw TopologyError("dangling output port " + std::to_string(index(out_port)) +
                          " on device " + std::to_string(at));
    }
    if (++hops > devices_.size()) {
      throw TopologyError("propagation exceeded the device count; network has a cycle");
    }
    at = edge->device;
    const Channel in_port = edge->port;
    event.channel = in_port;

    Slot& slot = devices_[static_cast<std::size_t>(at)];
    if (auto* bs = std::get_if<BeamSplitterSlot>(&slot)) {
      const RoutedMessage routed = process_event(bs->state, event, rng, bs->rule);
      out_port = routed.channel;
      event.message = routed.message;
    } else if (auto* shifter = std::get_if<PhaseShifterSlot>(&slot)) {
      event.message = rotate(event.message, shifter->phi);
      out_port = in_port;
    } else if (auto* tap = std::get_if<TapSlot>(&slot)) {
      tap_count(tap->counters, event);
      out_port = in_port;
    } else {
      throw TopologyError("source device " + std::to_string(at) + " cannot receive events");
    }
    if (trace) {
      trace->push_back(TraceHop{sequence, at, in_port, out_port});
    }
  }
}

BeamSplitterNetwork build_beam_splitter_network(const BeamSplitterNetworkConfig& config,
                                                RandomStream& rng) {
  BeamSplitterNetwork n;
  n.source = n.graph.add_source(config.source);
  n.splitter = n.graph.add_beam_splitter(config.alpha, rng, config.rule);
  n.tap0 = n.graph.add_tap();
  n.tap1 = n.graph.add_tap();
  n.graph.connect(n.source, Channel::c0, n.splitter, Channel::c0);
  n.graph.connect(n.source, Channel::c1, n.splitter, Channel::c1);
  n.graph.connect(n.splitter, Channel::c0, n.tap0, Channel::c0);
  n.graph.connect(n.splitter, Channel::c1, n.tap1, Channel::c1);
  n.graph.validate();
  return n;
}

MziNetwork build_mzi_network(const MziNetworkConfig& config, RandomStream& rng) {
  MziNetwork n;
  n.source = n.graph.add_source(config.source);
  n.splitter_in = n.graph.add_beam_splitter(config.alpha, rng, config.rule);
  n.arm_tap0 = n.graph.add_tap();
  n.arm_tap1 = n.graph.add_tap();
  n.shifter0 = n.graph.add_phase_shifter(config.phi0);
  n.shifter1 = n.graph.add_phase_shifter(config.phi1);
  n.splitter_out = n.graph.add_beam_splitter(config.alpha, rng, config.rule);
  n.out_tap2 = n.graph.add_tap();
  n.out_tap3 = n.graph.add_tap();

  n.graph.connect(n.source, Channel::c0, n.splitter_in, Channel::c0);
  n.graph.connect(n.source, Channel::c1, n.splitter_in, Channel::c1);
  // Arms carry their channel index end to end: counting tap, then phase.
  n.graph.connect(n.splitter_in, Channel::c0, n.arm_tap0, Channel::c0);
  n.graph.connect(n.arm_tap0, Channel::c0, n.shifter0, Channel::c0);
  n.graph.connect(n.shifter0, Channel::c0, n.splitter_out, Channel::c0);
  n.graph.connect(n.splitter_in, Channel::c1, n.arm_tap1, Channel::c1);
  n.graph.connect(n.arm_tap1, Channel::c1, n.shifter1, Channel::c1);
  n.graph.connect(n.shifter1, Channel::c1, n.splitter_out, Channel::c1);
  n.graph.connect(n.splitter_out, Channel::c0, n.out_tap2, Channel::c0);
  n.graph.connect(n.splitter_out, Channel::c1, n.out_tap3, Channel::c1);
  n.graph.validate();
  return n;
}

}  // namespace slm
