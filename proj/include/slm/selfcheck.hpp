#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "slm/machine.hpp"

namespace slm {

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct SelfCheckOptions {
  SelectRule rule = SelectRule::corrected;
  std::uint64_t seed = 1;
  int cases = 10000;  // random cases per property
};

// Runs every property suite and returns one result per suite. Suites:
//   x-simplex-preservation   prob stays on the simplex under any updates
//   closed-form-equivalence  iterated learning rule matches its closed form
//   norm-conservation        |out0|^2 + |out1|^2 = 1 for reachable states
//   message-unit-norm        every emitted message is a unit vector
//   rotation-inverse         rotate(rotate(m, phi), -phi) = m
//   oracle-unitarity         both analytic maps preserve total intensity
//   oracle-consistency       closed-form intensities match the amplitude path
//   mzi-count-conservation   N0+N1 = N2+N3 exactly, checked per event
//   csv-byte-identity        equal config and seed give identical CSV bytes
//   bs-theory-agreement      short sweep tracks the analytic curve (skipped
//                            under the literal selection rule, whose curve is
//                            the channel complement by design)
//
// Setting SLM_SELFCHECK_CORRUPT=<suite> in the environment forces that
// suite's tolerance to an unsatisfiable value; a hook for testing the
// failure path end to end.
std::vector<CheckResult> run_selfcheck(const SelfCheckOptions& options);

// Prints one line per suite; returns 0 iff none failed.
int selfcheck_main(const SelfCheckOptions& options, std::ostream& out);

}  // namespace slm
