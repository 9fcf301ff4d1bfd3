#pragma once

#include <map>
#include <memory>

#include "baext/adversary.hpp"
#include "baext/machine.hpp"
#include "baext/params.hpp"
#include "baext/trace.hpp"

namespace baext::sim {

struct SimConfig {
  ProtocolParams params;
  NodeSpec root;
  std::map<int, Bits> inputs;  // party -> value; acquisition timing is adversarial
  uint64_t seed = 1;
  long fairness_k = 0;  // max deferral of a deliverable event; 0 = 16 n^2
  long max_steps = 0;   // event cap; 0 = default
  int oracle_tiebreak = 0;
  // Oracle BA decides once this many parties have input (0 = every
  // currently-honest party).
  int oracle_quorum = 0;
};

// Runs one simulation to quiescence (or the event cap) under the given
// adversary. Deterministic: identical (config, adversary) yields an identical
// trace.
Trace run_simulation(const SimConfig& cfg, Adversary& adversary);

}  // namespace baext::sim
