#pragma once

#include <map>
#include <set>
#include <vector>

#include "baext/auh.hpp"
#include "baext/machine.hpp"
#include "baext/params.hpp"
#include "baext/rs.hpp"

namespace baext::proto {

// Statistical reliable agreement: multicast a fresh key, answer every
// incoming key with the keyed hash of the own input under the joint key, and
// output the input once n-t peers (self included) hashed to the same value.
// Below kappa bits the raw value stands in for its hash.
//
// Runs only after input acquisition; earlier deliveries are buffered, and a
// hash arriving before its peer's key waits in a per-peer slot.
class SraMachine : public sim::Machine {
 public:
  SraMachine(const ProtocolParams& pp, int self)
      : pp_(pp), hp_(auh::HashParams::make(pp.lambda, pp.ell, pp.n)), self_(self), joint_(pp.n + 1) {}

  void on_event(const sim::Event& ev, sim::ActionSink& sink) override;

 private:
  void handle(const sim::Event& ev, sim::ActionSink& sink);
  Bits digest_under(uint64_t joint) const;
  void classify(int from, const Bits& digest, sim::ActionSink& sink);

  ProtocolParams pp_;
  auh::HashParams hp_;
  int self_;

  bool acquired_ = false;
  std::vector<sim::Event> backlog_;
  Bits v_;
  uint64_t key_ = 0;
  std::vector<std::optional<uint64_t>> joint_;
  std::map<int, Bits> early_hash_;  // first hash per peer, waiting for its key
  std::set<int> key_seen_, hash_seen_, matched_;
  bool output_done_ = false;
};

// Perfect reliable agreement: multicast the own indexed symbol of an
// (n, n-3t) encoding of the input, and output once n-t parties (self
// included) sent symbols matching the own encoding.
class PraMachine : public sim::Machine {
 public:
  PraMachine(const ProtocolParams& pp, int self)
      : pp_(pp), code_(rs::CodeParams::make(pp.ell, pp.n, pp.pra_k())), self_(self) {}

  void on_event(const sim::Event& ev, sim::ActionSink& sink) override;

 private:
  void handle(const sim::Event& ev, sim::ActionSink& sink);

  ProtocolParams pp_;
  rs::CodeParams code_;
  int self_;

  bool acquired_ = false;
  std::vector<sim::Event> backlog_;
  Bits v_;
  rs::Codeword enc_;
  std::set<int> seen_, matched_;
  bool output_done_ = false;
};

sim::NodeSpec sra_spec(const ProtocolParams& pp, const std::string& label = "sra");
sim::NodeSpec pra_spec(const ProtocolParams& pp, const std::string& label = "pra");

}  // namespace baext::proto
