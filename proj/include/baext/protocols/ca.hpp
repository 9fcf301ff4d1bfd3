#pragma once

#include <set>
#include <vector>

#include "baext/auh.hpp"
#include "baext/machine.hpp"
#include "baext/params.hpp"
#include "baext/rs.hpp"

namespace baext::proto {

// Statistical crusader agreement for t < n/3. Key/hash exchange as in SRA,
// with three peer sets: matching hashes (A), mismatching hashes (B), bot
// senders (C). t+1 mismatches trigger a bot multicast and a bot output; t+1
// bots output bot; |A u C| = n-t feeds the input into the hosted
// reconstruction instance whose output runs through the hosted SRA instance,
// whose output stands if nothing was output before.
class Ca1Machine : public sim::Machine {
 public:
  Ca1Machine(const ProtocolParams& pp, int self)
      : pp_(pp), hp_(auh::HashParams::make(pp.lambda, pp.ell, pp.n)), self_(self), joint_(pp.n + 1) {}

  void on_event(const sim::Event& ev, sim::ActionSink& sink) override;

 private:
  void handle(const sim::Event& ev, sim::ActionSink& sink);
  Bits digest_under(uint64_t joint) const;
  void classify(int from, const Bits& digest, sim::ActionSink& sink);
  void check_rec_input(sim::ActionSink& sink);
  void output_bot(sim::ActionSink& sink);

  ProtocolParams pp_;
  auh::HashParams hp_;
  int self_;

  bool acquired_ = false;
  std::vector<sim::Event> backlog_;
  Bits v_;
  uint64_t key_ = 0;
  std::vector<std::optional<uint64_t>> joint_;
  std::map<int, Bits> early_hash_;
  std::set<int> key_seen_, hash_seen_;
  std::set<int> a_, b_, c_;
  bool bot_sent_ = false;
  bool rec_input_sent_ = false;
  bool sra_input_sent_ = false;
  bool output_done_ = false;
};

// Perfect crusader agreement for t <= n/(3+eps): the input first runs through
// the hosted KCA instance; a bot result is announced (bot symbol + bot) and
// output. Otherwise the KCA output is encoded with delta = ceil(sigma(n-3t)/16)
// and the CA1 flow runs with symbols in place of hashes and PRA in place of
// SRA. A bot symbol counts as a mismatch.
class Ca2Machine : public sim::Machine {
 public:
  Ca2Machine(const ProtocolParams& pp, int self)
      : pp_(pp), code_(rs::CodeParams::make(pp.ell, pp.n, pp.delta_ca2())), self_(self) {}

  void on_event(const sim::Event& ev, sim::ActionSink& sink) override;

  const rs::CodeParams& code() const { return code_; }

 private:
  enum class Stage { PreInput, AwaitKca, Exchanging, Silenced };

  void handle(const sim::Event& ev, sim::ActionSink& sink);
  void on_kca_output(const std::optional<Bits>& z, sim::ActionSink& sink);
  void check_rec_input(sim::ActionSink& sink);
  void output_bot(sim::ActionSink& sink);

  ProtocolParams pp_;
  rs::CodeParams code_;
  int self_;

  Stage stage_ = Stage::PreInput;
  std::vector<sim::Event> backlog_;
  Bits v_, z_;
  rs::Codeword enc_;
  std::set<int> sym_seen_;
  std::set<int> a_, b_, c_;
  bool bot_sent_ = false;
  bool rec_input_sent_ = false;
  bool pra_input_sent_ = false;
  bool output_done_ = false;
};

// Intrusion-tolerance wrapper: forwards the input to the wrapped instance and
// replaces its output with bot unless it equals the own input.
class IntrusionWrapMachine : public sim::Machine {
 public:
  explicit IntrusionWrapMachine(int self) { (void)self; }

  void on_event(const sim::Event& ev, sim::ActionSink& sink) override;

 private:
  bool acquired_ = false;
  Bits v_;
  std::vector<std::optional<Bits>> early_outputs_;
  bool fired_ = false;
};

sim::NodeSpec ca1_spec(const ProtocolParams& pp, const std::string& label = "ca1");
sim::NodeSpec ca2_spec(const ProtocolParams& pp, const std::string& label = "ca2");
sim::NodeSpec intrusion_wrap_spec(sim::NodeSpec inner, const std::string& label = "ca");

}  // namespace baext::proto
