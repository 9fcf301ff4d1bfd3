#pragma once

#include <map>
#include <set>

#include "baext/machine.hpp"
#include "baext/params.hpp"
#include "baext/rs.hpp"

namespace baext::proto {

// Terminating reconstruction over an (n, n-2t) code.
//
// Requires that a single candidate value is the only input any honest party
// can acquire (callers enforce it; auditors check it). Then:
//  - validity: honest parties only ever output the candidate,
//  - liveness: t+1 honest inputs make every honest party output,
//  - totality: one honest output forces all honest outputs.
//
// A party multicasts its own indexed symbol (MINE), sends everyone their
// indexed symbol (YOURS), echoes a MINE once t+1 parties agree on its YOURS
// symbol, reconstructs by online error correction once n-t MINE symbols are
// stored, and terminates once it holds an output and has seen YOURS traffic
// from 2t+1 distinct senders.
class RecMachine : public sim::Machine {
 public:
  RecMachine(const ProtocolParams& pp, int self)
      : pp_(pp), code_(rs::CodeParams::make(pp.ell, pp.n, pp.rec_k())), self_(self), store_(pp.n) {}

  void on_event(const sim::Event& ev, sim::ActionSink& sink) override;

  const rs::CodeParams& code() const { return code_; }

 private:
  void on_acquire(const Bits& v, sim::ActionSink& sink);
  void on_mine(int from, const sim::Payload& p, sim::ActionSink& sink);
  void on_yours(int from, const sim::Payload& p, sim::ActionSink& sink);
  void send_own_symbols(const rs::Codeword& cw, sim::ActionSink& sink);
  void try_decode(sim::ActionSink& sink);
  void maybe_finish(sim::ActionSink& sink);

  ProtocolParams pp_;
  rs::CodeParams code_;
  int self_;

  std::vector<std::optional<rs::Symbol>> store_;  // z_1..z_n
  int stored_ = 0;
  std::optional<Bits> y_;
  bool sent_mine_ = false;
  bool sent_yours_ = false;
  bool done_ = false;
  std::set<int> mine_from_;
  std::set<int> yours_senders_;
  std::map<Bits, std::set<int>> yours_value_senders_;
};

sim::NodeSpec rec_spec(const ProtocolParams& pp, const std::string& label = "rec");

}  // namespace baext::proto
