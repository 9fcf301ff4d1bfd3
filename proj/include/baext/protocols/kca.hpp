#pragma once

#include <set>
#include <vector>

#include "baext/machine.hpp"
#include "baext/params.hpp"
#include "baext/rs.hpp"

namespace baext::proto {

// ceil(8/sigma)-crusader agreement for t <= n/(3+eps): pairwise exchange of
// (own, yours) symbol pairs from an (n, ceil(sigma(n-3t)/5)) encoding of the
// input, success indicators once n-2t pairs match (or t+1 mismatch), output
// of the input at n-2t matched-and-successful peers, bot at t+1 negatives.
class KcaMachine : public sim::Machine {
 public:
  KcaMachine(const ProtocolParams& pp, int self)
      : pp_(pp), code_(rs::CodeParams::make(pp.ell, pp.n, pp.delta_kca())), self_(self) {}

  void on_event(const sim::Event& ev, sim::ActionSink& sink) override;

  const rs::CodeParams& code() const { return code_; }

 private:
  void handle(const sim::Event& ev, sim::ActionSink& sink);
  void check_outputs(sim::ActionSink& sink);

  ProtocolParams pp_;
  rs::CodeParams code_;
  int self_;

  bool acquired_ = false;
  std::vector<sim::Event> backlog_;
  Bits v_;
  rs::Codeword enc_;
  std::set<int> m1_, m0_, s1_, s0_;
  std::set<int> pair_seen_, suc_seen_;
  bool output_done_ = false;
};

sim::NodeSpec kca_spec(const ProtocolParams& pp, const std::string& label = "kca");

}  // namespace baext::proto
