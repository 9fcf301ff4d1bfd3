#pragma once

#include <set>
#include <string>

#include "baext/machine.hpp"
#include "baext/params.hpp"

namespace baext::proto {

// The extension protocol: one crusader-agreement instance (always behind the
// intrusion wrapper), one reconstruction instance, one binary BA instance.
//
//   input          -> CA
//   CA output v*   -> REC input v*
//   CA output bot  -> multicast bot; BA input 0 (first BA input wins)
//   t+1 bots seen  -> BA input 0
//   REC output v*  -> remember it; BA input 1
//   BA output 0    -> output bot, terminate
//   BA output 1    -> output the remembered value once present, terminate
class ExtMachine : public sim::Machine {
 public:
  ExtMachine(const ProtocolParams& pp, int self) : pp_(pp), self_(self) { (void)self_; }

  void on_event(const sim::Event& ev, sim::ActionSink& sink) override;

 private:
  void ba_input(int bit, sim::ActionSink& sink);
  void try_finish(sim::ActionSink& sink);

  ProtocolParams pp_;
  int self_;

  bool acquired_ = false;
  std::optional<Bits> y_;
  bool ba_input_sent_ = false;
  bool bot_sent_ = false;
  std::set<int> bot_from_;
  std::optional<int> ba_result_;
  bool done_ = false;
};

struct ExtOptions {
  std::string ca = "ca1";     // ca1 | ca2
  std::string ba = "oracle";  // oracle | coin
};

sim::NodeSpec ext_spec(const ProtocolParams& pp, const ExtOptions& opts, const std::string& label = "ext");

}  // namespace baext::proto
