#pragma once

#include <map>
#include <optional>
#include <set>

#include "baext/machine.hpp"
#include "baext/params.hpp"

namespace baext::proto {

// Client of the trusted-oracle binary BA backend: forwards the input bit to
// the simulator service and terminates on its decision notification. The
// oracle decides once every currently-honest party has input (validity on the
// unanimous bit, a fixed tiebreak otherwise) and notifies everyone, so
// consistency and totality hold by construction while the adversary still
// schedules the notifications.
class OracleBaMachine : public sim::Machine {
 public:
  explicit OracleBaMachine(int self) { (void)self; }

  void on_event(const sim::Event& ev, sim::ActionSink& sink) override;

 private:
  bool submitted_ = false;
  bool done_ = false;
};

// Round-based binary BA on an ideal common coin. Per round: estimates go
// through an amplify-at-t+1, accept-at-2t+1 broadcast into bin_values; one
// auxiliary vote per round; once n-t auxiliary votes land inside bin_values
// the round closes with the coin as tiebreak, deciding when the vote set is
// the singleton {coin}. Decisions echo through DONE messages: relay at t+1,
// output and terminate at 2t+1, which gives totality even for parties that
// never acquired an input. Relays and DONE handling run without an input;
// round progression waits for one.
class CoinBaMachine : public sim::Machine {
 public:
  CoinBaMachine(const ProtocolParams& pp, int self) : pp_(pp), self_(self) {}

  static constexpr int kVoteBits = 9;  // 1 estimate bit + 8-bit round tag

  void on_event(const sim::Event& ev, sim::ActionSink& sink) override;

 private:
  void start_round(int r, sim::ActionSink& sink);
  void send_bval(int r, int b, sim::ActionSink& sink);
  void on_bin_value(int r, int b, sim::ActionSink& sink);
  void check_round(int r, sim::ActionSink& sink);
  void on_done(int from, int b, sim::ActionSink& sink);

  ProtocolParams pp_;
  int self_;

  std::optional<int> input_;
  int est_ = 0;
  int round_ = 0;  // 0 = rounds not started

  std::map<std::pair<int, int>, std::set<int>> bval_senders_;  // (round, bit) -> senders
  std::set<std::pair<int, int>> bval_sent_;
  std::map<int, std::set<int>> bin_values_;      // round -> accepted bits
  std::map<int, std::map<int, int>> aux_from_;   // round -> sender -> bit
  std::set<int> aux_sent_;
  std::optional<int> done_sent_;
  std::set<int> done_seen_;
  std::map<int, std::set<int>> done_senders_;  // bit -> senders
  bool output_done_ = false;
};

sim::NodeSpec oracle_ba_spec(const std::string& label = "ba");
sim::NodeSpec coin_ba_spec(const ProtocolParams& pp, const std::string& label = "ba");

}  // namespace baext::proto
