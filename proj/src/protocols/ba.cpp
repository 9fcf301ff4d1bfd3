#include "baext/protocols/ba.hpp"

namespace baext::proto {

using sim::Payload;

// ---- oracle client ----

void OracleBaMachine::on_event(const sim::Event& ev, sim::ActionSink& sink) {
  if (auto* a = std::get_if<sim::AcquireEvent>(&ev)) {
    if (submitted_ || a->value.size() != 1) return;
    submitted_ = true;
    sink.ba_submit(a->value.get(0) ? 1 : 0);
    return;
  }
  if (auto* d = std::get_if<sim::DeliverEvent>(&ev)) {
    if (d->from != 0 || d->payload.type != sim::MsgType::BaDecide || done_) return;
    done_ = true;
    sink.output(Bits::from_u64(d->payload.num & 1, 1));
    sink.terminate();
  }
}

// ---- coin-based backend ----

void CoinBaMachine::on_event(const sim::Event& ev, sim::ActionSink& sink) {
  if (auto* a = std::get_if<sim::AcquireEvent>(&ev)) {
    if (input_ || a->value.size() != 1) return;
    input_ = a->value.get(0) ? 1 : 0;
    est_ = *input_;
    start_round(1, sink);
    return;
  }
  auto* d = std::get_if<sim::DeliverEvent>(&ev);
  if (!d || d->from < 1) return;
  int j = d->from;
  const Payload& p = d->payload;
  switch (p.type) {
    case sim::MsgType::BaBval: {
      int b = int(p.num & 1);
      int r = p.round;
      if (r < 1 || r > 10000) return;
      auto& senders = bval_senders_[{r, b}];
      if (!senders.insert(j).second) return;
      if (int(senders.size()) >= pp_.t + 1) send_bval(r, b, sink);
      if (int(senders.size()) >= 2 * pp_.t + 1 && bin_values_[r].insert(b).second) on_bin_value(r, b, sink);
      break;
    }
    case sim::MsgType::BaAux: {
      int r = p.round;
      if (r < 1 || r > 10000) return;
      auto& votes = aux_from_[r];
      if (votes.count(j)) return;
      votes[j] = int(p.num & 1);
      check_round(r, sink);
      break;
    }
    case sim::MsgType::BaDone:
      on_done(j, int(p.num & 1), sink);
      break;
    default:
      break;
  }
}

void CoinBaMachine::start_round(int r, sim::ActionSink& sink) {
  round_ = r;
  send_bval(r, est_, sink);
  // Values accepted before the round started still owe their auxiliary vote.
  if (!bin_values_[r].empty() && !aux_sent_.count(r)) {
    aux_sent_.insert(r);
    sink.multicast(Payload::ba_aux(r, *bin_values_[r].begin()), kVoteBits);
  }
  check_round(r, sink);
}

void CoinBaMachine::send_bval(int r, int b, sim::ActionSink& sink) {
  if (!bval_sent_.insert({r, b}).second) return;
  sink.multicast(Payload::ba_bval(r, b), kVoteBits);
}

void CoinBaMachine::on_bin_value(int r, int b, sim::ActionSink& sink) {
  if (round_ == r && input_ && !aux_sent_.count(r)) {
    aux_sent_.insert(r);
    sink.multicast(Payload::ba_aux(r, b), kVoteBits);
  }
  check_round(r, sink);
}

void CoinBaMachine::check_round(int r, sim::ActionSink& sink) {
  if (output_done_ || r != round_ || !input_) return;
  const auto& bins = bin_values_[r];
  if (bins.empty()) return;
  std::set<int> vals;
  int counted = 0;
  for (auto& [j, b] : aux_from_[r])
    if (bins.count(b)) {
      ++counted;
      vals.insert(b);
    }
  if (counted < pp_.n - pp_.t) return;
  int c = sink.coin(r);
  if (vals.size() == 1) {
    int b = *vals.begin();
    est_ = b;
    if (b == c && !done_sent_) {
      done_sent_ = b;
      sink.multicast(Payload::ba_done(b), 1);
    }
  } else {
    est_ = c;
  }
  start_round(r + 1, sink);
}

void CoinBaMachine::on_done(int from, int b, sim::ActionSink& sink) {
  if (!done_seen_.insert(from).second) return;
  auto& senders = done_senders_[b];
  senders.insert(from);
  if (int(senders.size()) >= pp_.t + 1 && !done_sent_) {
    done_sent_ = b;
    sink.multicast(Payload::ba_done(b), 1);
    // The own copy arrives through the network like everyone else's.
  }
  if (int(senders.size()) >= 2 * pp_.t + 1 && !output_done_) {
    output_done_ = true;
    sink.output(Bits::from_u64(uint64_t(b), 1));
    sink.terminate();
  }
}

sim::NodeSpec oracle_ba_spec(const std::string& label) {
  return sim::NodeSpec{label, [](int self) { return std::make_unique<OracleBaMachine>(self); }, {}};
}

sim::NodeSpec coin_ba_spec(const ProtocolParams& pp, const std::string& label) {
  return sim::NodeSpec{label, [pp](int self) { return std::make_unique<CoinBaMachine>(pp, self); }, {}};
}

}  // namespace baext::proto
