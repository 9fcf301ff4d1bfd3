#include "baext/protocols/rec.hpp"

namespace baext::proto {

using sim::Payload;

void RecMachine::on_event(const sim::Event& ev, sim::ActionSink& sink) {
  if (auto* a = std::get_if<sim::AcquireEvent>(&ev)) {
    on_acquire(a->value, sink);
  } else if (auto* d = std::get_if<sim::DeliverEvent>(&ev)) {
    if (d->payload.type == sim::MsgType::Mine)
      on_mine(d->from, d->payload, sink);
    else if (d->payload.type == sim::MsgType::Yours)
      on_yours(d->from, d->payload, sink);
  }
}

void RecMachine::on_acquire(const Bits& v, sim::ActionSink& sink) {
  if (v.size() != pp_.ell) return;  // byzantine-fed garbage through a parent
  send_own_symbols(rs::encode(v, code_), sink);
}

void RecMachine::send_own_symbols(const rs::Codeword& cw, sim::ActionSink& sink) {
  if (!sent_mine_) {
    sent_mine_ = true;
    sink.multicast(Payload::mine(rs::pack_symbol(*cw[self_ - 1], code_)), code_.symbol_bits);
  }
  if (!sent_yours_) {
    sent_yours_ = true;
    for (int j = 1; j <= pp_.n; ++j)
      sink.send(j, Payload::yours(rs::pack_symbol(*cw[j - 1], code_)), code_.symbol_bits);
  }
}

void RecMachine::on_mine(int from, const Payload& p, sim::ActionSink& sink) {
  if (!mine_from_.insert(from).second) return;  // first MINE per sender counts
  if (y_) return;
  if (!p.value) return;
  auto sym = rs::unpack_symbol(*p.value, code_);
  if (!sym) return;
  if (!store_[from - 1]) ++stored_;
  store_[from - 1] = std::move(*sym);
  if (stored_ >= pp_.n - pp_.t) try_decode(sink);
}

void RecMachine::try_decode(sim::ActionSink& sink) {
  auto y = rs::decode(store_, code_);
  if (!y) return;
  auto re = rs::encode(*y, code_);
  int matches = 0;
  for (int k = 0; k < pp_.n; ++k)
    if (store_[k] && *store_[k] == *re[k]) ++matches;
  if (matches < pp_.n - pp_.t) return;
  y_ = std::move(*y);
  send_own_symbols(re, sink);
  maybe_finish(sink);
}

void RecMachine::on_yours(int from, const Payload& p, sim::ActionSink& sink) {
  yours_senders_.insert(from);
  if (p.value && int(p.value->size()) == code_.symbol_bits) {
    auto& senders = yours_value_senders_[*p.value];
    senders.insert(from);
    if (int(senders.size()) == pp_.t + 1 && !sent_mine_) {
      sent_mine_ = true;
      sink.multicast(Payload::mine(*p.value), code_.symbol_bits);
    }
  }
  maybe_finish(sink);
}

void RecMachine::maybe_finish(sim::ActionSink& sink) {
  if (done_ || !y_ || int(yours_senders_.size()) < 2 * pp_.t + 1) return;
  done_ = true;
  sink.output(y_);
  sink.terminate();
}

sim::NodeSpec rec_spec(const ProtocolParams& pp, const std::string& label) {
  return sim::NodeSpec{label, [pp](int self) { return std::make_unique<RecMachine>(pp, self); }, {}};
}

}  // namespace baext::proto
