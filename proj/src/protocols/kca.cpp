#include "baext/protocols/kca.hpp"

namespace baext::proto {

using sim::Payload;

void KcaMachine::on_event(const sim::Event& ev, sim::ActionSink& sink) {
  if (auto* a = std::get_if<sim::AcquireEvent>(&ev)) {
    if (acquired_ || a->value.size() != pp_.ell) return;
    acquired_ = true;
    v_ = a->value;
    enc_ = rs::encode(v_, code_);
    for (int j = 1; j <= pp_.n; ++j)
      sink.send(j,
                Payload::sym_pair(rs::pack_symbol(*enc_[self_ - 1], code_), rs::pack_symbol(*enc_[j - 1], code_)),
                2 * code_.symbol_bits);
    auto backlog = std::move(backlog_);
    backlog_.clear();
    for (const auto& e : backlog) handle(e, sink);
    return;
  }
  if (!acquired_) {
    backlog_.push_back(ev);
    return;
  }
  handle(ev, sink);
}

void KcaMachine::handle(const sim::Event& ev, sim::ActionSink& sink) {
  auto* d = std::get_if<sim::DeliverEvent>(&ev);
  if (!d || d->from < 1) return;
  int j = d->from;
  const Payload& p = d->payload;
  if (p.type == sim::MsgType::SymPair) {
    if (!pair_seen_.insert(j).second) return;
    bool match = p.value && p.value->size() == size_t(code_.symbol_bits) &&
                 *p.value == rs::pack_symbol(*enc_[j - 1], code_) &&
                 p.value2 == rs::pack_symbol(*enc_[self_ - 1], code_);
    (match ? m1_ : m0_).insert(j);
    if (int(m1_.size()) == pp_.n - 2 * pp_.t && int(m0_.size()) < pp_.t + 1) sink.multicast(Payload::suc(1), 1);
    if (int(m0_.size()) == pp_.t + 1 && int(m1_.size()) < pp_.n - 2 * pp_.t) sink.multicast(Payload::suc(0), 1);
    check_outputs(sink);
  } else if (p.type == sim::MsgType::Suc) {
    if (!suc_seen_.insert(j).second) return;
    ((p.num & 1) ? s1_ : s0_).insert(j);
    check_outputs(sink);
  }
}

void KcaMachine::check_outputs(sim::ActionSink& sink) {
  if (output_done_) return;
  int m1s1 = 0;
  for (int j : m1_) m1s1 += s1_.count(j);
  if (m1s1 >= pp_.n - 2 * pp_.t) {
    output_done_ = true;
    sink.output(v_);  // keep running
    return;
  }
  std::set<int> m0s0 = m0_;
  m0s0.insert(s0_.begin(), s0_.end());
  if (int(m0s0.size()) >= pp_.t + 1) {
    output_done_ = true;
    sink.output(std::nullopt);  // keep running
  }
}

sim::NodeSpec kca_spec(const ProtocolParams& pp, const std::string& label) {
  return sim::NodeSpec{label, [pp](int self) { return std::make_unique<KcaMachine>(pp, self); }, {}};
}

}  // namespace baext::proto
