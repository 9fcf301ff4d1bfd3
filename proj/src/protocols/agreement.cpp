#include "baext/protocols/agreement.hpp"

namespace baext::proto {

using sim::Payload;

// ---- SRA ----

void SraMachine::on_event(const sim::Event& ev, sim::ActionSink& sink) {
  if (auto* a = std::get_if<sim::AcquireEvent>(&ev)) {
    if (acquired_ || a->value.size() != pp_.ell) return;
    acquired_ = true;
    v_ = a->value;
    key_ = sink.rng().next_bits(hp_.kappa);
    sink.multicast(Payload::key(key_), hp_.kappa);
    matched_.insert(self_);
    if (int(matched_.size()) == pp_.n - pp_.t && !output_done_) {
      output_done_ = true;
      sink.output(v_);
    }
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

Bits SraMachine::digest_under(uint64_t joint) const {
  if (!hp_.hashing_applies()) return v_;  // raw value exchange below kappa bits
  return Bits::from_u64(auh::hash(joint, auh::pad(v_, hp_.kappa), hp_.kappa), hp_.kappa);
}

void SraMachine::handle(const sim::Event& ev, sim::ActionSink& sink) {
  auto* d = std::get_if<sim::DeliverEvent>(&ev);
  if (!d || d->from == self_ || d->from < 1) return;
  int j = d->from;
  const Payload& p = d->payload;
  if (p.type == sim::MsgType::Key) {
    if (!key_seen_.insert(j).second) return;
    uint64_t kj = hp_.kappa < 64 ? (p.num & ((uint64_t{1} << hp_.kappa) - 1)) : p.num;
    joint_[j] = auh::joint_key(key_, kj, hp_.kappa);
    Bits digest = digest_under(*joint_[j]);
    int bits = int(digest.size());
    sink.send(j, Payload::hash(std::move(digest)), bits);
    auto early = early_hash_.find(j);
    if (early != early_hash_.end()) {
      Bits z = std::move(early->second);
      early_hash_.erase(early);
      classify(j, z, sink);
    }
  } else if (p.type == sim::MsgType::Hash) {
    if (!hash_seen_.insert(j).second) return;
    Bits z = p.value ? *p.value : Bits();
    if (!joint_[j]) {
      early_hash_[j] = std::move(z);
      return;
    }
    classify(j, z, sink);
  }
}

void SraMachine::classify(int from, const Bits& digest, sim::ActionSink& sink) {
  if (digest != digest_under(*joint_[from])) return;
  matched_.insert(from);
  if (int(matched_.size()) == pp_.n - pp_.t && !output_done_) {
    output_done_ = true;
    sink.output(v_);  // keep running
  }
}

// ---- PRA ----

void PraMachine::on_event(const sim::Event& ev, sim::ActionSink& sink) {
  if (auto* a = std::get_if<sim::AcquireEvent>(&ev)) {
    if (acquired_ || a->value.size() != pp_.ell) return;
    acquired_ = true;
    v_ = a->value;
    enc_ = rs::encode(v_, code_);
    matched_.insert(self_);
    sink.multicast(Payload::sym(rs::pack_symbol(*enc_[self_ - 1], code_)), code_.symbol_bits);
    if (int(matched_.size()) == pp_.n - pp_.t && !output_done_) {
      output_done_ = true;
      sink.output(v_);
    }
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

void PraMachine::handle(const sim::Event& ev, sim::ActionSink& sink) {
  auto* d = std::get_if<sim::DeliverEvent>(&ev);
  if (!d || d->from == self_ || d->from < 1) return;
  if (d->payload.type != sim::MsgType::Sym) return;
  int j = d->from;
  if (!seen_.insert(j).second) return;
  if (d->payload.value && *d->payload.value == rs::pack_symbol(*enc_[j - 1], code_)) {
    matched_.insert(j);
    if (int(matched_.size()) == pp_.n - pp_.t && !output_done_) {
      output_done_ = true;
      sink.output(v_);  // keep running
    }
  }
}

sim::NodeSpec sra_spec(const ProtocolParams& pp, const std::string& label) {
  return sim::NodeSpec{label, [pp](int self) { return std::make_unique<SraMachine>(pp, self); }, {}};
}

sim::NodeSpec pra_spec(const ProtocolParams& pp, const std::string& label) {
  return sim::NodeSpec{label, [pp](int self) { return std::make_unique<PraMachine>(pp, self); }, {}};
}

}  // namespace baext::proto
