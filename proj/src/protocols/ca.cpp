#include "baext/protocols/ca.hpp"

#include "baext/protocols/agreement.hpp"
#include "baext/protocols/kca.hpp"
#include "baext/protocols/rec.hpp"

namespace baext::proto {

using sim::Payload;

// ---- CA1 ----

void Ca1Machine::on_event(const sim::Event& ev, sim::ActionSink& sink) {
  if (auto* a = std::get_if<sim::AcquireEvent>(&ev)) {
    if (acquired_ || a->value.size() != pp_.ell) return;
    acquired_ = true;
    v_ = a->value;
    a_.insert(self_);
    key_ = sink.rng().next_bits(hp_.kappa);
    sink.multicast(Payload::key(key_), hp_.kappa);
    check_rec_input(sink);
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

Bits Ca1Machine::digest_under(uint64_t joint) const {
  if (!hp_.hashing_applies()) return v_;
  return Bits::from_u64(auh::hash(joint, auh::pad(v_, hp_.kappa), hp_.kappa), hp_.kappa);
}

void Ca1Machine::handle(const sim::Event& ev, sim::ActionSink& sink) {
  if (auto* co = std::get_if<sim::ChildOutputEvent>(&ev)) {
    if (co->child == "rec" && co->value && !sra_input_sent_) {
      sra_input_sent_ = true;
      sink.child_input("sra", *co->value);
    } else if (co->child == "sra" && co->value && !output_done_) {
      output_done_ = true;
      sink.output(*co->value);  // keep running
    }
    return;
  }
  auto* d = std::get_if<sim::DeliverEvent>(&ev);
  if (!d || d->from < 1) return;
  int j = d->from;
  const Payload& p = d->payload;
  if (p.type == sim::MsgType::Bot) {
    c_.insert(j);
    if (int(c_.size()) == pp_.t + 1) output_bot(sink);
    check_rec_input(sink);
    return;
  }
  if (j == self_) return;
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

void Ca1Machine::classify(int from, const Bits& digest, sim::ActionSink& sink) {
  if (digest == digest_under(*joint_[from])) {
    a_.insert(from);
    check_rec_input(sink);
  } else {
    b_.insert(from);
    if (int(b_.size()) == pp_.t + 1) {
      if (!bot_sent_) {
        bot_sent_ = true;
        sink.multicast(Payload::bot(), 1);
      }
      output_bot(sink);
    }
  }
}

void Ca1Machine::check_rec_input(sim::ActionSink& sink) {
  if (rec_input_sent_) return;
  std::set<int> ac = a_;
  ac.insert(c_.begin(), c_.end());
  if (int(ac.size()) != pp_.n - pp_.t) return;
  rec_input_sent_ = true;
  sink.child_input("rec", v_);
}

void Ca1Machine::output_bot(sim::ActionSink& sink) {
  if (output_done_) return;
  output_done_ = true;
  sink.output(std::nullopt);  // keep running
}

// ---- CA2 ----

void Ca2Machine::on_event(const sim::Event& ev, sim::ActionSink& sink) {
  if (auto* a = std::get_if<sim::AcquireEvent>(&ev)) {
    if (stage_ != Stage::PreInput || a->value.size() != pp_.ell) return;
    stage_ = Stage::AwaitKca;
    v_ = a->value;
    sink.child_input("kca", v_);
    return;
  }
  if (auto* co = std::get_if<sim::ChildOutputEvent>(&ev)) {
    if (co->child == "kca") {
      on_kca_output(co->value, sink);
      return;
    }
    // The reconstruction-to-reliable-agreement bridge stays live even after a
    // bot KCA output; without it the symbol holders can lack the n-t
    // reliable-agreement participants they need to finish.
    if (co->child == "rec" && co->value && !pra_input_sent_) {
      pra_input_sent_ = true;
      sink.child_input("pra", *co->value);
    } else if (co->child == "pra" && co->value && !output_done_) {
      output_done_ = true;
      sink.output(*co->value);  // keep running
    }
    return;
  }
  if (stage_ == Stage::PreInput || stage_ == Stage::AwaitKca) {
    backlog_.push_back(ev);
    return;
  }
  if (stage_ == Stage::Silenced) return;  // bot holders stop the symbol exchange
  handle(ev, sink);
}

void Ca2Machine::on_kca_output(const std::optional<Bits>& z, sim::ActionSink& sink) {
  if (stage_ != Stage::AwaitKca) return;
  if (!z) {
    stage_ = Stage::Silenced;
    backlog_.clear();
    sink.multicast(Payload::sym(std::nullopt), code_.symbol_bits);
    if (!bot_sent_) {
      bot_sent_ = true;
      sink.multicast(Payload::bot(), 1);
    }
    output_bot(sink);
    return;
  }
  stage_ = Stage::Exchanging;
  z_ = *z;
  enc_ = rs::encode(z_, code_);
  a_.insert(self_);
  sink.multicast(Payload::sym(rs::pack_symbol(*enc_[self_ - 1], code_)), code_.symbol_bits);
  check_rec_input(sink);
  auto backlog = std::move(backlog_);
  backlog_.clear();
  for (const auto& e : backlog) {
    if (stage_ != Stage::Exchanging) break;
    handle(e, sink);
  }
}

void Ca2Machine::handle(const sim::Event& ev, sim::ActionSink& sink) {
  auto* d = std::get_if<sim::DeliverEvent>(&ev);
  if (!d || d->from < 1) return;
  int j = d->from;
  const Payload& p = d->payload;
  if (p.type == sim::MsgType::Bot) {
    c_.insert(j);
    if (int(c_.size()) == pp_.t + 1) output_bot(sink);
    check_rec_input(sink);
    return;
  }
  if (j == self_) return;
  if (p.type != sim::MsgType::Sym) return;
  if (!sym_seen_.insert(j).second) return;
  bool match = p.value && *p.value == rs::pack_symbol(*enc_[j - 1], code_);
  if (match) {
    a_.insert(j);
    check_rec_input(sink);
  } else {
    b_.insert(j);
    if (int(b_.size()) == pp_.t + 1) {
      if (!bot_sent_) {
        bot_sent_ = true;
        sink.multicast(Payload::bot(), 1);
      }
      output_bot(sink);
    }
  }
}

void Ca2Machine::check_rec_input(sim::ActionSink& sink) {
  if (rec_input_sent_ || stage_ != Stage::Exchanging) return;
  std::set<int> ac = a_;
  ac.insert(c_.begin(), c_.end());
  if (int(ac.size()) != pp_.n - pp_.t) return;
  rec_input_sent_ = true;
  sink.child_input("rec", z_);
}

void Ca2Machine::output_bot(sim::ActionSink& sink) {
  if (output_done_) return;
  output_done_ = true;
  sink.output(std::nullopt);  // keep running
}

// ---- intrusion wrapper ----

void IntrusionWrapMachine::on_event(const sim::Event& ev, sim::ActionSink& sink) {
  if (auto* a = std::get_if<sim::AcquireEvent>(&ev)) {
    if (acquired_) return;
    acquired_ = true;
    v_ = a->value;
    sink.child_input("in", v_);
    for (const auto& y : early_outputs_) {
      if (fired_) break;
      fired_ = true;
      sink.output(y && *y == v_ ? y : std::nullopt);
    }
    early_outputs_.clear();
    return;
  }
  if (auto* co = std::get_if<sim::ChildOutputEvent>(&ev)) {
    if (co->child != "in") return;
    if (!acquired_) {
      early_outputs_.push_back(co->value);
      return;
    }
    if (fired_) return;
    fired_ = true;
    sink.output(co->value && *co->value == v_ ? co->value : std::nullopt);
  }
}

sim::NodeSpec ca1_spec(const ProtocolParams& pp, const std::string& label) {
  sim::NodeSpec spec{label, [pp](int self) { return std::make_unique<Ca1Machine>(pp, self); }, {}};
  spec.children.push_back(rec_spec(pp));
  spec.children.push_back(sra_spec(pp));
  return spec;
}

sim::NodeSpec ca2_spec(const ProtocolParams& pp, const std::string& label) {
  sim::NodeSpec spec{label, [pp](int self) { return std::make_unique<Ca2Machine>(pp, self); }, {}};
  spec.children.push_back(kca_spec(pp));
  spec.children.push_back(rec_spec(pp));
  spec.children.push_back(pra_spec(pp));
  return spec;
}

sim::NodeSpec intrusion_wrap_spec(sim::NodeSpec inner, const std::string& label) {
  inner.label = "in";
  sim::NodeSpec spec{label, [](int self) { return std::make_unique<IntrusionWrapMachine>(self); }, {}};
  spec.children.push_back(std::move(inner));
  return spec;
}

}  // namespace baext::proto
