#include "baext/simulator.hpp"

#include <cassert>
#include <deque>
#include <stdexcept>

namespace baext::sim {

namespace {

struct Node {
  int id = 0;
  int parent = -1;
  std::string label;
  std::string path;
  std::map<std::string, int> children;
};

struct OracleBaState {
  std::map<int, int> inputs;  // party -> bit (first submission wins)
  std::optional<int> decided;
};

class Engine : public ActionSink {
 public:
  Engine(const SimConfig& cfg, Adversary& adv) : cfg_(cfg), adv_(adv), master_(cfg.seed) {
    n_ = cfg.params.n;
    flatten(cfg.root, -1, "");
    trace_.schema_version = 1;
    trace_.n = n_;
    trace_.t = cfg.params.t;
    trace_.seed = cfg.seed;
    for (auto& nd : nodes_) trace_.node_paths.push_back(nd.path);
    trace_.per_node.resize(nodes_.size());
    trace_.per_node_byz.resize(nodes_.size());
    for (int p = 1; p <= n_; ++p) party_rngs_.emplace_back(master_.fork(uint64_t(p)));
    adv_rng_ = std::make_unique<Rng>(master_.fork(1000003));
    coin_rng_ = std::make_unique<Rng>(master_.fork(2000003));
    machines_.resize(size_t(n_) + 1);
    node_terminated_.assign(size_t(n_) + 1, std::vector<bool>(nodes_.size(), false));
    node_acquired_.assign(size_t(n_) + 1, std::vector<bool>(nodes_.size(), false));
    party_terminated_.assign(size_t(n_) + 1, false);
    for (int p = 1; p <= n_; ++p) {
      machines_[p].resize(nodes_.size());
      build_machines(cfg.root, p);
    }
    for (auto& [party, value] : cfg.inputs) {
      if (party < 1 || party > n_) throw std::invalid_argument("sim: input party out of range");
      int id = next_acquire_id_++;
      pending_acquires_[id] = PendingAcquire{id, party, value, 0};
    }
    fairness_k_ = cfg.fairness_k > 0 ? cfg.fairness_k : 16L * n_ * n_;
    max_steps_ = cfg.max_steps > 0 ? cfg.max_steps : 200000;
  }

  Trace run() {
    while (!pending_.empty() || !pending_acquires_.empty()) {
      if (step_ >= max_steps_) {
        trace_.event_cap_hit = true;
        break;
      }
      bool forced = false;
      Decision d = forced_decision(&forced);
      if (!forced) d = adv_.choose(view());
      apply(d, forced);
      ++step_;
    }
    trace_.steps = step_;
    return std::move(trace_);
  }

  // ---- ActionSink (valid only inside a cascade) ----
  void send(int dst, Payload p, int bits) override {
    if (dst < 1 || dst > n_) throw std::logic_error("sim: send destination out of range");
    enqueue_envelope(ctx_node_, ctx_party_, dst, std::move(p), bits, ctx_depth_ + 1, -1, false, false);
  }
  void multicast(Payload p, int bits) override {
    int mc = next_mcast_id_++;
    for (int dst = 1; dst <= n_; ++dst)
      enqueue_envelope(ctx_node_, ctx_party_, dst, p, bits, ctx_depth_ + 1, mc, false, false);
  }
  void output(std::optional<Bits> v) override {
    log_output(ctx_party_, ctx_node_, v);
    int parent = nodes_[ctx_node_].parent;
    if (parent >= 0) cascade_.push_back({parent, Event{ChildOutputEvent{nodes_[ctx_node_].label, v}}, ctx_depth_});
  }
  void terminate() override {
    if (node_terminated_[ctx_party_][ctx_node_]) return;
    node_terminated_[ctx_party_][ctx_node_] = true;
    TraceEvent ev;
    ev.kind = EvKind::Terminate;
    ev.step = step_;
    ev.party = ctx_party_;
    ev.node = ctx_node_;
    trace_.events.push_back(ev);
    trace_.terminated_at[{ctx_party_, ctx_node_}] = step_;
    int parent = nodes_[ctx_node_].parent;
    if (parent >= 0)
      cascade_.push_back({parent, Event{ChildTerminateEvent{nodes_[ctx_node_].label}}, ctx_depth_});
    else
      party_terminated_[ctx_party_] = true;
  }
  void child_input(const std::string& child, Bits v) override {
    auto it = nodes_[ctx_node_].children.find(child);
    if (it == nodes_[ctx_node_].children.end()) throw std::logic_error("sim: unknown child instance " + child);
    int cn = it->second;
    if (node_acquired_[ctx_party_][cn])
      throw std::logic_error("sim: double input to sub-instance " + nodes_[cn].path);
    node_acquired_[ctx_party_][cn] = true;
    TraceEvent ev;
    ev.kind = EvKind::SubInput;
    ev.step = step_;
    ev.party = ctx_party_;
    ev.node = cn;
    ev.has_value = true;
    ev.value = v;
    trace_.events.push_back(ev);
    trace_.acquired[{ctx_party_, cn}] = v;
    cascade_.push_back({cn, Event{AcquireEvent{std::move(v)}}, ctx_depth_});
  }
  Rng& rng() override { return party_rngs_[size_t(ctx_party_) - 1]; }
  int coin(int round) override {
    auto key = std::pair{ctx_node_, round};
    auto it = coins_.find(key);
    if (it == coins_.end()) it = coins_.emplace(key, int(coin_rng_->next_bits(1))).first;
    return it->second;
  }
  void ba_submit(int bit) override {
    auto& st = oracles_[ctx_node_];
    if (!st.inputs.count(ctx_party_)) st.inputs[ctx_party_] = bit;
    check_oracle(ctx_node_);
  }

 private:
  struct CascadeItem {
    int node;
    Event event;
    int depth;
  };

  void flatten(const NodeSpec& spec, int parent, const std::string& prefix) {
    int id = int(nodes_.size());
    Node nd;
    nd.id = id;
    nd.parent = parent;
    nd.label = spec.label;
    nd.path = prefix.empty() ? spec.label : prefix + "/" + spec.label;
    nodes_.push_back(nd);
    if (parent >= 0) nodes_[parent].children[spec.label] = id;
    for (const auto& c : spec.children) flatten(c, id, nodes_[id].path);
  }

  void build_machines(const NodeSpec& spec, int party) {
    std::vector<std::pair<const NodeSpec*, int>> todo{{&spec, 0}};
    while (!todo.empty()) {
      auto [s, id] = todo.back();
      todo.pop_back();
      machines_[party][id] = s->make(party);
      for (const auto& c : s->children) todo.push_back({&c, nodes_[id].children.at(c.label)});
    }
  }

  void enqueue_envelope(int node, int src, int dst, Payload p, int bits, int depth, int mcast, bool byz,
                        bool service) {
    int id = next_env_id_++;
    PendingEnvelope env{id, mcast, node, src, dst, std::move(p), bits, depth, step_, byz, service};
    TraceEvent ev;
    ev.kind = EvKind::Send;
    ev.step = step_;
    ev.node = node;
    ev.env_id = id;
    ev.mcast_id = mcast;
    ev.src = src;
    ev.dst = dst;
    ev.mtype = env.payload.type;
    ev.bits = bits;
    ev.depth = depth;
    ev.byz = byz;
    ev.service = service;
    ev.has_payload = true;
    ev.payload = env.payload;
    trace_.events.push_back(ev);
    if (byz) {
      trace_.byz_messages++;
      trace_.byz_bits += bits;
      trace_.per_node_byz[node].messages++;
      trace_.per_node_byz[node].bits += bits;
    } else {
      trace_.messages_total++;
      trace_.bits_total += bits;
      trace_.per_node[node].messages++;
      trace_.per_node[node].bits += bits;
      if (!service && depth > trace_.causal_depth) trace_.causal_depth = depth;
    }
    pending_.emplace(id, std::move(env));
  }

  void log_output(int party, int node, const std::optional<Bits>& v) {
    TraceEvent ev;
    ev.kind = EvKind::Output;
    ev.step = step_;
    ev.party = party;
    ev.node = node;
    ev.has_value = true;
    ev.value = v;
    trace_.events.push_back(ev);
    trace_.outputs[{party, node}].push_back(v);
  }

  AdversaryView view() {
    return AdversaryView{cfg_.params, pending_,   pending_acquires_, corrupted_,
                         budget_left(), trace_,    cfg_.inputs,       step_};
  }

  int budget_left() const { return cfg_.params.t - int(corrupted_.size()); }

  Decision forced_decision(bool* forced) {
    *forced = false;
    // Fairness guard: the oldest event pending for >= K steps is delivered
    // now, adversary preferences notwithstanding.
    const PendingEnvelope* env = nullptr;
    for (auto& [id, e] : pending_)
      if (step_ - e.born_step >= fairness_k_ && (!env || e.born_step < env->born_step || (e.born_step == env->born_step && e.id < env->id)))
        env = &e;
    const PendingAcquire* acq = nullptr;
    for (auto& [id, a] : pending_acquires_)
      if (step_ - a.born_step >= fairness_k_ && (!acq || a.born_step < acq->born_step || (a.born_step == acq->born_step && a.id < acq->id)))
        acq = &a;
    Decision d;
    if (env && (!acq || env->born_step <= acq->born_step)) {
      d.kind = Decision::DeliverEnv;
      d.id = env->id;
      *forced = true;
    } else if (acq) {
      d.kind = Decision::ReleaseAcquire;
      d.id = acq->id;
      *forced = true;
    }
    return d;
  }

  void apply(const Decision& d, bool forced) {
    for (const auto& cmd : d.corruptions) do_corrupt(cmd);
    switch (d.kind) {
      case Decision::DeliverEnv: {
        auto it = pending_.find(d.id);
        if (it == pending_.end()) throw std::logic_error("sim: adversary delivered unknown envelope");
        PendingEnvelope env = std::move(it->second);
        pending_.erase(it);
        TraceEvent ev;
        ev.kind = EvKind::Deliver;
        ev.step = step_;
        ev.env_id = env.id;
        ev.forced = forced;
        trace_.events.push_back(ev);
        deliver(env);
        break;
      }
      case Decision::ReleaseAcquire: {
        auto it = pending_acquires_.find(d.id);
        if (it == pending_acquires_.end()) throw std::logic_error("sim: adversary released unknown acquire");
        PendingAcquire acq = std::move(it->second);
        pending_acquires_.erase(it);
        release_acquire(acq, forced);
        break;
      }
      case Decision::DropEnv: {
        auto it = pending_.find(d.id);
        if (it == pending_.end()) throw std::logic_error("sim: adversary dropped unknown envelope");
        if (!it->second.byz || it->second.service)
          throw std::logic_error("sim: only adversary-owned envelopes may be dropped");
        drop_envelope(it->second);
        pending_.erase(it);
        break;
      }
      case Decision::Idle:
        if (!pending_.empty() || !pending_acquires_.empty())
          throw std::logic_error("sim: adversary idled while events are pending");
        break;
    }
  }

  void do_corrupt(const CorruptCmd& cmd) {
    if (cmd.party < 1 || cmd.party > n_) throw std::logic_error("sim: corrupt target out of range");
    if (corrupted_.count(cmd.party)) return;  // idempotent
    if (budget_left() <= 0) throw std::logic_error("sim: corruption budget exhausted");
    corrupted_.insert(cmd.party);
    trace_.corrupt_step[cmd.party] = step_;
    TraceEvent ev;
    ev.kind = EvKind::Corrupt;
    ev.step = step_;
    ev.party = cmd.party;
    trace_.events.push_back(ev);
    // The party's pending input acquisition dies with it.
    for (auto it = pending_acquires_.begin(); it != pending_acquires_.end();)
      it = (it->second.party == cmd.party) ? pending_acquires_.erase(it) : ++it;
    // Front-running: the not-yet-delivered envelopes of the fresh corruption
    // are adversary property now.
    for (const auto& disp : cmd.dispositions) {
      auto it = pending_.find(disp.env_id);
      if (it == pending_.end()) continue;
      PendingEnvelope& env = it->second;
      if (env.src != cmd.party || env.service) throw std::logic_error("sim: disposition on foreign envelope");
      switch (disp.what) {
        case Disposition::Deliver:
          env.byz = true;
          break;
        case Disposition::Drop:
          drop_envelope(env);
          pending_.erase(it);
          break;
        case Disposition::Replace: {
          env.byz = true;
          env.payload = disp.replacement;
          env.bits = disp.bits;
          break;
        }
      }
    }
    for (auto& [id, env] : pending_)
      if (env.src == cmd.party && !env.service) env.byz = true;
    auto sends = adv_.on_corrupt(cmd.party, view());
    for (auto& bs : sends) byz_send(cmd.party, bs);
    check_all_oracles();
  }

  void drop_envelope(const PendingEnvelope& env) {
    TraceEvent ev;
    ev.kind = EvKind::Drop;
    ev.step = step_;
    ev.env_id = env.id;
    trace_.events.push_back(ev);
  }

  void byz_send(int party, const ByzSend& bs) {
    if (!corrupted_.count(party)) throw std::logic_error("sim: byzantine send from honest party");
    if (bs.node < 0 || bs.node >= int(nodes_.size())) throw std::logic_error("sim: byzantine send bad node");
    enqueue_envelope(bs.node, party, bs.dst, bs.payload, bs.bits, 1, -1, true, false);
  }

  void release_acquire(const PendingAcquire& acq, bool forced) {
    TraceEvent ev;
    ev.kind = EvKind::Acquire;
    ev.step = step_;
    ev.party = acq.party;
    ev.node = 0;
    ev.forced = forced;
    ev.has_value = true;
    ev.value = acq.value;
    trace_.events.push_back(ev);
    trace_.acquired[{acq.party, 0}] = acq.value;
    node_acquired_[acq.party][0] = true;
    run_cascade(acq.party, 0, Event{AcquireEvent{acq.value}}, 0);
  }

  void deliver(const PendingEnvelope& env) {
    if (corrupted_.count(env.dst)) {
      auto sends = adv_.on_deliver_to_corrupt(env.dst, env, view());
      for (auto& bs : sends) byz_send(env.dst, bs);
      return;
    }
    if (party_terminated_[env.dst]) return;
    if (node_terminated_[env.dst][env.node]) return;
    run_cascade(env.dst, env.node, Event{DeliverEvent{env.src, env.payload}}, env.depth);
  }

  void run_cascade(int party, int node, Event first, int depth) {
    cascade_.clear();
    cascade_.push_back({node, std::move(first), depth});
    size_t i = 0;
    while (i < cascade_.size()) {
      // Deque stays stable: sink calls push_back only.
      CascadeItem item = std::move(cascade_[i]);
      ++i;
      if (party_terminated_[party]) continue;
      if (node_terminated_[party][item.node]) continue;
      ctx_party_ = party;
      ctx_node_ = item.node;
      ctx_depth_ = item.depth;
      machines_[party][item.node]->on_event(item.event, *this);
    }
    cascade_.clear();
    check_all_oracles();
  }

  // Oracle BA: decides once every currently-honest party has an input (or the
  // configured quorum), on the unanimous currently-honest bit, else the
  // tiebreak. Notifications go out as undroppable service envelopes.
  void check_oracle(int node) {
    auto& st = oracles_[node];
    if (st.decided) return;
    int honest_inputs = 0;
    bool all_honest_in = true;
    for (int p = 1; p <= n_; ++p) {
      if (corrupted_.count(p)) continue;
      if (st.inputs.count(p))
        ++honest_inputs;
      else
        all_honest_in = false;
    }
    bool quorum_ok = cfg_.oracle_quorum > 0 && honest_inputs >= cfg_.oracle_quorum;
    if (!all_honest_in && !quorum_ok) return;
    if (honest_inputs == 0) return;
    std::optional<int> common;
    bool unanimous = true;
    for (auto& [p, b] : st.inputs) {
      if (corrupted_.count(p)) continue;
      if (!common)
        common = b;
      else if (*common != b)
        unanimous = false;
    }
    st.decided = unanimous && common ? *common : cfg_.oracle_tiebreak;
    for (int dst = 1; dst <= n_; ++dst)
      enqueue_envelope(node, 0, dst, Payload::ba_decide(*st.decided), 1, 1, -1, false, true);
  }

  void check_all_oracles() {
    for (auto& [node, st] : oracles_)
      if (!st.inputs.empty()) check_oracle(node);
  }

  const SimConfig& cfg_;
  Adversary& adv_;
  Rng master_;
  int n_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::vector<std::unique_ptr<Machine>>> machines_;  // [party][node]
  std::vector<Rng> party_rngs_;
  std::unique_ptr<Rng> adv_rng_, coin_rng_;

  std::map<int, PendingEnvelope> pending_;
  std::map<int, PendingAcquire> pending_acquires_;
  std::set<int> corrupted_;
  std::vector<std::vector<bool>> node_terminated_, node_acquired_;
  std::vector<bool> party_terminated_;
  std::map<std::pair<int, int>, int> coins_;
  std::map<int, OracleBaState> oracles_;

  Trace trace_;
  long step_ = 0;
  long fairness_k_ = 0, max_steps_ = 0;
  int next_env_id_ = 1, next_mcast_id_ = 1, next_acquire_id_ = 1;

  std::deque<CascadeItem> cascade_;
  int ctx_party_ = 0, ctx_node_ = 0, ctx_depth_ = 0;
};

}  // namespace

Trace run_simulation(const SimConfig& cfg, Adversary& adversary) {
  Engine engine(cfg, adversary);
  return engine.run();
}

}  // namespace baext::sim
