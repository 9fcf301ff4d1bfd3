#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "baext/message.hpp"

namespace baext::sim {

enum class EvKind { Acquire, Send, Deliver, Drop, Corrupt, SubInput, Output, Terminate };

std::string ev_kind_name(EvKind k);

struct TraceEvent {
  EvKind kind{};
  long step = 0;
  int party = -1;                // acquire/corrupt/subinput/output/terminate
  int node = -1;
  int env_id = -1;               // send/deliver/drop
  int mcast_id = -1;
  int src = -1, dst = -1;
  MsgType mtype{};
  int bits = 0;
  int depth = 0;
  bool byz = false;
  bool service = false;
  bool forced = false;
  bool has_payload = false;
  Payload payload;               // send events keep the payload for auditors
  bool has_value = false;
  std::optional<Bits> value;     // acquire/subinput/output value (nullopt = bot)
};

struct NodeCounters {
  long messages = 0;
  long bits = 0;
};

// Complete record of one simulation; everything auditors consume lives here.
struct Trace {
  int schema_version = 1;
  int n = 0, t = 0;
  uint64_t seed = 0;
  std::vector<std::string> node_paths;  // node id -> "ext/ca/in/rec" style path

  std::vector<TraceEvent> events;
  long steps = 0;
  bool event_cap_hit = false;

  long messages_total = 0, bits_total = 0;
  long byz_messages = 0, byz_bits = 0;
  int causal_depth = 0;  // over honest-sent envelopes
  std::vector<NodeCounters> per_node;      // honest traffic
  std::vector<NodeCounters> per_node_byz;

  std::map<int, long> corrupt_step;  // party -> step of corruption

  // (party, node) -> every Output action in order; multiple entries mean the
  // machine violated its at-most-once discipline and auditors will flag it.
  std::map<std::pair<int, int>, std::vector<std::optional<Bits>>> outputs;
  std::map<std::pair<int, int>, long> terminated_at;
  std::map<std::pair<int, int>, Bits> acquired;  // root acquires and sub-inputs

  bool is_corrupted(int party) const { return corrupt_step.count(party) > 0; }
  bool honest_throughout(int party) const { return !is_corrupted(party); }
  std::vector<int> honest_parties() const;
  int node_by_path(const std::string& path) const;  // -1 if absent

  std::optional<Bits> first_output(int party, int node) const;
  bool has_output(int party, int node) const;

  std::string to_jsonl() const;
  static Trace from_jsonl(const std::string& text);

  // Recomputes the counters from the event log; used by the counter-soundness
  // check.
  void recount(long& msgs, long& bits, long& byz_msgs, long& byz_bits) const;
};

}  // namespace baext::sim
