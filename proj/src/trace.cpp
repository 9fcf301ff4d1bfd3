#include "baext/trace.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace baext::sim {

using nlohmann::json;

std::string msg_type_name(MsgType t) {
  switch (t) {
    case MsgType::Key: return "KEY";
    case MsgType::Hash: return "HASH";
    case MsgType::Sym: return "SYM";
    case MsgType::SymPair: return "SYMPAIR";
    case MsgType::Suc: return "SUC";
    case MsgType::Mine: return "MINE";
    case MsgType::Yours: return "YOURS";
    case MsgType::Bot: return "BOT";
    case MsgType::BaBval: return "BA_BVAL";
    case MsgType::BaAux: return "BA_AUX";
    case MsgType::BaDone: return "BA_DONE";
    case MsgType::BaDecide: return "BA_DECIDE";
  }
  return "?";
}

std::optional<MsgType> msg_type_parse(const std::string& s) {
  for (MsgType t : {MsgType::Key, MsgType::Hash, MsgType::Sym, MsgType::SymPair, MsgType::Suc, MsgType::Mine,
                    MsgType::Yours, MsgType::Bot, MsgType::BaBval, MsgType::BaAux, MsgType::BaDone,
                    MsgType::BaDecide})
    if (msg_type_name(t) == s) return t;
  return std::nullopt;
}

std::string ev_kind_name(EvKind k) {
  switch (k) {
    case EvKind::Acquire: return "acquire";
    case EvKind::Send: return "send";
    case EvKind::Deliver: return "deliver";
    case EvKind::Drop: return "drop";
    case EvKind::Corrupt: return "corrupt";
    case EvKind::SubInput: return "subinput";
    case EvKind::Output: return "output";
    case EvKind::Terminate: return "terminate";
  }
  return "?";
}

static std::optional<EvKind> ev_kind_parse(const std::string& s) {
  for (EvKind k : {EvKind::Acquire, EvKind::Send, EvKind::Deliver, EvKind::Drop, EvKind::Corrupt,
                   EvKind::SubInput, EvKind::Output, EvKind::Terminate})
    if (ev_kind_name(k) == s) return k;
  return std::nullopt;
}

std::vector<int> Trace::honest_parties() const {
  std::vector<int> out;
  for (int p = 1; p <= n; ++p)
    if (!is_corrupted(p)) out.push_back(p);
  return out;
}

int Trace::node_by_path(const std::string& path) const {
  for (size_t i = 0; i < node_paths.size(); ++i)
    if (node_paths[i] == path) return int(i);
  return -1;
}

std::optional<Bits> Trace::first_output(int party, int node) const {
  auto it = outputs.find({party, node});
  if (it == outputs.end() || it->second.empty()) return std::nullopt;
  return it->second.front();
}

bool Trace::has_output(int party, int node) const {
  auto it = outputs.find({party, node});
  return it != outputs.end() && !it->second.empty();
}

namespace {

json payload_to_json(const Payload& p) {
  json j;
  j["type"] = msg_type_name(p.type);
  if (p.value) j["value"] = p.value->to_string();
  if (p.value2.size() > 0) j["value2"] = p.value2.to_string();
  if (p.num) j["num"] = p.num;
  if (p.round) j["round"] = p.round;
  return j;
}

Payload payload_from_json(const json& j) {
  Payload p;
  p.type = *msg_type_parse(j.at("type").get<std::string>());
  if (j.contains("value")) p.value = Bits::parse(j["value"].get<std::string>());
  if (j.contains("value2")) p.value2 = Bits::parse(j["value2"].get<std::string>());
  if (j.contains("num")) p.num = j["num"].get<uint64_t>();
  if (j.contains("round")) p.round = j["round"].get<int>();
  return p;
}

}  // namespace

std::string Trace::to_jsonl() const {
  std::ostringstream out;
  {
    json meta;
    meta["ev"] = "meta";
    meta["schema_version"] = schema_version;
    meta["n"] = n;
    meta["t"] = t;
    meta["seed"] = seed;
    meta["nodes"] = node_paths;
    out << meta.dump() << "\n";
  }
  for (const auto& e : events) {
    json j;
    j["ev"] = ev_kind_name(e.kind);
    j["step"] = e.step;
    switch (e.kind) {
      case EvKind::Acquire:
      case EvKind::SubInput:
        j["party"] = e.party;
        j["node"] = e.node;
        j["value"] = e.value ? json(e.value->to_string()) : json(nullptr);
        if (e.forced) j["forced"] = true;
        break;
      case EvKind::Send:
        j["id"] = e.env_id;
        if (e.mcast_id >= 0) j["mc"] = e.mcast_id;
        j["src"] = e.src;
        j["dst"] = e.dst;
        j["node"] = e.node;
        j["type"] = msg_type_name(e.mtype);
        j["bits"] = e.bits;
        j["depth"] = e.depth;
        if (e.byz) j["byz"] = true;
        if (e.service) j["service"] = true;
        j["payload"] = payload_to_json(e.payload);
        break;
      case EvKind::Deliver:
      case EvKind::Drop:
        j["id"] = e.env_id;
        if (e.forced) j["forced"] = true;
        break;
      case EvKind::Corrupt:
        j["party"] = e.party;
        break;
      case EvKind::Output:
        j["party"] = e.party;
        j["node"] = e.node;
        j["value"] = e.value ? json(e.value->to_string()) : json(nullptr);
        break;
      case EvKind::Terminate:
        j["party"] = e.party;
        j["node"] = e.node;
        break;
    }
    out << j.dump() << "\n";
  }
  {
    json s;
    s["ev"] = "summary";
    s["steps"] = steps;
    s["event_cap_hit"] = event_cap_hit;
    s["messages"] = messages_total;
    s["bits"] = bits_total;
    s["byz_messages"] = byz_messages;
    s["byz_bits"] = byz_bits;
    s["causal_depth"] = causal_depth;
    json per;
    for (size_t i = 0; i < per_node.size(); ++i) {
      json row;
      row["messages"] = per_node[i].messages;
      row["bits"] = per_node[i].bits;
      row["byz_messages"] = per_node_byz[i].messages;
      row["byz_bits"] = per_node_byz[i].bits;
      per[node_paths[i]] = row;
    }
    s["per_node"] = per;
    out << s.dump() << "\n";
  }
  return out.str();
}

Trace Trace::from_jsonl(const std::string& text) {
  Trace tr;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    std::string ev = j.at("ev").get<std::string>();
    if (ev == "meta") {
      tr.schema_version = j["schema_version"].get<int>();
      tr.n = j["n"].get<int>();
      tr.t = j["t"].get<int>();
      tr.seed = j["seed"].get<uint64_t>();
      tr.node_paths = j["nodes"].get<std::vector<std::string>>();
      tr.per_node.resize(tr.node_paths.size());
      tr.per_node_byz.resize(tr.node_paths.size());
      continue;
    }
    if (ev == "summary") {
      tr.steps = j["steps"].get<long>();
      tr.event_cap_hit = j["event_cap_hit"].get<bool>();
      tr.messages_total = j["messages"].get<long>();
      tr.bits_total = j["bits"].get<long>();
      tr.byz_messages = j["byz_messages"].get<long>();
      tr.byz_bits = j["byz_bits"].get<long>();
      tr.causal_depth = j["causal_depth"].get<int>();
      for (size_t i = 0; i < tr.node_paths.size(); ++i) {
        const json& row = j["per_node"][tr.node_paths[i]];
        tr.per_node[i].messages = row["messages"].get<long>();
        tr.per_node[i].bits = row["bits"].get<long>();
        tr.per_node_byz[i].messages = row["byz_messages"].get<long>();
        tr.per_node_byz[i].bits = row["byz_bits"].get<long>();
      }
      continue;
    }
    TraceEvent e;
    auto kind = ev_kind_parse(ev);
    if (!kind) throw std::invalid_argument("trace: unknown event kind " + ev);
    e.kind = *kind;
    e.step = j.at("step").get<long>();
    auto get_value = [&](TraceEvent& t2) {
      t2.has_value = true;
      if (j["value"].is_null())
        t2.value = std::nullopt;
      else
        t2.value = Bits::parse(j["value"].get<std::string>());
    };
    switch (*kind) {
      case EvKind::Acquire:
      case EvKind::SubInput:
        e.party = j["party"].get<int>();
        e.node = j["node"].get<int>();
        get_value(e);
        e.forced = j.value("forced", false);
        if (e.value) tr.acquired[{e.party, e.node}] = *e.value;
        break;
      case EvKind::Send:
        e.env_id = j["id"].get<int>();
        e.mcast_id = j.value("mc", -1);
        e.src = j["src"].get<int>();
        e.dst = j["dst"].get<int>();
        e.node = j["node"].get<int>();
        e.mtype = *msg_type_parse(j["type"].get<std::string>());
        e.bits = j["bits"].get<int>();
        e.depth = j["depth"].get<int>();
        e.byz = j.value("byz", false);
        e.service = j.value("service", false);
        e.has_payload = true;
        e.payload = payload_from_json(j["payload"]);
        break;
      case EvKind::Deliver:
      case EvKind::Drop:
        e.env_id = j["id"].get<int>();
        e.forced = j.value("forced", false);
        break;
      case EvKind::Corrupt:
        e.party = j["party"].get<int>();
        tr.corrupt_step[e.party] = e.step;
        break;
      case EvKind::Output:
        e.party = j["party"].get<int>();
        e.node = j["node"].get<int>();
        get_value(e);
        tr.outputs[{e.party, e.node}].push_back(e.value);
        break;
      case EvKind::Terminate:
        e.party = j["party"].get<int>();
        e.node = j["node"].get<int>();
        if (!tr.terminated_at.count({e.party, e.node})) tr.terminated_at[{e.party, e.node}] = e.step;
        break;
    }
    tr.events.push_back(std::move(e));
  }
  return tr;
}

void Trace::recount(long& msgs, long& bits, long& byz_msgs, long& byz_bits_out) const {
  msgs = bits = byz_msgs = byz_bits_out = 0;
  for (const auto& e : events) {
    if (e.kind != EvKind::Send) continue;
    if (e.byz) {
      byz_msgs++;
      byz_bits_out += e.bits;
    } else {
      msgs++;
      bits += e.bits;
    }
  }
}

}  // namespace baext::sim
