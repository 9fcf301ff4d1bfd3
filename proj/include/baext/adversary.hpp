#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "baext/message.hpp"
#include "baext/params.hpp"
#include "baext/trace.hpp"

namespace baext::sim {

struct PendingEnvelope {
  int id = 0;
  int mcast_id = -1;  // groups the copies of one multicast
  int node = 0;
  int src = 0, dst = 0;  // src 0 = simulator service
  Payload payload;
  int bits = 0;
  int depth = 0;
  long born_step = 0;
  bool byz = false;      // adversary-owned (sent after corruption or kept through it)
  bool service = false;  // oracle notification: delivery may be delayed, never dropped
};

struct PendingAcquire {
  int id = 0;
  int party = 0;
  Bits value;
  long born_step = 0;
};

// Read-only adversary view: full information (all states are derivable from
// the event history and the input schedule) except randomness not yet drawn.
struct AdversaryView {
  const ProtocolParams& params;
  const std::map<int, PendingEnvelope>& pending;
  const std::map<int, PendingAcquire>& pending_acquires;
  const std::set<int>& corrupted;
  int budget_left = 0;
  const Trace& trace;
  const std::map<int, Bits>& input_schedule;
  long step = 0;
};

struct ByzSend {
  int node = 0;
  int dst = 0;
  Payload payload;
  int bits = 0;
};

enum class Disposition { Deliver, Drop, Replace };

struct PendingDisposition {
  int env_id = 0;
  Disposition what = Disposition::Deliver;
  Payload replacement;
  int bits = 0;
};

struct CorruptCmd {
  int party = 0;
  // Fate of the party's in-flight envelopes (front-running). Unlisted
  // envelopes stay pending under adversary ownership.
  std::vector<PendingDisposition> dispositions;
};

struct Decision {
  std::vector<CorruptCmd> corruptions;  // applied before the step action
  enum Kind { DeliverEnv, ReleaseAcquire, DropEnv, Idle } kind = Idle;
  int id = 0;  // envelope or acquire id; DropEnv only for adversary-owned envelopes
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual Decision choose(const AdversaryView& view) = 0;
  // Byzantine behavior hooks; returned sends are attributed to `party`.
  virtual std::vector<ByzSend> on_corrupt(int party, const AdversaryView& view) {
    (void)party, (void)view;
    return {};
  }
  virtual std::vector<ByzSend> on_deliver_to_corrupt(int party, const PendingEnvelope& env,
                                                     const AdversaryView& view) {
    (void)party, (void)env, (void)view;
    return {};
  }
};

}  // namespace baext::sim
