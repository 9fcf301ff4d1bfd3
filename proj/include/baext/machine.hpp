#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "baext/message.hpp"
#include "baext/rng.hpp"

namespace baext::sim {

struct AcquireEvent {
  Bits value;
};
struct DeliverEvent {
  int from = 0;  // 0 = simulator service
  Payload payload;
};
struct ChildOutputEvent {
  std::string child;
  std::optional<Bits> value;  // nullopt = bot output
};
struct ChildTerminateEvent {
  std::string child;
};

using Event = std::variant<AcquireEvent, DeliverEvent, ChildOutputEvent, ChildTerminateEvent>;

// Everything a protocol core may do in response to an event. The simulator
// owns the implementation; machines never touch the network or each other
// directly, which keeps them pure and replayable.
class ActionSink {
 public:
  virtual ~ActionSink() = default;
  virtual void send(int dst, Payload p, int bits) = 0;
  virtual void multicast(Payload p, int bits) = 0;  // to all n parties, self included
  virtual void output(std::optional<Bits> v) = 0;
  virtual void terminate() = 0;
  virtual void child_input(const std::string& child, Bits v) = 0;
  virtual Rng& rng() = 0;
  // Ideal common coin for this instance, drawn lazily per round.
  virtual int coin(int round) = 0;
  // Trusted-oracle BA backend input.
  virtual void ba_submit(int bit) = 0;
};

class Machine {
 public:
  virtual ~Machine() = default;
  virtual void on_event(const Event& ev, ActionSink& sink) = 0;
};

// Static description of one protocol instance and its sub-instances; the
// simulator instantiates it once per party.
struct NodeSpec {
  std::string label;
  std::function<std::unique_ptr<Machine>(int self)> make;
  std::vector<NodeSpec> children;
};

}  // namespace baext::sim
