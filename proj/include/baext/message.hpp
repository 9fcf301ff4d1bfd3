#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "baext/bits.hpp"

namespace baext::sim {

enum class MsgType {
  Key,      // kappa-bit hashing key
  Hash,     // kappa-bit digest (or the raw value when ell < kappa)
  Sym,      // one indexed code symbol; empty value encodes the bot symbol
  SymPair,  // (sender's own symbol, receiver's symbol) as one message
  Suc,      // success indicator bit
  Mine,     // reconstruction: sender's own symbol
  Yours,    // reconstruction: receiver's symbol
  Bot,      // bot multicast
  BaBval,   // binary BA: estimate broadcast
  BaAux,    // binary BA: auxiliary vote
  BaDone,   // binary BA: decision echo
  BaDecide, // oracle backend: decision notification
};

std::string msg_type_name(MsgType t);
std::optional<MsgType> msg_type_parse(const std::string& s);

struct Payload {
  MsgType type = MsgType::Bot;
  std::optional<Bits> value;  // Sym: nullopt = bot symbol
  Bits value2;                // SymPair second slot
  uint64_t num = 0;           // key value or bit
  int round = 0;              // BA round

  bool operator==(const Payload&) const = default;

  static Payload key(uint64_t k) { return {MsgType::Key, std::nullopt, {}, k, 0}; }
  static Payload hash(Bits digest) { return {MsgType::Hash, std::move(digest), {}, 0, 0}; }
  static Payload sym(std::optional<Bits> s) { return {MsgType::Sym, std::move(s), {}, 0, 0}; }
  static Payload sym_pair(Bits own, Bits theirs) { return {MsgType::SymPair, std::move(own), std::move(theirs), 0, 0}; }
  static Payload suc(int b) { return {MsgType::Suc, std::nullopt, {}, uint64_t(b), 0}; }
  static Payload mine(Bits s) { return {MsgType::Mine, std::move(s), {}, 0, 0}; }
  static Payload yours(Bits s) { return {MsgType::Yours, std::move(s), {}, 0, 0}; }
  static Payload bot() { return {MsgType::Bot, std::nullopt, {}, 0, 0}; }
  static Payload ba_bval(int round, int bit) { return {MsgType::BaBval, std::nullopt, {}, uint64_t(bit), round}; }
  static Payload ba_aux(int round, int bit) { return {MsgType::BaAux, std::nullopt, {}, uint64_t(bit), round}; }
  static Payload ba_done(int bit) { return {MsgType::BaDone, std::nullopt, {}, uint64_t(bit), 0}; }
  static Payload ba_decide(int bit) { return {MsgType::BaDecide, std::nullopt, {}, uint64_t(bit), 0}; }
};

}  // namespace baext::sim
