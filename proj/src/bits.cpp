#include "baext/bits.hpp"

#include <stdexcept>

namespace baext {

Bits Bits::from_u64(uint64_t v, size_t nbits) {
  Bits b(nbits);
  b.set_chunk(0, nbits < 64 ? nbits : 64, v);
  return b;
}

Bits Bits::random(size_t nbits, Rng& rng) {
  Bits b(nbits);
  for (size_t i = 0; i < b.bytes_.size(); ++i) b.bytes_[i] = uint8_t(rng.next_u64());
  if (nbits % 8) b.bytes_.back() &= uint8_t((1u << (nbits % 8)) - 1);
  return b;
}

uint64_t Bits::chunk(size_t start, size_t len) const {
  uint64_t out = 0;
  for (size_t j = 0; j < len; ++j) {
    size_t i = start + j;
    if (i >= size_) break;
    out |= uint64_t(get(i)) << j;
  }
  return out;
}

void Bits::set_chunk(size_t start, size_t len, uint64_t v) {
  for (size_t j = 0; j < len; ++j) {
    size_t i = start + j;
    if (i >= size_) break;
    set(i, (v >> j) & 1);
  }
}

bool Bits::is_zero() const {
  for (uint8_t b : bytes_)
    if (b) return false;
  return true;
}

std::string Bits::to_string() const {
  static const char* kHex = "0123456789abcdef";
  std::string s = std::to_string(size_) + ":";
  for (uint8_t b : bytes_) {
    s += kHex[b & 0xf];
    s += kHex[b >> 4];
  }
  return s;
}

static int hex_val(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument("bad hex digit in bitstring");
}

Bits Bits::parse(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bitstring needs '<len>:<hex>'");
  size_t nbits = std::stoull(s.substr(0, colon));
  Bits b(nbits);
  std::string hex = s.substr(colon + 1);
  if (hex.size() != b.bytes_.size() * 2) throw std::invalid_argument("bitstring hex length mismatch");
  for (size_t i = 0; i < b.bytes_.size(); ++i)
    b.bytes_[i] = uint8_t(hex_val(hex[2 * i]) | (hex_val(hex[2 * i + 1]) << 4));
  if (nbits % 8 && (b.bytes_.back() >> (nbits % 8)) != 0)
    throw std::invalid_argument("bitstring has bits past its length");
  return b;
}

std::strong_ordering Bits::operator<=>(const Bits& o) const {
  if (auto c = size_ <=> o.size_; c != 0) return c;
  if (auto c = bytes_ <=> o.bytes_; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace baext
