#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "baext/rng.hpp"

namespace baext {

// Fixed-length bitstring. Bit i lives at bytes_[i/8], position i%8 (LSB
// first), so chunk() of the low bits of a value round-trips with from_u64.
class Bits {
 public:
  Bits() = default;
  explicit Bits(size_t nbits) : size_(nbits), bytes_((nbits + 7) / 8, 0) {}

  static Bits from_u64(uint64_t v, size_t nbits);
  static Bits random(size_t nbits, Rng& rng);

  size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(size_t i) const { return (bytes_[i / 8] >> (i % 8)) & 1; }
  void set(size_t i, bool b) {
    uint8_t mask = uint8_t(1) << (i % 8);
    if (b)
      bytes_[i / 8] |= mask;
    else
      bytes_[i / 8] &= uint8_t(~mask);
  }

  // Reads len bits starting at `start` as an integer (bit start -> LSB).
  // Bits past the end read as zero. len <= 64.
  uint64_t chunk(size_t start, size_t len) const;
  void set_chunk(size_t start, size_t len, uint64_t v);

  bool is_zero() const;

  // "<nbits>:<hex>" with hex encoding the byte array low byte first.
  std::string to_string() const;
  static Bits parse(const std::string& s);

  bool operator==(const Bits& o) const { return size_ == o.size_ && bytes_ == o.bytes_; }
  std::strong_ordering operator<=>(const Bits& o) const;

 private:
  size_t size_ = 0;
  std::vector<uint8_t> bytes_;
};

}  // namespace baext
