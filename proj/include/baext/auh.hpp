#pragma once

#include <cstdint>

#include "baext/bits.hpp"

namespace baext::auh {

// Key/hash width for statistical security lambda, message length ell and n
// parties: kappa = ceil(lambda + log2(ell*n^2) + 1), computed exactly in
// integers. Throws if the result exceeds the supported 64 bits.
int kappa_bits(int lambda, uint64_t ell, int n);

struct HashParams {
  int lambda = 0;
  uint64_t msg_len = 0;
  int parties = 0;
  int kappa = 0;

  static HashParams make(int lambda, uint64_t ell, int n);
  // Below kappa bits, peers exchange raw values instead of hashes.
  bool hashing_applies() const { return msg_len >= uint64_t(kappa); }
  bool operator==(const HashParams&) const = default;
};

// Zero-extends m to the next multiple of kappa bits.
Bits pad(const Bits& m, int kappa);

// Polynomial hash over GF(2^kappa): the message chunks are the coefficients
// and the key is the evaluation point, so two distinct equal-length padded
// messages collide on at most (len/kappa) of the 2^kappa keys.
uint64_t hash(uint64_t key, const Bits& padded, int kappa);

uint64_t joint_key(uint64_t ki, uint64_t kj, int kappa);

}  // namespace baext::auh
