#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "baext/bits.hpp"

namespace baext::rs {

// (n, k) Reed-Solomon code over GF(2^w) carrying ell message bits.
//
// A codeword symbol is `components` field elements sharing the evaluation
// point x = index+1; when ell exceeds k*w the code is the interleaving of
// `components` independent RS codes, and a symbol is correct only if every
// component matches. symbol_bits = field_width * components.
struct CodeParams {
  int n = 0;
  int k = 0;
  uint64_t msg_len = 0;
  int field_width = 0;
  int components = 0;
  int symbol_bits = 0;

  static CodeParams make(uint64_t ell, int n, int k);
  bool operator==(const CodeParams&) const = default;
};

// Smallest supported symbol width for the given parameters: the base field
// width is drawn from the tier {4, 8, 16, 32, 64} (smallest with 2^w > n)
// and widened in multiples until k symbols hold ell bits.
int symbol_bits_for(uint64_t ell, int n, int k);

using Symbol = std::vector<uint64_t>;               // `components` field values
using Codeword = std::vector<std::optional<Symbol>>;  // nullopt = missing

Codeword encode(const Bits& msg, const CodeParams& p);

// Error-and-erasure decoding (Berlekamp-Welch per component). Whenever some
// message m' has c incorrect and d missing symbols with 2c + d <= n - k
// relative to encode(m'), returns m'. Otherwise may return any string or
// nullopt; callers that need certainty re-encode and compare.
std::optional<Bits> decode(const Codeword& cw, const CodeParams& p);

Bits pack_symbol(const Symbol& s, const CodeParams& p);
std::optional<Symbol> unpack_symbol(const Bits& b, const CodeParams& p);

}  // namespace baext::rs
