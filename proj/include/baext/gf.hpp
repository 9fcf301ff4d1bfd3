#pragma once

#include <cstdint>

namespace baext::gf {

// Element of GF(2^w), 1 <= w <= 64. Arithmetic is only defined between
// elements of equal width; mixing widths is a contract violation.
struct Elem {
  uint64_t v = 0;
  int w = 0;

  bool operator==(const Elem&) const = default;
};

inline Elem elem(uint64_t v, int w) { return Elem{v, w}; }

// Reduction polynomial for GF(2^w): x^w plus the terms encoded in the
// returned mask (bit i = coefficient of x^i). Chosen as the numerically
// smallest mask that makes x^w + mask irreducible over GF(2); the choice is
// frozen by unit tests (e.g. w=4 -> x^4+x+1).
uint64_t modulus_mask(int w);

Elem add(Elem a, Elem b);
Elem mul(Elem a, Elem b);
Elem inv(Elem a);
Elem pow_u64(Elem a, uint64_t e);

// Carry-less multiply of two w-bit values reduced mod the width's polynomial.
// The generic path behind mul(); exposed so tests can cross-check the
// table-accelerated path against it.
uint64_t mul_generic(uint64_t a, uint64_t b, int w);

}  // namespace baext::gf
