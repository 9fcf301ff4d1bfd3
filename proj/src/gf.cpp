#include "baext/gf.hpp"

#include <array>
#include <memory>
#include <stdexcept>
#include <vector>

namespace baext::gf {

namespace {

using u128 = unsigned __int128;

void check_width(int w) {
  if (w < 1 || w > 64) throw std::invalid_argument("gf: width out of range [1,64]");
}

// Polynomials over GF(2) of degree <= 64 as u128 bit masks (full polynomial,
// leading term included).

u128 poly_mulmod(u128 a, u128 b, u128 f, int w) {
  u128 acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> w) & 1) a ^= f;
  }
  return acc;
}

int poly_deg(u128 p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

u128 poly_mod(u128 a, u128 b) {
  int db = poly_deg(b);
  int da = poly_deg(a);
  while (da >= db) {
    a ^= b << (da - db);
    da = poly_deg(a);
  }
  return a;
}

u128 poly_gcd(u128 a, u128 b) {
  while (b) {
    u128 r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

// x^(2^k) mod f via k squarings.
u128 poly_x_pow_pow2(int k, u128 f, int w) {
  u128 r = poly_mod(2, f);  // x
  for (int i = 0; i < k; ++i) r = poly_mulmod(r, r, f, w);
  return r;
}

// Rabin's irreducibility test for f of degree w over GF(2).
bool irreducible(u128 f, int w) {
  if (poly_x_pow_pow2(w, f, w) != poly_mod(2, f)) return false;
  for (int p = 2; p <= w; ++p) {
    if (w % p) continue;
    bool prime = true;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    u128 h = poly_x_pow_pow2(w / p, f, w) ^ poly_mod(2, f);  // x^(2^(w/p)) - x
    if (poly_deg(poly_gcd(h, f)) != 0) return false;
  }
  return true;
}

struct WidthCtx {
  uint64_t mask = 0;      // reduction terms below x^w
  bool tables = false;    // log/exp acceleration (w <= 16)
  std::vector<uint64_t> exp;
  std::vector<int32_t> log;
};

uint64_t find_modulus_mask(int w) {
  for (uint64_t m = 1;; m += 2) {
    u128 f = (u128(1) << w) | m;
    if (irreducible(f, w)) return m;
    if (w < 64 && m >= (uint64_t{1} << w)) break;
  }
  throw std::logic_error("gf: no irreducible polynomial found");
}

uint64_t clmul_reduce(uint64_t a, uint64_t b, int w, uint64_t mask) {
  u128 f = (u128(1) << w) | mask;
  u128 acc = 0;
  u128 aa = a;
  while (b) {
    if (b & 1) acc ^= aa;
    b >>= 1;
    aa <<= 1;
    if ((aa >> w) & 1) aa ^= f;
  }
  // aa stayed reduced, so acc is already < 2^w when inputs were.
  return uint64_t(acc);
}

const WidthCtx& ctx(int w) {
  check_width(w);
  static std::array<std::unique_ptr<WidthCtx>, 65> cache;
  if (!cache[w]) {
    auto c = std::make_unique<WidthCtx>();
    c->mask = find_modulus_mask(w);
    if (w <= 16) {
      size_t order = (size_t{1} << w) - 1;
      // Find a multiplicative generator by brute force; the smallest-mask
      // polynomial is not always primitive, so x alone may not generate.
      for (uint64_t g = 2; g < (uint64_t{1} << w); ++g) {
        std::vector<uint64_t> exp;
        exp.reserve(order);
        uint64_t x = 1;
        for (size_t i = 0; i < order; ++i) {
          exp.push_back(x);
          x = clmul_reduce(x, g, w, c->mask);
          if (x == 1 && i + 1 < order) break;  // order of g divides i+1: not a generator
        }
        if (exp.size() == order && x == 1) {
          c->exp = std::move(exp);
          c->log.assign(size_t{1} << w, -1);
          for (size_t i = 0; i < order; ++i) c->log[c->exp[i]] = int32_t(i);
          c->tables = true;
          break;
        }
      }
    }
    cache[w] = std::move(c);
  }
  return *cache[w];
}

}  // namespace

uint64_t modulus_mask(int w) { return ctx(w).mask; }

uint64_t mul_generic(uint64_t a, uint64_t b, int w) { return clmul_reduce(a, b, w, ctx(w).mask); }

Elem add(Elem a, Elem b) {
  if (a.w != b.w) throw std::invalid_argument("gf: width mismatch in add");
  check_width(a.w);
  return {a.v ^ b.v, a.w};
}

Elem mul(Elem a, Elem b) {
  if (a.w != b.w) throw std::invalid_argument("gf: width mismatch in mul");
  const WidthCtx& c = ctx(a.w);
  if (a.v == 0 || b.v == 0) return {0, a.w};
  if (c.tables) {
    size_t order = (size_t{1} << a.w) - 1;
    size_t s = size_t(c.log[a.v]) + size_t(c.log[b.v]);
    if (s >= order) s -= order;
    return {c.exp[s], a.w};
  }
  return {clmul_reduce(a.v, b.v, a.w, c.mask), a.w};
}

Elem inv(Elem a) {
  const WidthCtx& c = ctx(a.w);
  if (a.v == 0) throw std::domain_error("gf: zero has no inverse");
  if (c.tables) {
    size_t order = (size_t{1} << a.w) - 1;
    size_t l = size_t(c.log[a.v]);
    return {c.exp[(order - l) % order], a.w};
  }
  // Fermat: a^(2^w - 2).
  Elem r{1, a.w};
  Elem base = a;
  for (int i = 1; i < a.w; ++i) {
    base = mul(base, base);
    r = mul(r, base);
  }
  return r;
}

Elem pow_u64(Elem a, uint64_t e) {
  Elem r{1, a.w};
  Elem base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

}  // namespace baext::gf
