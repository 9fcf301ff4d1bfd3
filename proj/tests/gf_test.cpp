#include "baext/gf.hpp"

#include <gtest/gtest.h>

#include "baext/rng.hpp"

namespace baext {
namespace {

using gf::elem;

// Reference GF(2^4) multiply mod x^4+x+1, written independently of the
// library path: schoolbook cross terms, then top-down reduction.
uint64_t ref_mul16(uint64_t a, uint64_t b) {
  uint64_t prod = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (((a >> i) & 1) && ((b >> j) & 1)) prod ^= uint64_t{1} << (i + j);
  for (int d = 6; d >= 4; --d)
    if ((prod >> d) & 1) prod ^= uint64_t{0x13} << (d - 4);
  return prod;
}

// Independent irreducibility check (Rabin) for the frozen reduction
// polynomials, mirroring none of the library's internals.
bool ref_irreducible(unsigned __int128 f, int w) {
  auto deg = [](unsigned __int128 p) {
    int d = -1;
    while (p) {
      ++d;
      p >>= 1;
    }
    return d;
  };
  auto red = [&](unsigned __int128 a) {
    while (deg(a) >= w) a ^= f << (deg(a) - w);
    return a;
  };
  auto mulmod = [&](unsigned __int128 a, unsigned __int128 b) {
    a = red(a);
    b = red(b);
    unsigned __int128 acc = 0;
    for (int i = deg(b); i >= 0; --i) {
      acc <<= 1;
      if (deg(acc) == w) acc ^= f;
      if ((b >> i) & 1) acc ^= a;
    }
    return acc;
  };
  auto xq = [&](int k) {
    unsigned __int128 r = red(2);
    for (int i = 0; i < k; ++i) r = mulmod(r, r);
    return r;
  };
  auto gcd = [&](unsigned __int128 a, unsigned __int128 b) {
    while (b) {
      while (deg(a) >= deg(b) && a) a ^= b << (deg(a) - deg(b));
      std::swap(a, b);
    }
    return a;
  };
  if (xq(w) != red(2)) return false;
  for (int p = 2; p <= w; ++p) {
    bool prime = p >= 2;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime || w % p) continue;
    if (deg(gcd(xq(w / p) ^ red(2), f)) > 0) return false;
  }
  return true;
}

TEST(Gf, AddIsXor) {
  EXPECT_EQ(gf::add(elem(0x3, 4), elem(0x3, 4)).v, 0x0u);
  EXPECT_EQ(gf::add(elem(0x3, 4), elem(0x0, 4)).v, 0x3u);
  EXPECT_EQ(gf::add(elem(0xA5, 8), elem(0x5A, 8)).v, 0xFFu);
}

TEST(Gf, WidthMismatchRejected) {
  EXPECT_THROW(gf::add(elem(1, 4), elem(1, 8)), std::invalid_argument);
  EXPECT_THROW(gf::mul(elem(1, 4), elem(1, 8)), std::invalid_argument);
}

TEST(Gf, FrozenModuli) {
  // Smallest-mask choices; w=4 is x^4+x+1.
  EXPECT_EQ(gf::modulus_mask(4), 0x3u);
  for (int w = 1; w <= 64; ++w) {
    unsigned __int128 f = ((unsigned __int128)1 << w) | gf::modulus_mask(w);
    EXPECT_TRUE(ref_irreducible(f, w)) << "width " << w;
  }
}

TEST(Gf, MulMatchesReferenceTableAllPairs) {
  for (uint64_t a = 0; a < 16; ++a)
    for (uint64_t b = 0; b < 16; ++b)
      EXPECT_EQ(gf::mul(elem(a, 4), elem(b, 4)).v, ref_mul16(a, b)) << a << "*" << b;
  // Value frozen from the reference table: 0x2 * 0x9 = x*(x^3+1) = x^4+x = 1.
  EXPECT_EQ(gf::mul(elem(0x2, 4), elem(0x9, 4)).v, 0x1u);
  EXPECT_EQ(ref_mul16(0x2, 0x9), 0x1u);
}

TEST(Gf, MulIdentityAndZero) {
  for (int w : {4, 8, 16, 32, 64}) {
    Rng rng(uint64_t(w) * 77 + 1);
    for (int i = 0; i < 200; ++i) {
      uint64_t x = rng.next_bits(w);
      EXPECT_EQ(gf::mul(elem(1, w), elem(x, w)).v, x);
      EXPECT_EQ(gf::mul(elem(0, w), elem(x, w)).v, 0u);
    }
  }
}

TEST(Gf, AxiomsExhaustiveSmallWidths) {
  for (int w : {1, 2, 3, 4}) {
    uint64_t size = uint64_t{1} << w;
    for (uint64_t a = 0; a < size; ++a)
      for (uint64_t b = 0; b < size; ++b) {
        EXPECT_EQ(gf::mul(elem(a, w), elem(b, w)).v, gf::mul(elem(b, w), elem(a, w)).v);
        for (uint64_t c = 0; c < size; ++c) {
          EXPECT_EQ(gf::mul(gf::mul(elem(a, w), elem(b, w)), elem(c, w)).v,
                    gf::mul(elem(a, w), gf::mul(elem(b, w), elem(c, w))).v);
          EXPECT_EQ(gf::mul(elem(a, w), gf::add(elem(b, w), elem(c, w))).v,
                    gf::mul(elem(a, w), elem(b, w)).v ^ gf::mul(elem(a, w), elem(c, w)).v);
        }
      }
  }
}

TEST(Gf, AxiomsExhaustiveWidth8) {
  // Full associativity/distributivity sweep over GF(256).
  for (uint64_t a = 0; a < 256; ++a)
    for (uint64_t b = 0; b < 256; ++b)
      for (uint64_t c = 0; c < 256; ++c) {
        uint64_t ab = gf::mul(elem(a, 8), elem(b, 8)).v;
        uint64_t bc = gf::mul(elem(b, 8), elem(c, 8)).v;
        ASSERT_EQ(gf::mul(elem(ab, 8), elem(c, 8)).v, gf::mul(elem(a, 8), elem(bc, 8)).v);
        ASSERT_EQ(gf::mul(elem(a, 8), elem(b ^ c, 8)).v, ab ^ gf::mul(elem(a, 8), elem(c, 8)).v);
      }
}

TEST(Gf, AxiomsRandomizedLargeWidths) {
  for (int w : {16, 17, 32, 51, 64}) {
    Rng rng{uint64_t(w)};
    for (int i = 0; i < 100000; ++i) {
      uint64_t a = rng.next_bits(w), b = rng.next_bits(w), c = rng.next_bits(w);
      uint64_t ab = gf::mul(elem(a, w), elem(b, w)).v;
      uint64_t bc = gf::mul(elem(b, w), elem(c, w)).v;
      ASSERT_EQ(gf::mul(elem(ab, w), elem(c, w)).v, gf::mul(elem(a, w), elem(bc, w)).v);
      ASSERT_EQ(gf::mul(elem(a, w), elem(b ^ c, w)).v, ab ^ gf::mul(elem(a, w), elem(c, w)).v);
      ASSERT_EQ(ab, gf::mul(elem(b, w), elem(a, w)).v);
    }
  }
}

TEST(Gf, TablePathMatchesGenericPath) {
  for (int w : {4, 8}) {
    uint64_t size = uint64_t{1} << w;
    for (uint64_t a = 0; a < size; ++a)
      for (uint64_t b = 0; b < size; ++b)
        ASSERT_EQ(gf::mul(elem(a, w), elem(b, w)).v, gf::mul_generic(a, b, w));
  }
  Rng rng(99);
  for (int i = 0; i < 20000; ++i) {
    uint64_t a = rng.next_bits(16), b = rng.next_bits(16);
    ASSERT_EQ(gf::mul(elem(a, 16), elem(b, 16)).v, gf::mul_generic(a, b, 16));
  }
}

TEST(Gf, InverseExhaustiveWidth4) {
  EXPECT_EQ(gf::inv(elem(1, 4)).v, 1u);
  for (uint64_t a = 1; a < 16; ++a) EXPECT_EQ(gf::mul(elem(a, 4), gf::inv(elem(a, 4))).v, 1u);
  EXPECT_THROW(gf::inv(elem(0, 4)), std::domain_error);
}

TEST(Gf, InverseUniqueExhaustiveWidth8) {
  // Unique inverses: the map a -> inv(a) must be an involution covering all
  // nonzero elements exactly once.
  std::vector<bool> seen(256, false);
  for (uint64_t a = 1; a < 256; ++a) {
    uint64_t ia = gf::inv(elem(a, 8)).v;
    EXPECT_EQ(gf::mul(elem(a, 8), elem(ia, 8)).v, 1u);
    EXPECT_FALSE(seen[ia]);
    seen[ia] = true;
    EXPECT_EQ(gf::inv(elem(ia, 8)).v, a);
  }
}

TEST(Gf, InverseRandomizedLargeWidths) {
  for (int w : {16, 17, 32, 51, 64}) {
    Rng rng(uint64_t(w) + 1000);
    for (int i = 0; i < 5000; ++i) {
      uint64_t a = rng.next_bits(w);
      if (a == 0) continue;
      EXPECT_EQ(gf::mul(elem(a, w), gf::inv(elem(a, w))).v, 1u);
    }
  }
}

}  // namespace
}  // namespace baext
