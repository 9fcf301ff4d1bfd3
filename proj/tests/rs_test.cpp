#include "baext/rs.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "baext/rng.hpp"

namespace baext {
namespace {

int shared_symbols(const rs::Codeword& a, const rs::Codeword& b) {
  int c = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (*a[i] == *b[i]) ++c;
  return c;
}

TEST(Rs, SymbolBitsForExamples) {
  EXPECT_EQ(rs::symbol_bits_for(8, 6, 2), 4);
  EXPECT_EQ(rs::symbol_bits_for(8, 20, 2), 8);
  EXPECT_EQ(rs::symbol_bits_for(1024, 10, 4), 256);
  EXPECT_THROW(rs::symbol_bits_for(0, 6, 2), std::invalid_argument);
  EXPECT_THROW(rs::symbol_bits_for(8, 6, 7), std::invalid_argument);
}

TEST(Rs, AllZeroMessageEncodesToAllZero) {
  auto p = rs::CodeParams::make(8, 6, 2);
  auto cw = rs::encode(Bits(8), p);
  for (auto& s : cw) {
    ASSERT_TRUE(s.has_value());
    for (uint64_t v : *s) EXPECT_EQ(v, 0u);
  }
}

TEST(Rs, RoundTripNoCorruption) {
  Rng rng(7);
  for (auto [ell, n, k] : {std::tuple{8, 6, 2}, {12, 6, 3}, {64, 6, 2}, {100, 13, 5}, {1024, 10, 4}}) {
    auto p = rs::CodeParams::make(ell, n, k);
    for (int i = 0; i < 20; ++i) {
      Bits m = Bits::random(ell, rng);
      auto dec = rs::decode(rs::encode(m, p), p);
      ASSERT_TRUE(dec.has_value());
      EXPECT_EQ(*dec, m);
    }
  }
}

TEST(Rs, DistinctMessagesShareAtMostKMinus1Symbols) {
  // Exhaustive over all message pairs at ell=8, n=6, k=2.
  auto p = rs::CodeParams::make(8, 6, 2);
  std::vector<rs::Codeword> words;
  for (uint64_t m = 0; m < 256; ++m) words.push_back(rs::encode(Bits::from_u64(m, 8), p));
  for (size_t a = 0; a < words.size(); ++a)
    for (size_t b = a + 1; b < words.size(); ++b)
      ASSERT_LE(shared_symbols(words[a], words[b]), p.k - 1);
}

TEST(Rs, EncodeInjectiveSmallLengths) {
  for (auto [ell, n, k] : {std::tuple{8, 6, 2}, {12, 6, 3}}) {
    auto p = rs::CodeParams::make(ell, n, k);
    std::set<std::vector<uint64_t>> seen;
    for (uint64_t m = 0; m < (uint64_t{1} << ell); ++m) {
      auto cw = rs::encode(Bits::from_u64(m, ell), p);
      std::vector<uint64_t> flat;
      for (auto& s : cw)
        for (uint64_t v : *s) flat.push_back(v);
      ASSERT_TRUE(seen.insert(flat).second) << "duplicate codeword for message " << m;
    }
  }
}

// Applies c errors at `err` positions (values guaranteed different from the
// original symbol) and erases the `gone` positions.
rs::Codeword corrupt(const rs::Codeword& cw, const std::vector<int>& err, const std::vector<int>& gone,
                     const rs::CodeParams& p, Rng& rng) {
  rs::Codeword out = cw;
  for (int i : err) {
    rs::Symbol s = *out[i];
    int comp = int(rng.next_below(s.size()));
    uint64_t delta = 1 + rng.next_below((uint64_t{1} << p.field_width) - 1);
    s[comp] ^= delta;
    out[i] = s;
  }
  for (int i : gone) out[i] = std::nullopt;
  return out;
}

void for_each_placement(int n, int c, int d, const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
  std::vector<int> err(c), gone(d);
  std::function<void(int, int)> pick_err = [&](int start, int left) {
    if (left == 0) {
      std::function<void(int, int)> pick_gone = [&](int gstart, int gleft) {
        if (gleft == 0) {
          fn(err, gone);
          return;
        }
        for (int i = gstart; i < n; ++i) {
          bool used = false;
          for (int e : err)
            if (e == i) used = true;
          if (used) continue;
          gone[d - gleft] = i;
          pick_gone(i + 1, gleft - 1);
        }
      };
      pick_gone(0, d);
      return;
    }
    for (int i = start; i < n; ++i) {
      err[c - left] = i;
      pick_err(i + 1, left - 1);
    }
  };
  pick_err(0, c);
}

TEST(Rs, ErrorErasureExhaustivePlacementsSmall) {
  // n=6, k=2: every placement with 2c + d <= 4, random corruption values.
  auto p = rs::CodeParams::make(8, 6, 2);
  Rng rng(21);
  int cases = 0;
  for (int m_i = 0; m_i < 16; ++m_i) {
    Bits m = Bits::random(8, rng);
    auto cw = rs::encode(m, p);
    for (int c = 0; 2 * c <= p.n - p.k; ++c)
      for (int d = 0; 2 * c + d <= p.n - p.k; ++d)
        for_each_placement(p.n, c, d, [&](const std::vector<int>& err, const std::vector<int>& gone) {
          auto dec = rs::decode(corrupt(cw, err, gone, p, rng), p);
          ASSERT_TRUE(dec.has_value());
          ASSERT_EQ(*dec, m);
          ++cases;
        });
  }
  EXPECT_EQ(cases, 16 * 168);  // 168 placements satisfy 2c + d <= 4 at n=6
}

TEST(Rs, InterleavedErrorErasure) {
  // ell=64 at n=6, k=2 interleaves 8 components of GF(16).
  auto p = rs::CodeParams::make(64, 6, 2);
  EXPECT_EQ(p.components, 8);
  Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    Bits m = Bits::random(64, rng);
    auto cw = rs::encode(m, p);
    auto dec = rs::decode(corrupt(cw, {int(rng.next_below(6))}, {}, p, rng), p);
    ASSERT_TRUE(dec.has_value());
    EXPECT_EQ(*dec, m);
    int e1 = int(rng.next_below(6));
    int e2 = (e1 + 1 + int(rng.next_below(5))) % 6;
    int e3 = int(rng.next_below(6));
    if (e3 == e1 || e3 == e2) e3 = -1;
    std::vector<int> gone = {e1, e2};
    auto dec2 = rs::decode(corrupt(cw, e3 >= 0 ? std::vector<int>{e3} : std::vector<int>{}, gone, p, rng), p);
    ASSERT_TRUE(dec2.has_value());
    EXPECT_EQ(*dec2, m);
  }
}

TEST(Rs, DegenerateInputs) {
  auto p = rs::CodeParams::make(8, 6, 2);
  rs::Codeword all_missing(6, std::nullopt);
  EXPECT_NO_THROW(rs::decode(all_missing, p));
  EXPECT_THROW(rs::decode(rs::Codeword(5), p), std::invalid_argument);
  EXPECT_THROW(rs::encode(Bits(7), p), std::invalid_argument);
}

TEST(Rs, SymbolPackRoundTrip) {
  auto p = rs::CodeParams::make(100, 13, 5);
  Rng rng(5);
  Bits m = Bits::random(100, rng);
  auto cw = rs::encode(m, p);
  for (auto& s : cw) {
    Bits b = rs::pack_symbol(*s, p);
    EXPECT_EQ(int(b.size()), p.symbol_bits);
    auto back = rs::unpack_symbol(b, p);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, *s);
  }
  EXPECT_FALSE(rs::unpack_symbol(Bits(3), p).has_value());
}

}  // namespace
}  // namespace baext
