#include "baext/auh.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "baext/rng.hpp"

namespace baext {
namespace {

// Exact-integer oracle: kappa - lambda - 1 must be the smallest c with
// 2^c >= ell * n^2.
void check_kappa(int lambda, uint64_t ell, int n) {
  int kappa = auh::kappa_bits(lambda, ell, n);
  unsigned __int128 L = (unsigned __int128)ell * uint64_t(n) * uint64_t(n);
  int c = kappa - lambda - 1;
  ASSERT_GE(c, 0);
  EXPECT_GE((unsigned __int128)1 << c, L);
  if (c > 0) EXPECT_LT((unsigned __int128)1 << (c - 1), L);
}

TEST(Auh, KappaExamples) {
  EXPECT_EQ(auh::kappa_bits(8, 16, 4), 17);
  EXPECT_EQ(auh::kappa_bits(32, 1024, 10), 50);
  EXPECT_EQ(auh::kappa_bits(1, 1, 1), 2);
  check_kappa(8, 16, 4);
  check_kappa(32, 1024, 10);
  check_kappa(1, 1, 1);
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    int lambda = 1 + int(rng.next_below(32));
    uint64_t ell = 1 + rng.next_below(1 << 16);
    int n = 1 + int(rng.next_below(32));
    check_kappa(lambda, ell, n);
  }
  EXPECT_THROW(auh::kappa_bits(64, uint64_t{1} << 40, 1000), std::out_of_range);
}

TEST(Auh, PadExamples) {
  Rng rng(4);
  Bits m8 = Bits::random(8, rng);
  EXPECT_EQ(auh::pad(m8, 4), m8);
  Bits m9 = Bits::random(9, rng);
  Bits p9 = auh::pad(m9, 4);
  EXPECT_EQ(p9.size(), 12u);
  for (size_t i = 0; i < 9; ++i) EXPECT_EQ(p9.get(i), m9.get(i));
  for (size_t i = 9; i < 12; ++i) EXPECT_FALSE(p9.get(i));
  EXPECT_EQ(auh::pad(Bits::random(1, rng), 4).size(), 4u);
}

TEST(Auh, HashDeterministicAndZero) {
  Rng rng(5);
  Bits m = auh::pad(Bits::random(40, rng), 17);
  for (int i = 0; i < 50; ++i) {
    uint64_t k = rng.next_bits(17);
    EXPECT_EQ(auh::hash(k, m, 17), auh::hash(k, m, 17));
  }
  for (uint64_t k = 0; k < 16; ++k) EXPECT_EQ(auh::hash(k, Bits(8), 4), 0u);
  EXPECT_THROW(auh::hash(1, Bits(7), 4), std::invalid_argument);
}

TEST(Auh, CollisionBoundExhaustiveKappa4Len8) {
  // Every distinct pair of 8-bit padded messages collides on at most
  // (8/4) * 2^-4 of the 16 keys, i.e. 2 keys.
  const int kappa = 4;
  const int len = 8;
  std::vector<std::array<uint64_t, 16>> table(256);
  for (uint64_t m = 0; m < 256; ++m)
    for (uint64_t k = 0; k < 16; ++k) table[m][k] = auh::hash(k, Bits::from_u64(m, len), kappa);
  int worst = 0;
  for (uint64_t a = 0; a < 256; ++a)
    for (uint64_t b = a + 1; b < 256; ++b) {
      int coll = 0;
      for (int k = 0; k < 16; ++k) coll += table[a][k] == table[b][k];
      ASSERT_LE(coll, 2);
      worst = std::max(worst, coll);
    }
  // Difference polynomials here have degree <= 1, so the worst pair meets
  // exactly one key; the 2-key bound holds with slack.
  EXPECT_EQ(worst, 1);
}

TEST(Auh, JointKeyExamples) {
  EXPECT_EQ(auh::joint_key(3, 5, 4), 8u);
  EXPECT_EQ(auh::joint_key(15, 1, 4), 0u);
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    int kappa = 1 + int(rng.next_below(64));
    uint64_t a = rng.next_bits(kappa), b = rng.next_bits(kappa);
    EXPECT_EQ(auh::joint_key(a, b, kappa), auh::joint_key(b, a, kappa));
  }
}

TEST(Auh, JointKeyUniformityTransfer) {
  // With k_j uniform, the joint key is uniform: for any fixed k_i the map
  // k_j -> joint(k_i, k_j) must be a bijection. Exhaustive at kappa=4.
  for (uint64_t ki = 0; ki < 16; ++ki) {
    std::set<uint64_t> image;
    for (uint64_t kj = 0; kj < 16; ++kj) image.insert(auh::joint_key(ki, kj, 4));
    EXPECT_EQ(image.size(), 16u);
  }
}

TEST(Auh, HashParamsApplicability) {
  auto p = auh::HashParams::make(32, 1024, 10);
  EXPECT_EQ(p.kappa, 50);
  EXPECT_TRUE(p.hashing_applies());
  auto q = auh::HashParams::make(32, 8, 4);
  EXPECT_FALSE(q.hashing_applies());
}

}  // namespace
}  // namespace baext
