// Copyright 2026 The reesse1plus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "reesse/attacks.hpp"
#include "reesse/cipher.hpp"
#include "reesse/coprime.hpp"
#include "reesse/numtheory.hpp"
#include "test_support.hpp"

namespace reesse {
namespace {

using testing::bits_of;
using testing::desk_key;
using testing::random_nonzero_bits;

TEST(EncryptTest, AllOnesIsPlainProduct) {
  const auto& k = desk_key(8, 1);
  BigInt prod = 1;
  for (const auto& c : k.keys.pub.C) prod = prod * c % k.keys.pub.M;
  EXPECT_EQ(encrypt(k.keys.pub, BitString(8, 1)).gbar, prod);
}

TEST(EncryptTest, WorkedExampleAnomalousProduct) {
  const auto ex = example1_slack_key();
  PublicKey pub;
  pub.n = 6;
  pub.M = ex.pub.M;
  pub.C = ex.pub.C;
  const BigInt& M = pub.M;
  const BigInt expected = mod_pow(pub.C[1], BigInt(2), M) * mod_pow(pub.C[5], BigInt(4), M) % M;
  EXPECT_EQ(encrypt(pub, BitString{0, 1, 0, 0, 0, 1}).gbar, expected);
}

TEST(EncryptTest, RejectsZeroAndWrongLength) {
  const auto& k = desk_key(8, 1);
  try {
    encrypt(k.keys.pub, BitString(8, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kZeroPlaintext);
  }
  try {
    encrypt(k.keys.pub, BitString(7, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kBadLength);
  }
}

TEST(DecryptTest, ExhaustiveAtSix) {
  const auto& k = desk_key(6, 9);
  for (std::uint64_t v = 1; v < 64; ++v) {
    const auto bits = bits_of(v, 6);
    ASSERT_EQ(decrypt(k.keys.priv, k.params, encrypt(k.keys.pub, bits)), bits) << v;
  }
}

TEST(DecryptTest, RandomRoundTripsAcrossKeys) {
  Rng rng(12);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (unsigned n : {8u, 12u, 16u}) {
      const auto& k = desk_key(n, seed);
      for (int i = 0; i < 100; ++i) {
        const auto bits = random_nonzero_bits(n, rng);
        ASSERT_EQ(decrypt(k.keys.priv, k.params, encrypt(k.keys.pub, bits)), bits);
      }
    }
  }
}

// G0 W^-k equals the integer prod A_i^bbar_i at the true lever sum.
TEST(DecryptTest, CorrectnessIdentity) {
  Rng rng(13);
  const auto& k = desk_key(10, 4);
  const auto& priv = k.keys.priv;
  const BigInt& M = k.params.M;
  for (int i = 0; i < 100; ++i) {
    const auto bits = random_nonzero_bits(10, rng);
    const auto exps = encode_anomalous(bits);
    std::uint64_t lever_sum = 0;
    BigInt integer_product = 1;
    for (unsigned j = 0; j < 10; ++j) {
      lever_sum += exps[j] * priv.lever[j];
      for (unsigned e = 0; e < exps[j]; ++e) integer_product *= static_cast<unsigned long>(priv.A[j]);
    }
    ASSERT_LT(integer_product, M);
    const BigInt g0 = mod_pow(encrypt(k.keys.pub, bits).gbar, priv.delta_inv, M);
    const BigInt w_k = mod_pow(priv.W, BigInt(static_cast<unsigned long>(lever_sum)), M);
    EXPECT_EQ(g0 * mod_inv(w_k, M) % M, integer_product);

    const auto d = decrypt_detailed(priv, k.params, encrypt(k.keys.pub, bits));
    EXPECT_EQ(d.lever_sum, lever_sum);
    EXPECT_GE(lever_sum, 10u);
    EXPECT_LE(lever_sum, 10u * 19u);
    EXPECT_EQ(lever_sum % 2, 0u);
  }
}

TEST(DecryptTest, LeverSumRangeAndParity) {
  Rng rng(14);
  for (unsigned n : {4u, 6u, 16u, 64u, 128u}) {
    const auto omega = omega_simple(n);
    for (int i = 0; i < 200; ++i) {
      const auto lever = sample_lever(n, omega, rng);
      const auto exps = encode_anomalous(random_nonzero_bits(n, rng));
      std::uint64_t k = 0;
      for (unsigned j = 0; j < n; ++j) k += exps[j] * lever[j];
      EXPECT_GE(k, n);
      EXPECT_LE(k, static_cast<std::uint64_t>(n) * (2 * n - 1));
      EXPECT_EQ(k % 2, n % 2);
    }
  }
}

TEST(DecryptTest, TamperedCiphertextDoesNotDecode) {
  Rng rng(15);
  const auto& k = desk_key(12, 2);
  int no_decode = 0;
  for (int i = 0; i < 20; ++i) {
    const auto ct = encrypt(k.keys.pub, random_nonzero_bits(12, rng));
    const BigInt r = rng.uniform_range(BigInt(2), k.params.M - 1);
    try {
      decrypt(k.keys.priv, k.params, Ciphertext{ct.gbar * r % k.params.M});
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kNoDecode);
      ++no_decode;
    }
  }
  EXPECT_EQ(no_decode, 20);
}

TEST(DecryptTest, HonestCiphertextsNeverFail) {
  Rng rng(16);
  for (int i = 0; i < 1000; ++i) {
    const auto& k = desk_key(8, 1 + i % 5);
    const auto bits = random_nonzero_bits(8, rng);
    ASSERT_NO_THROW(decrypt(k.keys.priv, k.params, encrypt(k.keys.pub, bits)));
  }
}

TEST(DecryptTest, UniquenessAtSix) {
  for (std::uint64_t seed = 20; seed < 25; ++seed) {
    const auto& k = desk_key(6, seed);
    std::set<BigInt> seen;
    for (std::uint64_t v = 1; v < 64; ++v) EXPECT_TRUE(seen.insert(encrypt(k.keys.pub, bits_of(v, 6)).gbar).second);
  }
}

TEST(PeelTest, BacktracksPastGreedyDeadEnd) {
  // Bits 0111 give exponents (0, 2, 1, 1). 30 divides 14^2 * 33 * 65, but
  // taking it as the first factor leads to a dead end.
  const std::vector<std::uint64_t> A{30, 14, 33, 65};
  const BigInt value = BigInt(14) * 14 * 33 * 65;
  const auto found = peel_anomalous(value, A, 4);
  ASSERT_FALSE(found.empty());
  EXPECT_NE(std::find(found.begin(), found.end(), BitString{0, 1, 1, 1}), found.end());
}

TEST(PeelTest, TailRule) {
  const std::vector<std::uint64_t> A{3, 5, 7, 11};
  // bits 0100 -> exponents (0, 4, 0, 0): 5^4.
  const auto found = peel_anomalous(BigInt(625), A, 2);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0], (BitString{0, 1, 0, 0}));
}

}  // namespace
}  // namespace reesse
