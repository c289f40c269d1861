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

// Coprime sequences, the run-length ("anomalous") exponent encoding of a
// plaintext block, and subset products over a modulus.

#ifndef REESSE_COPRIME_HPP_
#define REESSE_COPRIME_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "reesse/common.hpp"

namespace reesse {

// Inclusive integer range the A_i are drawn from. The default is {2..1201}.
struct IntPool {
  std::uint64_t lo = 2;
  std::uint64_t hi = 1201;
};

inline constexpr std::uint64_t kDefaultPoolCeiling = 1201;

struct CoprimeCheck {
  bool ok = true;
  // Values (A_i, A_j, A_k) of the first violation: gcd(A_i, A_j) = h > 1 and
  // A_i/h or A_j/h divides A_k. For a repeated value, A_i == A_j and A_k = 0.
  std::array<std::uint64_t, 3> witness{};

  explicit operator bool() const { return ok; }
};

// A sequence of pairwise distinct integers >= 2 where every pair either is
// coprime or, with h = gcd(A_i, A_j) > 1, neither A_i/h nor A_j/h divides a
// third element. With fewer than three elements the divisibility clause is
// vacuous.
CoprimeCheck validate_coprime(std::span<const std::uint64_t> seq);

// Shuffles the pool and greedily keeps values that preserve the coprime
// property. Retries with fresh shuffles; the last attempt takes primes first.
// Throws kPoolExhausted if no attempt reaches length n.
std::vector<std::uint64_t> sample_coprime(std::size_t n, IntPool pool, Rng& rng,
                                          std::size_t max_attempts = 64);

// Run-length exponents b-bar for a nonzero bit string: each 1-bit takes one
// plus the zero run before it, and the rightmost 1-bit also absorbs the
// trailing zero run. The exponents always sum to bits.size().
std::vector<unsigned> encode_anomalous(std::span<const std::uint8_t> bits);

// Inverse of encode_anomalous. Throws kMalformed when no bit string encodes
// to `exps`.
BitString decode_anomalous(std::span<const unsigned> exps);

// prod seq_i^exps_i mod M.
BigInt anomalous_product(std::span<const BigInt> seq, std::span<const unsigned> exps, const BigInt& modulus);

}  // namespace reesse

#endif  // REESSE_COPRIME_HPP_
