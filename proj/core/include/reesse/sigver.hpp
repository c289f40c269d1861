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

// Signing and verification.
//
// A signature is a pair (Q, U) of residues mod M. Verification compares
//
//   X = (alpha Q^-1)^(Q U T) * alpha^(Q^n)
//   Y = (Gbar^Q U^-1)^(U S T) * beta^(H Q^(n-1) + H^n)
//
// where Gbar = prod C_i^b_i over the digest bits and H is the digest value.

#ifndef REESSE_SIGVER_HPP_
#define REESSE_SIGVER_HPP_

#include <cstdint>
#include <span>
#include <string_view>

#include "reesse/common.hpp"
#include "reesse/keygen.hpp"

namespace reesse {

// Identifier recorded in key files for the digest hash.
inline constexpr std::string_view kDigestHashName = "sha256";

struct Digest {
  BitString bits;  // b_1..b_n
  BigInt value;    // H = sum b_i 2^(i-1)
};

// First n bits (big-endian) of SHA-256(message). An all-zero truncation is
// rehashed with one counter byte appended until it is nonzero. n <= 256.
Digest digest(std::span<const std::uint8_t> message, unsigned n);
Digest digest(std::string_view message, unsigned n);

struct Signature {
  BigInt Q;
  BigInt U;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Intermediate values of one signing run, exposed for tests and tooling.
struct SignTranscript {
  Signature sig;
  Digest h;
  BigInt abar;   // the random multiplier of Dbar
  BigInt kbar;   // delta * sum b_i l(i) mod (M - 1)
  BigInt g0;     // (prod_{b_i = 0} A_i)^delta mod M
  BigInt R;
  BigInt ubar;
  BigInt gbar;   // delta^(abar Dbar) mod M
  BigInt xi;     // sum (delta Q)^(n-1-i) (H W)^i mod (M - 1)
  std::uint64_t r = 0;
};

// Throws kSearchExhausted if no r in [1, dbar * 2^16] is accepted.
SignTranscript sign_transcript(const PrivateKey& priv, const SystemParams& params,
                               std::span<const std::uint8_t> message, Rng& rng);

Signature sign(const PrivateKey& priv, const SystemParams& params, std::span<const std::uint8_t> message, Rng& rng);

// True iff X == Y. Malformed signatures are rejected, never thrown.
bool verify(const PublicKey& pub, std::span<const std::uint8_t> message, const Signature& sig);

// The two sides of the discriminant, for diagnostics.
struct Discriminant {
  BigInt X;
  BigInt Y;
};
Discriminant discriminant(const PublicKey& pub, const Digest& h, const Signature& sig);

inline std::span<const std::uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace reesse

#endif  // REESSE_SIGVER_HPP_
