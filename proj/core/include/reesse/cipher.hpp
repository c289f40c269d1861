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

#ifndef REESSE_CIPHER_HPP_
#define REESSE_CIPHER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "reesse/common.hpp"
#include "reesse/keygen.hpp"

namespace reesse {

struct Ciphertext {
  BigInt gbar;  // in (0, M)

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

// gbar = prod C_i^bbar_i mod M with bbar the run-length exponents of `bits`.
// Throws kZeroPlaintext for the all-zero block, kBadLength on size mismatch.
Ciphertext encrypt(const PublicKey& pub, std::span<const std::uint8_t> bits);

struct Decryption {
  BitString bits;
  std::uint64_t lever_sum = 0;  // the k at which the decode was accepted
};

// Recovers the plaintext block. Lever sums k = n, n + 2, ..., n(2n - 1) are
// tried in increasing order; at each k the integer G0 * W^-k mod M is peeled
// by the A_i, and a candidate is accepted only after re-encryption matches
// the ciphertext. Throws kNoDecode when nothing in range is confirmed.
Decryption decrypt_detailed(const PrivateKey& priv, const SystemParams& params, const Ciphertext& ct);

BitString decrypt(const PrivateKey& priv, const SystemParams& params, const Ciphertext& ct);

// Peels `value` by the sequence A using the zero-run rule (largest power
// first, then backtracking) and returns every bit string whose anomalous
// product over A equals `value` exactly, stopping at `limit` results.
std::vector<BitString> peel_anomalous(const BigInt& value, std::span<const std::uint64_t> A, std::size_t limit = 1);

}  // namespace reesse

#endif  // REESSE_CIPHER_HPP_
