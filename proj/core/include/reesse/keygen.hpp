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

// System parameters and key generation.
//
// The prime modulus M is built as
//
//   M = dbar * Dbar * T * prod(rho_i^e_i) * c + 1
//
// where dbar, Dbar, T are distinct primes, rho_i runs over the primes up to
// 2n, and the cofactor c is a product of primes we generate ourselves, so the
// factorization of M - 1 is always known.

#ifndef REESSE_KEYGEN_HPP_
#define REESSE_KEYGEN_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "reesse/common.hpp"
#include "reesse/coprime.hpp"
#include "reesse/lever.hpp"
#include "reesse/numtheory.hpp"

namespace reesse {

enum class Profile {
  kStrict,  // Dbar, T >= 2^n, prod(e_i) >= 2^10
  kDesk,    // prod(e_i) >= 4 and a small dbar so that n = 6..16 runs fast
};

std::string_view to_string(Profile p);
Profile parse_profile(std::string_view text);

struct SmoothFactor {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const SmoothFactor&, const SmoothFactor&) = default;
};

struct SystemParams {
  unsigned n = 0;
  BigInt dbar;  // small prime in (2n, 2^16]
  BigInt Dbar;
  BigInt T;
  BigInt S;     // root exponent, coprime to M - 1
  BigInt M;
  FactoredInteger mbar;  // M - 1, fully factored
  std::vector<SmoothFactor> smooth_part;
  Profile profile = Profile::kDesk;
  std::uint64_t pool_ceiling = kDefaultPoolCeiling;  // largest admissible A_i

  BigInt order_modulus() const { return M - 1; }
};

struct PublicKey {
  unsigned n = 0;
  BigInt M;
  BigInt S;
  BigInt T;
  std::vector<BigInt> C;
  BigInt alpha;
  BigInt beta;
};

struct PrivateKey {
  std::vector<std::uint64_t> A;
  LeverAssignment lever;
  BigInt W;
  BigInt delta;
  BigInt Dbar;
  BigInt dbar;
  BigInt hbar;
  // Derived; filled by complete_private_key().
  BigInt delta_inv;  // delta^-1 mod (M - 1)
  BigInt w_inv_sq;   // W^-2 mod M
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;
};

struct ParamOptions {
  std::uint64_t pool_ceiling = kDefaultPoolCeiling;
  std::size_t max_trials = 200000;
};

SystemParams generate_params(unsigned n, Profile profile, Rng& rng, const ParamOptions& options = {});

KeyPair generate_keypair(const SystemParams& params, Rng& rng);

// Recomputes the cached inverses of a private key.
void complete_private_key(PrivateKey& priv, const SystemParams& params);

// The public half that corresponds to `params` (n, M, S, T) with empty C.
PublicKey public_shell(const SystemParams& params);

struct ValidationResult {
  bool ok = true;
  std::string failed_check;  // empty when ok

  explicit operator bool() const { return ok; }
  static ValidationResult pass() { return {}; }
  static ValidationResult fail(std::string what) { return {false, std::move(what)}; }
};

ValidationResult validate_params(const SystemParams& params);

ValidationResult validate_keypair(const PublicKey& pub, const PrivateKey& priv, const SystemParams& params);

// alpha = delta^((delta^n + delta * W^(n-1)) * T), beta = delta^(W^n * T),
// every exponent reduced mod M - 1.
BigInt compute_alpha(const BigInt& delta, const BigInt& W, unsigned n, const BigInt& T, const BigInt& M);
BigInt compute_beta(const BigInt& delta, const BigInt& W, unsigned n, const BigInt& T, const BigInt& M);

}  // namespace reesse

#endif  // REESSE_KEYGEN_HPP_
