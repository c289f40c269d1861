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

#include "reesse/sigver.hpp"

#include <openssl/sha.h>

#include <array>
#include <vector>

#include "reesse/numtheory.hpp"

namespace reesse {

namespace {

constexpr std::uint64_t kRoundsPerDbar = 1ULL << 16;
constexpr std::size_t kMaxDraws = 1 << 20;

std::array<std::uint8_t, SHA256_DIGEST_LENGTH> sha256(const std::vector<std::uint8_t>& data) {
  std::array<std::uint8_t, SHA256_DIGEST_LENGTH> out{};
  SHA256(data.data(), data.size(), out.data());
  return out;
}

// Subset product over the plain digest bits.
BigInt subset_product(const std::vector<BigInt>& C, const BitString& bits, const BigInt& M) {
  BigInt acc = 1;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) acc = acc * C[i] % M;
  }
  return acc;
}

}  // namespace

Digest digest(std::span<const std::uint8_t> message, unsigned n) {
  if (n == 0 || n > 8 * SHA256_DIGEST_LENGTH) throw Error(Errc::kInvalidArgument, "digest length must be in [1, 256]");
  std::vector<std::uint8_t> data(message.begin(), message.end());
  for (unsigned counter = 0;; ++counter) {
    if (counter > 0) data.push_back(static_cast<std::uint8_t>(counter & 0xff));
    const auto h = sha256(data);
    Digest d;
    d.bits.resize(n);
    d.value = 0;
    bool any = false;
    for (unsigned i = 0; i < n; ++i) {
      d.bits[i] = (h[i / 8] >> (7 - i % 8)) & 1;
      any = any || d.bits[i];
    }
    if (!any) continue;
    for (unsigned i = n; i-- > 0;) {
      d.value <<= 1;
      d.value += d.bits[i];
    }
    return d;
  }
}

Digest digest(std::string_view message, unsigned n) { return digest(as_bytes(message), n); }

SignTranscript sign_transcript(const PrivateKey& priv, const SystemParams& params,
                               std::span<const std::uint8_t> message, Rng& rng) {
  const unsigned n = params.n;
  const BigInt& M = params.M;
  const BigInt mbar = M - 1;
  const BigInt& delta = priv.delta;
  const BigInt& W = priv.W;
  const BigInt& dbar = params.dbar;

  SignTranscript tr;
  tr.h = digest(message, n);
  const BigInt& H = tr.h.value;

  BigInt lever_sum = 0;
  BigInt zero_product = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (tr.h.bits[i]) {
      lever_sum += static_cast<unsigned long>(priv.lever[i]);
    } else {
      zero_product *= static_cast<unsigned long>(priv.A[i]);
    }
  }
  tr.kbar = delta * lever_sum % mbar;
  tr.g0 = mod_pow(zero_product, delta, M);

  // Q = (abar Dbar + W H) delta^-1 mod (M - 1) with dbar T not dividing abar
  // and dbar not dividing W Q. An abar whose r search runs dry is redrawn.
  const BigInt dbar_t = dbar * params.T;
  const BigInt s_inv = mod_inv(params.S, mbar);
  const BigInt dh_inv = mod_inv(delta * priv.hbar % M, M);
  const BigInt g0_inv = mod_inv(tr.g0, M);
  for (std::size_t draw = 0; draw < kMaxDraws; ++draw) {
    tr.abar = rng.uniform_range(2, mbar - 1);
    if (tr.abar % dbar_t == 0) continue;
    const BigInt Q = mod_floor((tr.abar * priv.Dbar + W * H) * priv.delta_inv, mbar);
    if (Q <= 1) continue;
    if (W * Q % mbar % dbar == 0) continue;

    // R = (Q (delta hbar)^-1)^(S^-1) G0^-1, the S-th root taken as a power.
    tr.R = mod_pow(Q * dh_inv % M, s_inv, M) * g0_inv % M;
    tr.ubar = mod_pow(tr.R * mod_pow(W, mod_floor(tr.kbar - delta, mbar), M) % M, Q, M);
    tr.gbar = mod_pow(delta, tr.abar * priv.Dbar % mbar, M);

    const BigInt dq = delta * Q % mbar;
    const BigInt hw = H * W % mbar;
    tr.xi = 0;
    BigInt hw_power = 1;
    for (unsigned i = 0; i < n; ++i) {
      tr.xi = (tr.xi * dq + hw_power) % mbar;
      hw_power = hw_power * hw % mbar;
    }

    const BigInt base_term = (mod_pow(W * Q % mbar, n - 1, mbar) + tr.xi) % mbar;
    // With T | abar, gbar has order dbar and (r mod dbar, U) cycles after dbar steps.
    const BigInt max_r = mod_pow(tr.gbar, dbar, M) == 1 ? dbar : dbar * kRoundsPerDbar;
    BigInt U = tr.ubar;
    for (std::uint64_t r = 1; r <= max_r; ++r) {
      U = U * tr.gbar % M;
      if (U <= 1) continue;
      // Delta = (W Q)^(n-1) + xi + r U S (mod M - 1); accept when dbar | Delta.
      const BigInt delta_sum = (base_term + BigInt(static_cast<unsigned long>(r)) * U % mbar * params.S) % mbar;
      if (delta_sum % dbar == 0) {
        tr.r = r;
        tr.sig = Signature{Q, U};
        return tr;
      }
    }
  }
  throw Error(Errc::kSearchExhausted, "no abar admitted a signature");
}

Signature sign(const PrivateKey& priv, const SystemParams& params, std::span<const std::uint8_t> message, Rng& rng) {
  return sign_transcript(priv, params, message, rng).sig;
}

Discriminant discriminant(const PublicKey& pub, const Digest& h, const Signature& sig) {
  const BigInt& M = pub.M;
  const BigInt mbar = M - 1;
  const BigInt& Q = sig.Q;
  const BigInt& U = sig.U;
  const BigInt& H = h.value;

  Discriminant d;
  const BigInt alpha_over_q = pub.alpha * mod_inv(Q, M) % M;
  const BigInt x_exp = Q * U % mbar * pub.T % mbar;
  d.X = mod_pow(alpha_over_q, x_exp, M) * mod_pow(pub.alpha, mod_pow(Q, pub.n, mbar), M) % M;

  const BigInt gbar = subset_product(pub.C, h.bits, M);
  const BigInt base = mod_pow(gbar, Q, M) * mod_inv(U, M) % M;
  const BigInt y_exp = U * pub.S % mbar * pub.T % mbar;
  const BigInt beta_exp = (H * mod_pow(Q, pub.n - 1, mbar) + mod_pow(H, pub.n, mbar)) % mbar;
  d.Y = mod_pow(base, y_exp, M) * mod_pow(pub.beta, beta_exp, M) % M;
  return d;
}

bool verify(const PublicKey& pub, std::span<const std::uint8_t> message, const Signature& sig) {
  if (pub.n == 0 || pub.C.size() != pub.n) return false;
  if (sig.Q <= 1 || sig.Q >= pub.M || sig.U <= 1 || sig.U >= pub.M) return false;
  const Digest h = digest(message, pub.n);
  const Discriminant d = discriminant(pub, h, sig);
  return d.X == d.Y;
}

}  // namespace reesse
