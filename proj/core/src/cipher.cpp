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

#include "reesse/cipher.hpp"

#include "reesse/coprime.hpp"
#include "reesse/numtheory.hpp"

namespace reesse {

namespace {

// Bounds the backtracking; honest decodes need a handful of nodes.
constexpr std::size_t kPeelNodeBudget = 1 << 20;

class Peeler {
 public:
  Peeler(std::span<const std::uint64_t> A, std::size_t limit) : A_(A), limit_(limit), bits_(A.size(), 0) {}

  std::vector<BitString> run(const BigInt& value) {
    if (value > 0) visit(0, 0, value);
    return std::move(found_);
  }

 private:
  bool done() const { return found_.size() >= limit_ || nodes_ >= kPeelNodeBudget; }

  static bool divides_power(const BigInt& g, std::uint64_t a, unsigned e, BigInt& quotient) {
    if (!mpz_divisible_ui_p(g.get_mpz_t(), a)) return false;
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), a, e);
    if (!mpz_divisible_p(g.get_mpz_t(), pw.get_mpz_t())) return false;
    mpz_divexact(quotient.get_mpz_t(), g.get_mpz_t(), pw.get_mpz_t());
    return true;
  }

  void finish(unsigned run, const BigInt& g) {
    const std::size_t n = A_.size();
    if (run == 0) {
      if (g == 1) found_.push_back(bits_);
      return;
    }
    if (run == n) return;  // no 1-bit at all
    // Tail rule: the trailing zero run folds onto the rightmost 1-bit.
    const std::size_t last_one = n - 1 - run;
    BigInt q;
    if (divides_power(g, A_[last_one], run, q) && q == 1) found_.push_back(bits_);
  }

  void visit(std::size_t i, unsigned run, const BigInt& g) {
    if (done()) return;
    ++nodes_;
    if (i == A_.size()) {
      finish(run, g);
      return;
    }
    BigInt q;
    if (divides_power(g, A_[i], run + 1, q)) {
      bits_[i] = 1;
      visit(i + 1, 0, q);
      bits_[i] = 0;
      if (done()) return;
    }
    visit(i + 1, run + 1, g);
  }

  std::span<const std::uint64_t> A_;
  std::size_t limit_;
  BitString bits_;
  std::vector<BitString> found_;
  std::size_t nodes_ = 0;
};

}  // namespace

Ciphertext encrypt(const PublicKey& pub, std::span<const std::uint8_t> bits) {
  if (bits.size() != pub.n || pub.C.size() != pub.n) {
    throw Error(Errc::kBadLength, "plaintext block must have " + std::to_string(pub.n) + " bits");
  }
  const auto exps = encode_anomalous(bits);
  return Ciphertext{anomalous_product(pub.C, exps, pub.M)};
}

std::vector<BitString> peel_anomalous(const BigInt& value, std::span<const std::uint64_t> A, std::size_t limit) {
  return Peeler(A, limit).run(value);
}

Decryption decrypt_detailed(const PrivateKey& priv, const SystemParams& params, const Ciphertext& ct) {
  const unsigned n = params.n;
  const BigInt& M = params.M;
  if (ct.gbar <= 0 || ct.gbar >= M) throw Error(Errc::kNoDecode, "ciphertext out of range");
  if (priv.A.size() != n || priv.lever.size() != n) throw Error(Errc::kBadLength, "private key length mismatch");

  PublicKey pub = public_shell(params);
  pub.C.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt base = BigInt(static_cast<unsigned long>(priv.A[i])) * mod_pow(priv.W, priv.lever[i], M) % M;
    pub.C.push_back(mod_pow(base, priv.delta, M));
  }

  // G0 = gbar^(delta^-1) = W^k * prod A_i^bbar_i (mod M).
  const BigInt g0 = mod_pow(ct.gbar, priv.delta_inv, M);
  BigInt current = g0 * mod_inv(mod_pow(priv.W, n, M), M) % M;
  const std::uint64_t k_max = static_cast<std::uint64_t>(n) * (2 * n - 1);
  for (std::uint64_t k = n; k <= k_max; k += 2) {
    for (auto& bits : peel_anomalous(current, priv.A, 4)) {
      if (encrypt(pub, bits) == ct) return Decryption{std::move(bits), k};
    }
    current = current * priv.w_inv_sq % M;
  }
  throw Error(Errc::kNoDecode, "no lever sum in [n, n(2n-1)] yields a confirmed decode");
}

BitString decrypt(const PrivateKey& priv, const SystemParams& params, const Ciphertext& ct) {
  return decrypt_detailed(priv, params, ct).bits;
}

}  // namespace reesse
