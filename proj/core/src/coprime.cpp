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

#include "reesse/coprime.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "reesse/numtheory.hpp"

namespace reesse {

namespace {

bool is_small_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

// Would appending `x` to a valid sequence `seq` keep it valid?
bool compatible(const std::vector<std::uint64_t>& seq, std::uint64_t x) {
  for (auto a : seq) {
    if (a == x) return false;
  }
  const std::size_t size_after = seq.size() + 1;
  // Pairs (x, a): the cofactors must not divide any third element.
  for (std::size_t j = 0; j < seq.size(); ++j) {
    const std::uint64_t h = std::gcd(x, seq[j]);
    if (h == 1 || size_after < 3) continue;
    const std::uint64_t cx = x / h;
    const std::uint64_t ca = seq[j] / h;
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (k == j) continue;
      if (seq[k] % cx == 0 || seq[k] % ca == 0) return false;
    }
  }
  // Existing pairs (a, b): their cofactors must not divide x.
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      const std::uint64_t h = std::gcd(seq[i], seq[j]);
      if (h == 1) continue;
      if (x % (seq[i] / h) == 0 || x % (seq[j] / h) == 0) return false;
    }
  }
  return true;
}

}  // namespace

CoprimeCheck validate_coprime(std::span<const std::uint64_t> seq) {
  CoprimeCheck out;
  const std::size_t n = seq.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (seq[i] == seq[j]) {
        out.ok = false;
        out.witness = {seq[i], seq[j], 0};
        return out;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t h = std::gcd(seq[i], seq[j]);
      if (h == 1) continue;
      const std::uint64_t ci = seq[i] / h;
      const std::uint64_t cj = seq[j] / h;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (seq[k] % ci == 0 || seq[k] % cj == 0) {
          out.ok = false;
          out.witness = {seq[i], seq[j], seq[k]};
          return out;
        }
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> sample_coprime(std::size_t n, IntPool pool, Rng& rng, std::size_t max_attempts) {
  if (pool.lo < 2 || pool.hi < pool.lo) throw Error(Errc::kInvalidArgument, "coprime pool must lie in [2, hi]");
  if (max_attempts == 0) max_attempts = 1;
  std::vector<std::uint64_t> values(pool.hi - pool.lo + 1);
  std::iota(values.begin(), values.end(), pool.lo);

  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::shuffle(values.begin(), values.end(), rng.engine());
    if (attempt + 1 == max_attempts) {
      // Tight pools (ceiling near the n-th prime) only fit the primes.
      std::stable_partition(values.begin(), values.end(), is_small_prime);
    }
    std::vector<std::uint64_t> seq;
    seq.reserve(n);
    for (auto v : values) {
      if (seq.size() == n) break;
      if (compatible(seq, v)) seq.push_back(v);
    }
    if (seq.size() == n) return seq;
  }
  throw Error(Errc::kPoolExhausted, "could not draw " + std::to_string(n) + " coprime values from [" +
                                        std::to_string(pool.lo) + ", " + std::to_string(pool.hi) + "]");
}

std::vector<unsigned> encode_anomalous(std::span<const std::uint8_t> bits) {
  const std::size_t n = bits.size();
  std::vector<unsigned> exps(n, 0);
  unsigned run = 0;
  std::size_t last_one = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (bits[i] > 1) throw Error(Errc::kInvalidArgument, "bit string entries must be 0 or 1");
    if (bits[i] == 0) {
      ++run;
    } else {
      exps[i] = run + 1;
      run = 0;
      last_one = i;
    }
  }
  if (last_one == n) throw Error(Errc::kZeroPlaintext, "plaintext block is all zeros");
  exps[last_one] += run;  // trailing zeros fold onto the rightmost 1
  return exps;
}

BitString decode_anomalous(std::span<const unsigned> exps) {
  const std::size_t n = exps.size();
  std::uint64_t total = 0;
  for (auto e : exps) total += e;
  if (total != n) {
    throw Error(Errc::kMalformed, "exponents sum to " + std::to_string(total) + ", expected " + std::to_string(n));
  }
  BitString bits(n, 0);
  for (std::size_t i = 0; i < n; ++i) bits[i] = exps[i] > 0 ? 1 : 0;
  std::vector<unsigned> again;
  try {
    again = encode_anomalous(bits);
  } catch (const Error&) {
    throw Error(Errc::kMalformed, "exponent vector is all zeros");
  }
  if (!std::equal(again.begin(), again.end(), exps.begin(), exps.end())) {
    throw Error(Errc::kMalformed, "exponents are not a run-length encoding");
  }
  return bits;
}

BigInt anomalous_product(std::span<const BigInt> seq, std::span<const unsigned> exps, const BigInt& modulus) {
  if (seq.size() != exps.size()) throw Error(Errc::kInvalidArgument, "sequence and exponent lengths differ");
  BigInt acc = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (exps[i] == 0) continue;
    acc = acc * mod_pow(seq[i], exps[i], modulus) % modulus;
  }
  return mod_floor(acc, modulus);
}

}  // namespace reesse
