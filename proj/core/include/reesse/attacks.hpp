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

// Cryptanalysis workbench over the slack transform C_i = A_i W^l(i) mod M:
// continued-fraction key recovery and probing, a tiny-modulus lever oracle,
// the compact-sequence density, and transcendental-logarithm tables.

#ifndef REESSE_ATTACKS_HPP_
#define REESSE_ATTACKS_HPP_

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reesse/common.hpp"
#include "reesse/coprime.hpp"
#include "reesse/lever.hpp"

namespace reesse {

struct SlackPublic {
  std::vector<BigInt> C;
  BigInt M;
  std::uint64_t pool_ceiling = kDefaultPoolCeiling;

  std::size_t n() const { return C.size(); }
};

struct SlackKey {
  SlackPublic pub;
  // Ground truth, kept for experiments.
  std::vector<std::uint64_t> A;
  std::vector<std::uint64_t> lever;
  BigInt W;
};

enum class LeverMode { kConstant, kInjective };

std::string_view to_string(LeverMode mode);
LeverMode parse_lever_mode(std::string_view text);

// A coprime sequence from [2, ceiling], a lever (one constant k drawn from the
// simple Omega, or an injection into the sum-free Omega), W random and M a
// random prime in (2 max(A)^n, 4 max(A)^n). Requires n >= 2.
SlackKey make_slack_key(std::size_t n, LeverMode mode, Rng& rng, std::uint64_t ceiling = kDefaultPoolCeiling);

// Builds C from explicit ground truth; throws kInvalidArgument on size
// mismatch or a non-unit W.
SlackKey slack_key_from(std::vector<std::uint64_t> A, std::vector<std::uint64_t> lever, const BigInt& W,
                        const BigInt& M, std::uint64_t ceiling = kDefaultPoolCeiling);

// The worked example: A = {11,10,3,7,17,13}, l = (9,6,10,5,7,8), W = 17797,
// M = 510931.
SlackKey example1_slack_key();

struct ConstantLeverResult {
  bool recovered = false;
  std::vector<std::uint64_t> A;  // recovered sequence on success
  BigInt wk;                     // recovered W^k on success
  // Qualifying convergent denominators per x = 0..n-2, kept for diagnostics.
  std::vector<std::vector<BigInt>> denominators;
  std::size_t candidates_tried = 0;
};

// Recovers {A_i} and W^k from a constant-lever slack key. For each x < n - 1,
// G_z = C_x C_n^-1 = A_x / A_n and the convergents q of G_z / M with
// 0 < G_z/M - p/q < 1/(2 q^2) and 1 < q <= ceiling are collected. A_n is a
// multiple of one such q for every x; those multiples are tried in
// increasing order and accepted once every C_x (C_n q^-1)^-1 lands in the pool
// and the result is a valid coprime sequence.
ConstantLeverResult cf_attack_constant_lever(const SlackPublic& pub);

enum class ProbeBound : unsigned {
  kNone = 0,
  kBound4 = 1,        // < 1 / (2^(n-m-h) q^2)
  kBound4Prime = 2,   // < 1 / (2 q^2)
  kBound4Double = 4,  // m = 2, h = 1, n > 3: < 1 / (2^(n-3) q^2)
};

struct ProbeCandidate {
  BigInt L;
  BigInt Ay;
  unsigned bounds = 0;  // bitwise OR of ProbeBound flags

  bool satisfies(ProbeBound b) const { return (bounds & static_cast<unsigned>(b)) != 0; }
};

struct CFProbeResult {
  BigInt gz;
  std::vector<ProbeCandidate> candidates;
};

// Probes G_z = prod C_x (prod C_y)^-1 with 0-based, disjoint, nonempty index
// lists. Reports every convergent with 1 < q <= ceiling^|y| and a positive
// difference that satisfies at least one bound. Comparisons are exact.
CFProbeResult cf_probe(const SlackPublic& pub, std::span<const std::size_t> x, std::span<const std::size_t> y,
                       std::uint64_t ceiling);

// Comma-separated tags of the satisfied bounds, e.g. "4,4',4''".
std::string bound_label(unsigned bounds);

struct ProbeStatistics {
  std::size_t trials = 0;
  std::size_t probes = 0;             // (x, y) pairs examined with unequal lever sums
  std::size_t equal_sum_skipped = 0;  // pairs whose lever sums coincide
  std::size_t hits4 = 0;              // probes with at least one (4) candidate
  std::size_t hits4p = 0;
  std::size_t hits4pp = 0;
  std::size_t true_hits = 0;          // probes whose candidates include the true A_y product
};

// Monte-Carlo over `trials` injective slack keys of length n; every pair of
// disjoint sorted index tuples |x| = m, |y| = h is probed. m = 0 or h = 0
// yields an empty report.
ProbeStatistics probe_statistics(std::size_t n, std::size_t trials, std::size_t m, std::size_t h, Rng& rng,
                                 std::uint64_t ceiling = kDefaultPoolCeiling);

struct LeverOracleAnswer {
  std::vector<std::uint64_t> A;
  std::uint64_t W = 0;
  std::vector<std::uint64_t> lever;  // in [1, M - 1]; a zero log maps to M - 1

  friend bool operator==(const LeverOracleAnswer&, const LeverOracleAnswer&) = default;
};

// A deterministic-per-input oracle: the first query for (C, M) samples a
// coprime sequence and generator and solves each l(i) by discrete log; later
// queries for the same ordered C and M return the cached answer. Thread-safe.
class LeverOracle {
 public:
  static constexpr std::uint64_t kMaxModulus = 1ULL << 32;

  explicit LeverOracle(std::uint64_t seed, std::uint64_t ceiling = kDefaultPoolCeiling)
      : rng_(seed), ceiling_(ceiling) {}

  // Throws kTooLarge for M > 2^32, kInvalidArgument for composite M or
  // residues outside (0, M), kPoolExhausted when no admissible A exists.
  LeverOracleAnswer query(std::span<const std::uint64_t> C, std::uint64_t M);

  std::size_t cache_size() const;

 private:
  using Key = std::pair<std::vector<std::uint64_t>, std::uint64_t>;

  LeverOracleAnswer compute(std::span<const std::uint64_t> C, std::uint64_t M);

  mutable std::mutex mu_;
  std::map<Key, LeverOracleAnswer> cache_;
  Rng rng_;
  std::uint64_t ceiling_;
};

// x with g^x = y (mod p), 0 <= x < order, by baby-step giant-step; throws
// kSearchExhausted when y is not in <g>.
std::uint64_t discrete_log(std::uint64_t g, std::uint64_t y, std::uint64_t p, std::uint64_t order);

// n^2 / log_m exactly; log_m must be positive.
mpq_class assp_density(std::uint64_t n, std::uint64_t log_m);

inline constexpr std::uint64_t kTlpMaxModulus = 1ULL << 24;

// {x in [1, p-1] : x^x = y (mod p)} ascending, for a prime p <= 2^24.
std::vector<std::uint64_t> tlp_brute(std::uint64_t y, std::uint64_t p);

// The image of x -> x^x over [1, p-1], ascending.
std::vector<std::uint64_t> tlp_image(std::uint64_t p);

}  // namespace reesse

#endif  // REESSE_ATTACKS_HPP_
