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

#include "reesse/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "reesse/numtheory.hpp"

namespace reesse {

namespace {

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

// num/den in lowest terms; gmp rationals require canonical operands.
mpq_class rational(const BigInt& num, const BigInt& den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

std::uint64_t to_u64(const BigInt& v) { return static_cast<std::uint64_t>(v.get_ui()); }

BigInt product_mod(const std::vector<BigInt>& C, std::span<const std::size_t> idx, const BigInt& M) {
  BigInt acc = 1;
  for (auto i : idx) acc = acc * C[i] % M;
  return acc;
}

// Calls f(tuple) for every strictly increasing k-tuple of [0, n).
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k == 0 || k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::string_view to_string(LeverMode mode) { return mode == LeverMode::kConstant ? "constant" : "injective"; }

LeverMode parse_lever_mode(std::string_view text) {
  if (text == "constant") return LeverMode::kConstant;
  if (text == "injective") return LeverMode::kInjective;
  throw Error(Errc::kInvalidArgument, "unknown lever mode: " + std::string(text));
}

SlackKey slack_key_from(std::vector<std::uint64_t> A, std::vector<std::uint64_t> lever, const BigInt& W,
                        const BigInt& M, std::uint64_t ceiling) {
  if (A.size() != lever.size() || A.empty()) throw Error(Errc::kInvalidArgument, "A and lever must match in size");
  if (M < 3) throw Error(Errc::kInvalidArgument, "modulus too small");
  if (gcd(W, M) != 1) throw Error(Errc::kInvalidArgument, "W must be a unit mod M");
  SlackKey key;
  key.pub.M = M;
  key.pub.pool_ceiling = ceiling;
  key.pub.C.reserve(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    key.pub.C.push_back(big(A[i]) * mod_pow(W, big(lever[i]), M) % M);
  }
  key.A = std::move(A);
  key.lever = std::move(lever);
  key.W = W;
  return key;
}

SlackKey make_slack_key(std::size_t n, LeverMode mode, Rng& rng, std::uint64_t ceiling) {
  if (n < 2) throw Error(Errc::kBadLength, "slack keys need n >= 2");
  auto A = sample_coprime(n, IntPool{2, ceiling}, rng);
  std::vector<std::uint64_t> lever;
  if (mode == LeverMode::kConstant) {
    const OmegaSet omega = omega_simple(n % 2 == 0 ? n : n + 1);
    const std::uint64_t k = omega.elements[rng.uniform_u64(0, omega.size() - 1)];
    lever.assign(n, k);
  } else {
    lever = sample_lever(n, omega_sumfree(n % 2 == 0 ? n : n + 1), rng).values;
  }
  BigInt bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), *std::max_element(A.begin(), A.end()), n);
  const BigInt M = random_prime(rng, 2 * bound + 1, 4 * bound - 1);
  const BigInt W = rng.uniform_range(2, M - 2);
  return slack_key_from(std::move(A), std::move(lever), W, M, ceiling);
}

SlackKey example1_slack_key() {
  return slack_key_from({11, 10, 3, 7, 17, 13}, {9, 6, 10, 5, 7, 8}, BigInt(17797), BigInt(510931));
}

ConstantLeverResult cf_attack_constant_lever(const SlackPublic& pub) {
  const std::size_t n = pub.n();
  const BigInt& M = pub.M;
  const std::uint64_t ceiling = pub.pool_ceiling;
  if (n < 2) throw Error(Errc::kBadLength, "attack needs n >= 2");

  ConstantLeverResult result;
  const BigInt cn_inv = mod_inv(pub.C[n - 1], M);
  for (std::size_t x = 0; x + 1 < n; ++x) {
    const BigInt gz = pub.C[x] * cn_inv % M;
    const mpq_class ratio = rational(gz, M);
    const auto quotients = cf_expand(gz, M);
    std::vector<BigInt> qualifying;
    for (const auto& cv : cf_convergents(quotients)) {
      if (cv.denominator > ceiling) break;
      if (cv.denominator <= 1) continue;
      const mpq_class diff = ratio - rational(cv.numerator, cv.denominator);
      if (diff <= 0) continue;
      if (diff * 2 * cv.denominator * cv.denominator < 1) qualifying.push_back(cv.denominator);
    }
    result.denominators.push_back(std::move(qualifying));
  }

  // A_n / gcd(L, A_n) is a qualifying denominator for every x.
  auto admissible = [&](std::uint64_t q) {
    return std::all_of(result.denominators.begin(), result.denominators.end(), [&](const std::vector<BigInt>& ds) {
      return std::any_of(ds.begin(), ds.end(), [&](const BigInt& d) { return q % d.get_ui() == 0; });
    });
  };

  for (std::uint64_t q = 2; q <= ceiling && big(q) < M; ++q) {
    if (!admissible(q)) continue;
    ++result.candidates_tried;
    const BigInt wk = pub.C[n - 1] * mod_inv(big(q), M) % M;
    const BigInt wk_inv = mod_inv(wk, M);
    std::vector<std::uint64_t> A(n);
    A[n - 1] = q;
    bool in_pool = true;
    for (std::size_t x = 0; x + 1 < n && in_pool; ++x) {
      const BigInt ax = pub.C[x] * wk_inv % M;
      in_pool = ax >= 2 && ax <= ceiling;
      if (in_pool) A[x] = to_u64(ax);
    }
    if (!in_pool || !validate_coprime(A)) continue;
    result.recovered = true;
    result.A = std::move(A);
    result.wk = wk;
    return result;
  }
  return result;
}

std::string bound_label(unsigned bounds) {
  std::string out;
  auto add = [&](ProbeBound b, const char* tag) {
    if ((bounds & static_cast<unsigned>(b)) == 0) return;
    if (!out.empty()) out += ',';
    out += tag;
  };
  add(ProbeBound::kBound4, "4");
  add(ProbeBound::kBound4Prime, "4'");
  add(ProbeBound::kBound4Double, "4''");
  return out.empty() ? "none" : out;
}

CFProbeResult cf_probe(const SlackPublic& pub, std::span<const std::size_t> x, std::span<const std::size_t> y,
                       std::uint64_t ceiling) {
  const std::size_t n = pub.n();
  if (x.empty() || y.empty()) throw Error(Errc::kInvalidArgument, "probe index lists must be nonempty");
  std::set<std::size_t> seen;
  for (auto i : x) {
    if (i >= n || !seen.insert(i).second) throw Error(Errc::kInvalidArgument, "bad x index");
  }
  for (auto i : y) {
    if (i >= n || !seen.insert(i).second) throw Error(Errc::kInvalidArgument, "x and y must be disjoint");
  }
  const std::size_t m = x.size();
  const std::size_t h = y.size();
  const BigInt& M = pub.M;

  CFProbeResult out;
  out.gz = product_mod(pub.C, x, M) * mod_inv(product_mod(pub.C, y, M), M) % M;

  BigInt limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), ceiling, h);
  BigInt scale4;
  mpz_ui_pow_ui(scale4.get_mpz_t(), 2, n - m - h);
  const bool double_prime = m == 2 && h == 1 && n > 3;
  BigInt scale4pp;
  if (double_prime) mpz_ui_pow_ui(scale4pp.get_mpz_t(), 2, n - 3);

  const mpq_class ratio = rational(out.gz, M);
  for (const auto& cv : cf_convergents(cf_expand(out.gz, M))) {
    const BigInt& q = cv.denominator;
    if (q > limit) break;
    if (q <= 1) continue;
    const mpq_class diff = ratio - rational(cv.numerator, q);
    if (diff <= 0) continue;
    const mpq_class q2(q * q);
    unsigned flags = 0;
    if (diff * scale4 * q2 < 1) flags |= static_cast<unsigned>(ProbeBound::kBound4);
    if (diff * 2 * q2 < 1) flags |= static_cast<unsigned>(ProbeBound::kBound4Prime);
    if (double_prime && diff * scale4pp * q2 < 1) flags |= static_cast<unsigned>(ProbeBound::kBound4Double);
    if (flags != 0) out.candidates.push_back({cv.numerator, q, flags});
  }
  return out;
}

ProbeStatistics probe_statistics(std::size_t n, std::size_t trials, std::size_t m, std::size_t h, Rng& rng,
                                 std::uint64_t ceiling) {
  ProbeStatistics stats;
  if (m == 0 || h == 0 || trials == 0) return stats;
  if (m + h > n) throw Error(Errc::kInvalidArgument, "m + h exceeds n");
  stats.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const SlackKey key = make_slack_key(n, LeverMode::kInjective, rng, ceiling);
    for_each_combination(n, m, [&](std::span<const std::size_t> x) {
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < n; ++i) {
        if (std::find(x.begin(), x.end(), i) == x.end()) rest.push_back(i);
      }
      std::uint64_t lx = 0;
      for (auto i : x) lx += key.lever[i];
      for_each_combination(rest.size(), h, [&](std::span<const std::size_t> pos) {
        std::vector<std::size_t> y;
        std::uint64_t ly = 0;
        BigInt truth = 1;
        for (auto p : pos) {
          y.push_back(rest[p]);
          ly += key.lever[rest[p]];
          truth *= big(key.A[rest[p]]);
        }
        if (lx == ly) {
          ++stats.equal_sum_skipped;
          return;
        }
        ++stats.probes;
        const auto res = cf_probe(key.pub, x, y, ceiling);
        bool any4 = false, any4p = false, any4pp = false, truth_seen = false;
        for (const auto& c : res.candidates) {
          any4 = any4 || c.satisfies(ProbeBound::kBound4);
          any4p = any4p || c.satisfies(ProbeBound::kBound4Prime);
          any4pp = any4pp || c.satisfies(ProbeBound::kBound4Double);
          truth_seen = truth_seen || c.Ay == truth;
        }
        stats.hits4 += any4;
        stats.hits4p += any4p;
        stats.hits4pp += any4pp;
        stats.true_hits += truth_seen;
      });
    });
  }
  return stats;
}

std::uint64_t discrete_log(std::uint64_t g, std::uint64_t y, std::uint64_t p, std::uint64_t order) {
  if (p < 2 || order == 0) throw Error(Errc::kInvalidArgument, "discrete_log: bad modulus or order");
  g %= p;
  y %= p;
  const auto step = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order))));
  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(step * 2);
  std::uint64_t cur = 1;
  for (std::uint64_t j = 0; j < step; ++j) {
    baby.emplace(cur, j);
    cur = mulmod_u64(cur, g, p);
  }
  // giant = g^-step via Fermat (p prime).
  const std::uint64_t giant = powmod_u64(powmod_u64(g, p - 2, p), step, p);
  std::uint64_t gamma = y;
  for (std::uint64_t i = 0; i <= step; ++i) {
    if (auto it = baby.find(gamma); it != baby.end()) {
      const std::uint64_t x = i * step + it->second;
      if (x < order) return x;
    }
    gamma = mulmod_u64(gamma, giant, p);
  }
  throw Error(Errc::kSearchExhausted, "discrete_log: no solution");
}

LeverOracleAnswer LeverOracle::query(std::span<const std::uint64_t> C, std::uint64_t M) {
  if (M > kMaxModulus) throw Error(Errc::kTooLarge, "lever oracle modulus exceeds 2^32");
  Key key{std::vector<std::uint64_t>(C.begin(), C.end()), M};
  std::lock_guard<std::mutex> lock(mu_);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  LeverOracleAnswer answer = compute(C, M);
  cache_.emplace(std::move(key), answer);
  return answer;
}

std::size_t LeverOracle::cache_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.size();
}

LeverOracleAnswer LeverOracle::compute(std::span<const std::uint64_t> C, std::uint64_t M) {
  if (M < 5 || !is_probable_prime(big(M))) throw Error(Errc::kInvalidArgument, "lever oracle needs a prime M >= 5");
  if (C.empty()) throw Error(Errc::kBadLength, "empty C sequence");
  for (auto c : C) {
    if (c == 0 || c >= M) throw Error(Errc::kInvalidArgument, "C values must lie in (0, M)");
  }
  const std::uint64_t order = M - 1;
  const std::uint64_t W = to_u64(find_generator(big(M), factor_small(order), rng_));
  const std::uint64_t hi = std::min(ceiling_, M - 1);

  constexpr int kAttempts = 256;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    auto A = sample_coprime(C.size(), IntPool{2, hi}, rng_);
    std::vector<std::uint64_t> residues(C.size());
    for (std::size_t i = 0; i < C.size(); ++i) {
      residues[i] = mulmod_u64(C[i], powmod_u64(A[i], M - 2, M), M);
    }
    if (std::set<std::uint64_t>(residues.begin(), residues.end()).size() != residues.size()) continue;
    LeverOracleAnswer ans;
    ans.W = W;
    ans.A = std::move(A);
    ans.lever.reserve(C.size());
    for (auto r : residues) {
      const std::uint64_t l = discrete_log(W, r, M, order);
      ans.lever.push_back(l == 0 ? order : l);
    }
    return ans;
  }
  throw Error(Errc::kPoolExhausted, "no coprime sequence gives distinct lever values");
}

mpq_class assp_density(std::uint64_t n, std::uint64_t log_m) {
  if (log_m == 0) throw Error(Errc::kInvalidArgument, "log M must be positive");
  return rational(big(n) * big(n), big(log_m));
}

namespace {

void require_tlp_prime(std::uint64_t p) {
  if (p > kTlpMaxModulus) throw Error(Errc::kTooLarge, "TLP modulus exceeds 2^24");
  if (p < 2 || !is_probable_prime(big(p))) throw Error(Errc::kInvalidArgument, "TLP modulus must be prime");
}

}  // namespace

std::vector<std::uint64_t> tlp_brute(std::uint64_t y, std::uint64_t p) {
  require_tlp_prime(p);
  std::vector<std::uint64_t> out;
  const std::uint64_t target = y % p;
  for (std::uint64_t x = 1; x < p; ++x) {
    if (powmod_u64(x, x % (p - 1), p) == target) out.push_back(x);
  }
  return out;
}

std::vector<std::uint64_t> tlp_image(std::uint64_t p) {
  require_tlp_prime(p);
  std::vector<bool> hit(p, false);
  for (std::uint64_t x = 1; x < p; ++x) hit[powmod_u64(x, x % (p - 1), p)] = true;
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v < p; ++v) {
    if (hit[v]) out.push_back(v);
  }
  return out;
}

}  // namespace reesse
