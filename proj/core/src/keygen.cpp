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

#include "reesse/keygen.hpp"

#include <algorithm>
#include <set>

namespace reesse {

namespace {

constexpr std::uint64_t kMaxDbar = 1ULL << 16;
constexpr std::size_t kKeyRetries = 1000;

unsigned bit_length(const BigInt& v) {
  return v == 0 ? 0 : static_cast<unsigned>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

BigInt pow_ui(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::vector<SmoothFactor> smooth_exponents(unsigned n, Profile profile) {
  // rho_1 = 2, ..., rho_k = largest prime <= 2n.
  const auto primes = primes_up_to(2ULL * n);
  std::vector<SmoothFactor> out;
  for (auto p : primes) out.push_back({p, 1});
  const std::uint64_t threshold = profile == Profile::kStrict ? 1024 : 4;
  std::uint64_t product = 1;
  for (std::size_t i = 0; product < threshold; i = (i + 1) % out.size()) {
    product = product / out[i].exponent * (out[i].exponent + 1);
    ++out[i].exponent;
  }
  return out;
}

BigInt smooth_value(const std::vector<SmoothFactor>& smooth) {
  BigInt v = 1;
  for (const auto& f : smooth) v *= pow_ui(BigInt(static_cast<unsigned long>(f.prime)), f.exponent);
  return v;
}

BigInt product_of(const std::vector<std::uint64_t>& values) {
  BigInt v = 1;
  for (auto a : values) v *= static_cast<unsigned long>(a);
  return v;
}

}  // namespace

std::string_view to_string(Profile p) { return p == Profile::kStrict ? "strict" : "desk"; }

Profile parse_profile(std::string_view text) {
  if (text == "strict") return Profile::kStrict;
  if (text == "desk") return Profile::kDesk;
  throw Error(Errc::kMalformed, "unknown profile '" + std::string(text) + "'");
}

BigInt compute_alpha(const BigInt& delta, const BigInt& W, unsigned n, const BigInt& T, const BigInt& M) {
  const BigInt mbar = M - 1;
  BigInt e = mod_pow(delta, n, mbar) + delta * mod_pow(W, n - 1, mbar);
  e = mod_floor(e % mbar * T, mbar);
  return mod_pow(delta, e, M);
}

BigInt compute_beta(const BigInt& delta, const BigInt& W, unsigned n, const BigInt& T, const BigInt& M) {
  const BigInt mbar = M - 1;
  const BigInt e = mod_floor(mod_pow(W, n, mbar) * T, mbar);
  return mod_pow(delta, e, M);
}

SystemParams generate_params(unsigned n, Profile profile, Rng& rng, const ParamOptions& options) {
  if (n < 4 || n % 2 != 0) throw Error(Errc::kBadLength, "n must be even and >= 4, got " + std::to_string(n));
  if (options.pool_ceiling < 2) throw Error(Errc::kInvalidArgument, "pool ceiling must be >= 2");

  SystemParams params;
  params.n = n;
  params.profile = profile;
  params.pool_ceiling = options.pool_ceiling;
  params.smooth_part = smooth_exponents(n, profile);

  const std::uint64_t dbar_hi = profile == Profile::kStrict ? kMaxDbar : std::min<std::uint64_t>(kMaxDbar, 16ULL * n);
  params.dbar = random_prime(rng, BigInt(static_cast<unsigned long>(2 * n + 1)),
                             BigInt(static_cast<unsigned long>(dbar_hi)));
  const BigInt two_n = pow_ui(BigInt(2), n);
  do {
    params.Dbar = random_prime(rng, two_n, 2 * two_n - 1);
  } while (params.Dbar == params.dbar);
  do {
    params.T = random_prime(rng, two_n, 2 * two_n - 1);
  } while (params.T == params.dbar || params.T == params.Dbar);

  const BigInt base = params.dbar * params.Dbar * params.T * smooth_value(params.smooth_part);
  const BigInt bound = pow_ui(BigInt(static_cast<unsigned long>(options.pool_ceiling)), n);

  // Cofactor = product of tracked primes sized so that M just exceeds the bound.
  const int deficit = static_cast<int>(bit_length(bound)) - static_cast<int>(bit_length(base)) + 1;
  std::vector<BigInt> tracked;
  BigInt pre = 1;
  while (deficit - static_cast<int>(bit_length(pre)) > 72) {
    BigInt q = random_prime(rng, pow_ui(BigInt(2), 63), pow_ui(BigInt(2), 64) - 1);
    tracked.push_back(q);
    pre *= q;
  }
  unsigned last_bits = static_cast<unsigned>(std::max(8, deficit - static_cast<int>(bit_length(pre)) + 1));

  BigInt last;
  bool found = false;
  for (std::size_t trial = 0; trial < options.max_trials && !found; ++trial) {
    if (trial > 0 && trial % 64 == 0) ++last_bits;
    last = random_prime(rng, pow_ui(BigInt(2), last_bits - 1), pow_ui(BigInt(2), last_bits) - 1);
    params.M = base * pre * last + 1;
    found = params.M > bound && is_probable_prime(params.M);
  }
  if (!found) throw Error(Errc::kSearchExhausted, "no prime modulus found");
  tracked.push_back(last);

  std::vector<PrimePower> factors;
  factors.push_back({params.dbar, 1});
  factors.push_back({params.Dbar, 1});
  factors.push_back({params.T, 1});
  for (const auto& f : params.smooth_part) factors.push_back({BigInt(static_cast<unsigned long>(f.prime)), f.exponent});
  for (const auto& q : tracked) factors.push_back({q, 1});
  params.mbar = FactoredInteger::from_factors(std::move(factors));
  if (params.mbar.value() != params.M - 1) throw Error(Errc::kInvalidArgument, "internal: M - 1 factorization mismatch");

  const BigInt mbar = params.M - 1;
  const BigInt s_lo = pow_ui(BigInt(2), 31);
  do {
    params.S = random_prime(rng, s_lo, 2 * s_lo - 1);
  } while (mbar % params.S == 0 || params.S == params.dbar || params.S == params.Dbar || params.S == params.T);

  return params;
}

void complete_private_key(PrivateKey& priv, const SystemParams& params) {
  const BigInt mbar = params.M - 1;
  priv.delta_inv = mod_inv(priv.delta, mbar);
  priv.w_inv_sq = mod_inv(priv.W * priv.W % params.M, params.M);
}

PublicKey public_shell(const SystemParams& params) {
  PublicKey pub;
  pub.n = params.n;
  pub.M = params.M;
  pub.S = params.S;
  pub.T = params.T;
  return pub;
}

KeyPair generate_keypair(const SystemParams& params, Rng& rng) {
  const unsigned n = params.n;
  const BigInt& M = params.M;
  const BigInt mbar = M - 1;
  const BigInt delta_order = params.dbar * params.Dbar * params.T;

  KeyPair kp;
  PrivateKey& priv = kp.priv;
  PublicKey& pub = kp.pub;
  pub = public_shell(params);
  priv.Dbar = params.Dbar;
  priv.dbar = params.dbar;

  // delta = g^(M-1 / (dbar Dbar T)) has order exactly dbar * Dbar * T.
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt == kKeyRetries) throw Error(Errc::kSearchExhausted, "no admissible delta");
    const BigInt g = find_generator(M, params.mbar, rng);
    priv.delta = mod_pow(g, mbar / delta_order, M);
    if (priv.delta <= 1 || priv.delta >= mbar) continue;
    if (gcd(priv.delta, mbar) != 1) continue;
    if (element_order(priv.delta, M, params.mbar) != delta_order) continue;
    break;
  }

  const OmegaSet omega = omega_simple(n);
  const IntPool pool{2, params.pool_ceiling};
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt == kKeyRetries) throw Error(Errc::kSearchExhausted, "could not produce distinct C_i");
    priv.A = sample_coprime(n, pool, rng);
    priv.lever = sample_lever(n, omega, rng);
    // dbar | W would make dbar | W Q for every Q, leaving signing no abar.
    do {
      priv.W = rng.uniform_range(2, mbar - 1);
    } while (mod_pow(priv.W, mbar / params.T, M) == 1 || priv.W % params.dbar == 0);

    pub.C.clear();
    std::set<BigInt> seen;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      BigInt base = BigInt(static_cast<unsigned long>(priv.A[i])) * mod_pow(priv.W, priv.lever[i], M) % M;
      BigInt c = mod_pow(base, priv.delta, M);
      ok = c > 1 && seen.insert(c).second;
      pub.C.push_back(std::move(c));
    }
    if (ok) break;
  }

  pub.alpha = compute_alpha(priv.delta, priv.W, n, params.T, M);
  pub.beta = compute_beta(priv.delta, priv.W, n, params.T, M);

  // hbar = alpha * delta^-1 * (W * prod A_i)^(-delta S)
  const BigInt wa = priv.W * product_of(priv.A) % M;
  const BigInt e = mod_floor(priv.delta * params.S, mbar);
  priv.hbar = pub.alpha * mod_inv(priv.delta, M) % M * mod_inv(mod_pow(wa, e, M), M) % M;

  complete_private_key(priv, params);
  return kp;
}

ValidationResult validate_params(const SystemParams& params) {
  using R = ValidationResult;
  const unsigned n = params.n;
  if (n < 2 || n % 2 != 0) return R::fail("n even");
  if (!is_probable_prime(params.M)) return R::fail("M prime");
  const BigInt mbar = params.M - 1;
  for (const BigInt* v : {&params.dbar, &params.Dbar, &params.T, &params.S}) {
    if (!is_probable_prime(*v)) return R::fail("dbar, Dbar, T, S prime");
  }
  const BigInt* four[] = {&params.dbar, &params.Dbar, &params.T, &params.S};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (gcd(*four[i], *four[j]) != 1) return R::fail("dbar, Dbar, T, S pairwise coprime");
    }
  }
  if (params.dbar < 5 || params.dbar > kMaxDbar) return R::fail("dbar in [5, 2^16]");
  if (params.profile == Profile::kStrict) {
    const BigInt two_n = pow_ui(BigInt(2), n);
    if (params.Dbar < two_n || params.T < two_n) return R::fail("Dbar, T >= 2^n");
  }
  if (mbar % (params.dbar * params.Dbar * params.T) != 0) return R::fail("dbar Dbar T | M - 1");
  if (gcd(params.S, mbar) != 1) return R::fail("gcd(S, M - 1) = 1");
  if (!params.mbar.is_consistent() || params.mbar.value() != mbar) return R::fail("M - 1 factorization");
  if (mbar % smooth_value(params.smooth_part) != 0) return R::fail("smooth part divides M - 1");
  std::uint64_t exponent_product = 1;
  for (const auto& f : params.smooth_part) exponent_product *= f.exponent;
  if (params.profile == Profile::kStrict && exponent_product < 1024) return R::fail("prod e_i >= 2^10");
  if (params.M <= pow_ui(BigInt(static_cast<unsigned long>(params.pool_ceiling)), n)) {
    return R::fail("M > pool_ceiling^n");
  }
  return R::pass();
}

ValidationResult validate_keypair(const PublicKey& pub, const PrivateKey& priv, const SystemParams& params) {
  using R = ValidationResult;
  if (auto p = validate_params(params); !p) return p;
  const unsigned n = params.n;
  const BigInt& M = params.M;
  const BigInt mbar = M - 1;

  if (pub.n != n || pub.M != M || pub.S != params.S || pub.T != params.T) return R::fail("public constants match params");
  if (priv.Dbar != params.Dbar || priv.dbar != params.dbar) return R::fail("private constants match params");
  if (pub.C.size() != n || priv.A.size() != n || priv.lever.size() != n) return R::fail("sequence lengths");

  for (auto a : priv.A) {
    if (a < 2 || a > params.pool_ceiling) return R::fail("A_i in pool");
  }
  if (!validate_coprime(priv.A)) return R::fail("A coprime sequence");
  if (!priv.lever.is_injection_into(omega_simple(n))) return R::fail("lever injection into Omega");

  if (priv.delta <= 1 || priv.delta >= mbar || gcd(priv.delta, mbar) != 1) return R::fail("gcd(delta, M - 1) = 1");
  if (element_order(priv.delta, M, params.mbar) != params.dbar * params.Dbar * params.T) {
    return R::fail("order of delta = dbar Dbar T");
  }
  if (priv.W <= 1 || priv.W >= mbar || mod_pow(priv.W, mbar / params.T, M) == 1) return R::fail("T | order of W");
  if (priv.W % params.dbar == 0) return R::fail("dbar does not divide W");

  std::set<BigInt> seen;
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt& c = pub.C[i];
    if (c <= 1 || c >= M || !seen.insert(c).second) return R::fail("C_i distinct in (1, M)");
    BigInt base = BigInt(static_cast<unsigned long>(priv.A[i])) * mod_pow(priv.W, priv.lever[i], M) % M;
    if (mod_pow(base, priv.delta, M) != c) return R::fail("C_i = (A_i W^l(i))^delta");
  }

  if (pub.alpha != compute_alpha(priv.delta, priv.W, n, params.T, M)) return R::fail("alpha definition");
  if (pub.beta != compute_beta(priv.delta, priv.W, n, params.T, M)) return R::fail("beta definition");
  // alpha = delta * hbar * (W * prod A_i)^(delta S)
  const BigInt wa = priv.W * product_of(priv.A) % M;
  const BigInt rhs = priv.delta * priv.hbar % M * mod_pow(wa, mod_floor(priv.delta * params.S, mbar), M) % M;
  if (rhs != pub.alpha) return R::fail("hbar identity");

  if (priv.delta_inv != mod_inv(priv.delta, mbar)) return R::fail("cached delta^-1");
  if (priv.w_inv_sq != mod_inv(priv.W * priv.W % M, M)) return R::fail("cached W^-2");
  return R::pass();
}

}  // namespace reesse
