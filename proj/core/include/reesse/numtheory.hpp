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

// Modular arithmetic over GMP integers plus the constructive root, double
// congruence and continued-fraction routines the cryptosystem is built on.
// All functions are pure.

#ifndef REESSE_NUMTHEORY_HPP_
#define REESSE_NUMTHEORY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "reesse/common.hpp"

namespace reesse {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A nonnegative integer together with its complete factorization.
class FactoredInteger {
 public:
  FactoredInteger() = default;

  // Sorts and merges repeated primes. Throws kInvalidArgument if a listed
  // "prime" fails the probabilistic primality test or an exponent is zero.
  static FactoredInteger from_factors(std::vector<PrimePower> factors);

  const BigInt& value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  // Re-checks both invariants: product equals value, primes strictly
  // increasing and probably prime.
  bool is_consistent() const;

 private:
  BigInt value_ = 1;
  std::vector<PrimePower> factors_;
};

// Miller-Rabin with 40 rounds; error probability at most 2^-80.
bool is_probable_prime(const BigInt& n);
// Smallest probable prime strictly greater than n.
BigInt next_prime(const BigInt& n);
// A uniformly drawn probable prime in [lo, hi]; throws kSearchExhausted when
// none is found after `max_trials` draws.
BigInt random_prime(Rng& rng, const BigInt& lo, const BigInt& hi, std::size_t max_trials = 100000);

// base^exponent mod modulus, result in [0, modulus).
BigInt mod_pow(const BigInt& base, const BigInt& exponent, const BigInt& modulus);
// x with a*x = 1 (mod m); throws kNotCoprime when gcd(a, m) != 1.
BigInt mod_inv(const BigInt& a, const BigInt& m);
// Least nonnegative representative of a mod m.
BigInt mod_floor(const BigInt& a, const BigInt& m);

// Multiplicative order of x modulo `modulus`, where `group_order` is the
// factored order of the unit group (M - 1 for a prime M).
BigInt element_order(const BigInt& x, const BigInt& modulus, const FactoredInteger& group_order);

// A primitive root of the prime `modulus`; `order_factors` must factor
// modulus - 1 completely.
BigInt find_generator(const BigInt& modulus, const FactoredInteger& order_factors, Rng& rng);

// The unique n-th root of c modulo the prime p when gcd(n, p - 1) = 1.
BigInt nth_root_coprime(const BigInt& n, const BigInt& c, const BigInt& p);

// One n-th root of c modulo p when n | p - 1, gcd(n, (p - 1)/n) = 1 and c is
// an n-th power residue: c^mu with mu*n = 1 (mod (p - 1)/n).
BigInt nth_root_residue(const BigInt& n, const BigInt& c, const BigInt& p);

struct ReducedCongruence {
  BigInt exponent;  // k = gcd(n, p - 1)
  BigInt residue;   // c' = c^mu
};

// For n not dividing p - 1, rewrites x^n = c as the equivalent x^k = c'.
// Throws kNotResidue when c is a nonzero non-k-th-power (no solutions), and
// kBadExponent when n divides p - 1.
ReducedCongruence reduce_root_congruence(const BigInt& n, const BigInt& c, const BigInt& p);

// The simultaneous solution of x^s = a, x^t = b (mod p) with gcd(s, t) = 1.
// Throws kIncompatible unless a^t = b^s (mod p).
BigInt double_congruence_solve(const BigInt& s, const BigInt& t, const BigInt& a, const BigInt& b,
                               const BigInt& p);

// Canonical simple continued fraction of numerator/denominator; the last
// partial quotient is at least 2 whenever there is more than one.
std::vector<BigInt> cf_expand(const BigInt& numerator, const BigInt& denominator);

struct Convergent {
  BigInt numerator;
  BigInt denominator;
  std::size_t index = 0;
};

std::vector<Convergent> cf_convergents(std::span<const BigInt> quotients);

// Complete factorization of n < 2^64 by trial division and Pollard rho.
FactoredInteger factor_small(std::uint64_t n);

// (a * b) mod m and a^e mod m on machine words; used by the tiny-modulus
// brute-force tools.
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

}  // namespace reesse

#endif  // REESSE_NUMTHEORY_HPP_
