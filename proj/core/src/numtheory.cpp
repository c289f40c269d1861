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

#include "reesse/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace reesse {

namespace {

constexpr int kPrimalityRounds = 40;

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

void require_modulus(const BigInt& m, const char* who) {
  if (m < 2) throw Error(Errc::kInvalidArgument, std::string(who) + ": modulus must be >= 2");
}

void require_prime(const BigInt& p, const char* who) {
  if (!is_probable_prime(p)) throw Error(Errc::kInvalidArgument, std::string(who) + ": modulus is not prime");
}

void require_positive_exponent(const BigInt& n, const char* who) {
  if (n < 1) throw Error(Errc::kBadExponent, std::string(who) + ": exponent must be positive");
}

// Extended Euclid: returns (u, v) with u*s + v*t = gcd(s, t).
std::pair<BigInt, BigInt> bezout(const BigInt& s, const BigInt& t) {
  BigInt g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t());
  return {u, v};
}

// Signed power: negative exponents go through the inverse.
BigInt signed_pow(const BigInt& base, const BigInt& exponent, const BigInt& p) {
  if (exponent >= 0) return mod_pow(base, exponent, p);
  return mod_pow(mod_inv(base, p), -exponent, p);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t pollard_rho(std::uint64_t n, std::uint64_t c) {
  // Brent's cycle detection with batched gcds.
  std::uint64_t y = 2, x = 2, q = 1, g = 1, ys = 2;
  std::uint64_t r = 1;
  constexpr std::uint64_t kBatch = 128;
  auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    do {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
        y = f(y);
        q = mulmod_u64(q, x > y ? x - y : y - x, n);
      }
      g = gcd_u64(q, n);
      k += kBatch;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd_u64(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void factor_rec(std::uint64_t n, std::vector<PrimePower>& out) {
  if (n == 1) return;
  if (is_probable_prime(BigInt(static_cast<unsigned long>(n)))) {
    out.push_back({BigInt(static_cast<unsigned long>(n)), 1});
    return;
  }
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t d = pollard_rho(n, c);
    if (d != n && d != 1) {
      factor_rec(d, out);
      factor_rec(n / d, out);
      return;
    }
  }
}

}  // namespace

FactoredInteger FactoredInteger::from_factors(std::vector<PrimePower> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  FactoredInteger out;
  out.value_ = 1;
  for (auto& f : factors) {
    if (f.exponent == 0) throw Error(Errc::kInvalidArgument, "factor with zero exponent");
    if (!is_probable_prime(f.prime)) {
      throw Error(Errc::kInvalidArgument, "factor " + to_decimal(f.prime) + " is not prime");
    }
    if (!out.factors_.empty() && out.factors_.back().prime == f.prime) {
      out.factors_.back().exponent += f.exponent;
    } else {
      out.factors_.push_back(f);
    }
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    out.value_ *= pw;
  }
  return out;
}

bool FactoredInteger::is_consistent() const {
  BigInt product = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (f.exponent == 0 || !is_probable_prime(f.prime)) return false;
    if (i > 0 && !(factors_[i - 1].prime < f.prime)) return false;
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    product *= pw;
  }
  return product == value_;
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), kPrimalityRounds) != 0;
}

BigInt next_prime(const BigInt& n) {
  BigInt out;
  mpz_nextprime(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

BigInt random_prime(Rng& rng, const BigInt& lo, const BigInt& hi, std::size_t max_trials) {
  if (lo > hi) throw Error(Errc::kInvalidArgument, "random_prime: empty range");
  for (std::size_t trial = 0; trial < max_trials; ++trial) {
    BigInt candidate = rng.uniform_range(lo, hi);
    if (is_probable_prime(candidate)) return candidate;
  }
  throw Error(Errc::kSearchExhausted, "no prime found in [" + to_decimal(lo) + ", " + to_decimal(hi) + "]");
}

BigInt mod_pow(const BigInt& base, const BigInt& exponent, const BigInt& modulus) {
  require_modulus(modulus, "mod_pow");
  if (exponent < 0) throw Error(Errc::kInvalidArgument, "mod_pow: negative exponent");
  BigInt out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

BigInt mod_inv(const BigInt& a, const BigInt& m) {
  require_modulus(m, "mod_inv");
  BigInt out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(Errc::kNotCoprime, to_decimal(a) + " has no inverse modulo " + to_decimal(m));
  }
  return out;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt out;
  mpz_mod(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return out;
}

BigInt element_order(const BigInt& x, const BigInt& modulus, const FactoredInteger& group_order) {
  require_modulus(modulus, "element_order");
  if (gcd(mod_floor(x, modulus), modulus) != 1) {
    throw Error(Errc::kNotAUnit, to_decimal(x) + " is not a unit modulo " + to_decimal(modulus));
  }
  if (mod_pow(x, group_order.value(), modulus) != 1) {
    throw Error(Errc::kInvalidArgument, "element_order: supplied group order is not a multiple of the order");
  }
  BigInt order = group_order.value();
  for (const auto& f : group_order.factors()) {
    for (unsigned e = 0; e < f.exponent; ++e) {
      BigInt reduced = order / f.prime;
      if (mod_pow(x, reduced, modulus) != 1) break;
      order = reduced;
    }
  }
  return order;
}

BigInt find_generator(const BigInt& modulus, const FactoredInteger& order_factors, Rng& rng) {
  require_modulus(modulus, "find_generator");
  if (order_factors.value() != modulus - 1) {
    throw Error(Errc::kInvalidArgument, "find_generator: factorization does not match modulus - 1");
  }
  if (modulus == 2) return 1;
  const BigInt group = modulus - 1;
  for (;;) {
    BigInt g = rng.uniform_range(2, modulus - 1);
    bool ok = true;
    for (const auto& f : order_factors.factors()) {
      if (mod_pow(g, group / f.prime, modulus) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

BigInt nth_root_coprime(const BigInt& n, const BigInt& c, const BigInt& p) {
  require_positive_exponent(n, "nth_root_coprime");
  require_prime(p, "nth_root_coprime");
  const BigInt group = p - 1;
  if (gcd(n, group) != 1) {
    throw Error(Errc::kBadExponent, "gcd(" + to_decimal(n) + ", p - 1) != 1");
  }
  if (group == 1) return mod_floor(c, p);  // p = 2: x^n = x
  BigInt mu = mod_inv(n, group);
  return mod_pow(c, mu, p);
}

BigInt nth_root_residue(const BigInt& n, const BigInt& c, const BigInt& p) {
  require_positive_exponent(n, "nth_root_residue");
  require_prime(p, "nth_root_residue");
  const BigInt group = p - 1;
  if (group % n != 0) throw Error(Errc::kBadExponent, to_decimal(n) + " does not divide p - 1");
  const BigInt cofactor = group / n;
  if (gcd(n, cofactor) != 1) throw Error(Errc::kBadExponent, "gcd(n, (p - 1)/n) != 1");
  const BigInt cr = mod_floor(c, p);
  if (cr == 0) return 0;
  if (mod_pow(cr, cofactor, p) != 1) {
    throw Error(Errc::kNotResidue, to_decimal(c) + " is not an n-th power residue");
  }
  if (cofactor == 1) return 1;  // only c = 1 passes the residue test
  BigInt mu = mod_inv(n, cofactor);
  return mod_pow(cr, mu, p);
}

ReducedCongruence reduce_root_congruence(const BigInt& n, const BigInt& c, const BigInt& p) {
  require_positive_exponent(n, "reduce_root_congruence");
  require_prime(p, "reduce_root_congruence");
  const BigInt group = p - 1;
  if (group % n == 0) throw Error(Errc::kBadExponent, to_decimal(n) + " divides p - 1");
  const BigInt k = gcd(n, group);
  const BigInt m = n / k;
  const BigInt reduced_group = group / k;
  const BigInt cr = mod_floor(c, p);
  if (cr == 0) return {k, 0};
  // Outside the k-th powers x^n = c has no solution while x^k = c' may.
  if (mod_pow(cr, reduced_group, p) != 1) {
    throw Error(Errc::kNotResidue, to_decimal(c) + " is not a k-th power residue; x^n = c has no solution");
  }
  BigInt mu = reduced_group == 1 ? BigInt(1) : mod_inv(m, reduced_group);
  return {k, mod_pow(cr, mu, p)};
}

BigInt double_congruence_solve(const BigInt& s, const BigInt& t, const BigInt& a, const BigInt& b,
                               const BigInt& p) {
  require_positive_exponent(s, "double_congruence_solve");
  require_positive_exponent(t, "double_congruence_solve");
  require_prime(p, "double_congruence_solve");
  if (gcd(s, t) != 1) throw Error(Errc::kBadExponent, "gcd(s, t) != 1");
  const BigInt ar = mod_floor(a, p);
  const BigInt br = mod_floor(b, p);
  if (mod_pow(ar, t, p) != mod_pow(br, s, p)) {
    throw Error(Errc::kIncompatible, "a^t != b^s (mod p)");
  }
  if (ar == 0 || br == 0) return 0;  // compatible zeros force x = 0
  auto [u, v] = bezout(s, t);
  return signed_pow(ar, u, p) * signed_pow(br, v, p) % p;
}

std::vector<BigInt> cf_expand(const BigInt& numerator, const BigInt& denominator) {
  if (denominator <= 0) throw Error(Errc::kInvalidArgument, "cf_expand: denominator must be positive");
  if (numerator < 0) throw Error(Errc::kInvalidArgument, "cf_expand: numerator must be nonnegative");
  std::vector<BigInt> quotients;
  BigInt a = numerator, b = denominator;
  while (b != 0) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    quotients.push_back(q);
    a = b;
    b = r;
  }
  // The Euclidean algorithm already ends on a quotient >= 2 unless the
  // fraction is an integer; nothing to canonicalize beyond that.
  return quotients;
}

std::vector<Convergent> cf_convergents(std::span<const BigInt> quotients) {
  std::vector<Convergent> out;
  out.reserve(quotients.size());
  BigInt p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
  BigInt p_prev2 = 0, q_prev2 = 1;  // p_{-2}, q_{-2}
  for (std::size_t k = 0; k < quotients.size(); ++k) {
    BigInt p = quotients[k] * p_prev + p_prev2;
    BigInt q = quotients[k] * q_prev + q_prev2;
    out.push_back({p, q, k});
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
  }
  return out;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using U128 = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<U128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exponent >>= 1;
  }
  return result;
}

FactoredInteger factor_small(std::uint64_t n) {
  if (n == 0) throw Error(Errc::kInvalidArgument, "factor_small: zero has no factorization");
  std::vector<PrimePower> found;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    while (n % p == 0) {
      found.push_back({BigInt(static_cast<unsigned long>(p)), 1});
      n /= p;
    }
  }
  for (std::uint64_t d = 7; d < 10000 && d * d <= n; d += 2) {
    while (n % d == 0) {
      found.push_back({BigInt(static_cast<unsigned long>(d)), 1});
      n /= d;
    }
  }
  factor_rec(n, found);
  return FactoredInteger::from_factors(std::move(found));
}

}  // namespace reesse
