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

#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "reesse/common.hpp"
#include "reesse/numtheory.hpp"
#include "test_support.hpp"

namespace reesse {
namespace {

using testing::small_primes_below;

BigInt B(long v) { return BigInt(v); }

std::set<long> brute_roots(long n, long c, long p) {
  std::set<long> out;
  for (long x = 0; x < p; ++x) {
    if (mod_pow(B(x), B(n), B(p)) == mod_floor(B(c), B(p))) out.insert(x);
  }
  return out;
}

TEST(CommonTest, DecimalRoundTripAndStrictness) {
  const BigInt v("123456789012345678901234567890");
  EXPECT_EQ(parse_decimal(to_decimal(v)), v);
  EXPECT_EQ(parse_decimal("0"), 0);
  for (const char* bad : {"", "01", "-5", "12a", " 7", "7 "}) {
    try {
      parse_decimal(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kMalformed);
    }
  }
}

TEST(CommonTest, RngIsDeterministicAndInRange) {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const BigInt x = a.uniform_range(B(5), B(17));
    EXPECT_EQ(x, b.uniform_range(B(5), B(17)));
    EXPECT_GE(x, 5);
    EXPECT_LE(x, 17);
  }
  EXPECT_LT(a.random_bits(10), 1024);
}

TEST(ModPowTest, Examples) {
  EXPECT_EQ(mod_pow(B(3), B(12), B(31)), 8);
  EXPECT_EQ(mod_pow(B(4), B(4), B(31)), 8);
  EXPECT_EQ(mod_pow(B(5), B(7), B(11)), 3);
  EXPECT_EQ(mod_pow(B(9), B(0), B(31)), 1);
  EXPECT_THROW(mod_pow(B(2), B(-1), B(7)), Error);
}

TEST(ModInvTest, Examples) {
  EXPECT_EQ(mod_inv(B(10), B(11)), 10);
  EXPECT_EQ(mod_inv(B(1), B(97)), 1);
  try {
    mod_inv(B(4), B(8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotCoprime);
  }
}

TEST(ModInvTest, RandomPairsInvert) {
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    const BigInt m = rng.uniform_range(B(2), BigInt(1) << 80);
    const BigInt a = rng.uniform_below(m);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (g != 1) continue;
    EXPECT_EQ(a * mod_inv(a, m) % m, 1 % m);
  }
}

TEST(FactoredIntegerTest, MergesAndValidates) {
  const auto f = FactoredInteger::from_factors({{B(3), 1}, {B(2), 1}, {B(3), 1}});
  EXPECT_EQ(f.value(), 18);
  ASSERT_EQ(f.factors().size(), 2u);
  EXPECT_EQ(f.factors()[1], (PrimePower{B(3), 2}));
  EXPECT_TRUE(f.is_consistent());
  EXPECT_THROW(FactoredInteger::from_factors({{B(4), 1}}), Error);
}

TEST(ElementOrderTest, Examples) {
  const auto f30 = FactoredInteger::from_factors({{B(2), 1}, {B(3), 1}, {B(5), 1}});
  EXPECT_EQ(element_order(B(3), B(31), f30), 30);
  EXPECT_EQ(element_order(B(1), B(31), f30), 1);
  const auto f10 = FactoredInteger::from_factors({{B(2), 1}, {B(5), 1}});
  EXPECT_EQ(element_order(B(10), B(11), f10), 2);
  try {
    element_order(B(22), B(11), f10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotAUnit);
  }
}

TEST(ElementOrderTest, MatchesBruteForce) {
  for (auto p : small_primes_below(200)) {
    const auto f = factor_small(p - 1);
    for (long x = 1; x < static_cast<long>(p); ++x) {
      long e = 1;
      BigInt acc = x;
      while (acc != 1) {
        acc = acc * x % static_cast<long>(p);
        ++e;
      }
      ASSERT_EQ(element_order(B(x), B(p), f), e) << "x=" << x << " p=" << p;
    }
  }
}

TEST(FindGeneratorTest, ProducesFullOrder) {
  Rng rng(1);
  EXPECT_EQ(find_generator(B(3), factor_small(2), rng), 2);
  for (auto p : small_primes_below(300)) {
    if (p < 3) continue;
    const auto f = factor_small(p - 1);
    const BigInt g = find_generator(B(p), f, rng);
    EXPECT_EQ(element_order(g, B(p), f), B(p - 1));
  }
  const auto f10 = factor_small(10);
  EXPECT_EQ(element_order(B(2), B(11), f10), 10);
}

TEST(NthRootTest, Examples) {
  EXPECT_EQ(nth_root_coprime(B(3), B(5), B(11)), 3);
  EXPECT_EQ(nth_root_coprime(B(7), B(1), B(11)), 1);
  EXPECT_EQ(nth_root_residue(B(3), B(5), B(13)), 8);
  EXPECT_EQ(nth_root_residue(B(3), B(1), B(13)), 1);
  try {
    nth_root_residue(B(3), B(2), B(13));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotResidue);
  }
  try {
    nth_root_coprime(B(2), B(3), B(11));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kBadExponent);
  }
}

TEST(NthRootTest, CoprimeRootRoundTripsExhaustively) {
  for (auto p : small_primes_below(2000)) {
    const long pl = static_cast<long>(p);
    long n = 1;
    while (std::gcd(n, pl - 1) != 1 || n == 1) {
      if (n > pl) break;
      ++n;
    }
    if (std::gcd(n, pl - 1) != 1) continue;
    for (long x = 1; x < pl; ++x) {
      ASSERT_EQ(nth_root_coprime(B(n), mod_pow(B(x), B(n), B(pl)), B(pl)), x) << "p=" << p << " n=" << n;
    }
  }
}

TEST(NthRootTest, RootsAgreeWithBruteForceSmallPrimes) {
  for (auto p : small_primes_below(100)) {
    const long pl = static_cast<long>(p);
    for (long n = 1; n < 2 * pl; ++n) {
      const bool coprime = std::gcd(n, pl - 1) == 1;
      const bool residue_case = (pl - 1) % n == 0 && std::gcd(n, (pl - 1) / n) == 1;
      for (long c = 0; c < pl; ++c) {
        const auto roots = brute_roots(n, c, pl);
        if (coprime) {
          ASSERT_EQ(roots.size(), 1u);
          EXPECT_EQ(nth_root_coprime(B(n), B(c), B(pl)), *roots.begin());
        }
        if (residue_case) {
          if (roots.empty()) {
            EXPECT_THROW(nth_root_residue(B(n), B(c), B(pl)), Error);
          } else {
            const BigInt r = nth_root_residue(B(n), B(c), B(pl));
            EXPECT_TRUE(roots.count(r.get_si())) << "p=" << p << " n=" << n << " c=" << c;
          }
        }
      }
    }
  }
}

TEST(ReduceRootTest, Examples) {
  // 7 mu = 1 (mod 10) gives mu = 3.
  for (long c = 1; c < 11; ++c) {
    const auto r = reduce_root_congruence(B(7), B(c), B(11));
    EXPECT_EQ(r.exponent, 1);
    EXPECT_EQ(r.residue, mod_pow(B(c), B(3), B(11)));
  }
  const auto one = reduce_root_congruence(B(6), B(1), B(11));
  EXPECT_EQ(one.exponent, 2);
  EXPECT_EQ(one.residue, 1);
  EXPECT_THROW(reduce_root_congruence(B(5), B(3), B(11)), Error);
}

TEST(ReduceRootTest, NonResidueHasNoSolutionsButReducedFormMight) {
  // x^6 = 2 (mod 11) is unsolvable, yet x^2 = 2^2 has solutions 2 and 9.
  EXPECT_TRUE(brute_roots(6, 2, 11).empty());
  EXPECT_EQ(brute_roots(2, 4, 11), (std::set<long>{2, 9}));
  try {
    reduce_root_congruence(B(6), B(2), B(11));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotResidue);
  }
}

TEST(ReduceRootTest, SolutionSetsCoincideSmallPrimes) {
  for (auto p : small_primes_below(100)) {
    const long pl = static_cast<long>(p);
    for (long n = 2; n < 2 * pl; ++n) {
      if ((pl - 1) % n == 0) continue;
      for (long c = 0; c < pl; ++c) {
        try {
          const auto r = reduce_root_congruence(B(n), B(c), B(pl));
          EXPECT_EQ(brute_roots(n, c, pl), brute_roots(r.exponent.get_si(), r.residue.get_si(), pl))
              << "p=" << p << " n=" << n << " c=" << c;
        } catch (const Error& e) {
          ASSERT_EQ(e.code(), Errc::kNotResidue);
          EXPECT_TRUE(brute_roots(n, c, pl).empty());
        }
      }
    }
  }
}

TEST(DoubleCongruenceTest, Examples) {
  EXPECT_EQ(double_congruence_solve(B(3), B(5), B(8), B(10), B(11)), 2);
  EXPECT_EQ(double_congruence_solve(B(4), B(9), B(1), B(1), B(13)), 1);
  try {
    double_congruence_solve(B(3), B(5), B(8), B(9), B(11));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kIncompatible);
  }
}

TEST(DoubleCongruenceTest, UniqueSolutionIffCompatible) {
  Rng rng(99);
  const auto primes = small_primes_below(200);
  for (int i = 0; i < 3000; ++i) {
    const long p = static_cast<long>(primes[rng.uniform_u64(0, primes.size() - 1)]);
    long s, t;
    do {
      s = static_cast<long>(rng.uniform_u64(1, 40));
      t = static_cast<long>(rng.uniform_u64(1, 40));
    } while (std::gcd(s, t) != 1);
    // Half the draws are built from a known x so compatible cases are common.
    long a, b;
    if (i % 2 == 0) {
      const long x = static_cast<long>(rng.uniform_u64(0, p - 1));
      a = mod_pow(B(x), B(s), B(p)).get_si();
      b = mod_pow(B(x), B(t), B(p)).get_si();
    } else {
      a = static_cast<long>(rng.uniform_u64(0, p - 1));
      b = static_cast<long>(rng.uniform_u64(0, p - 1));
    }
    std::set<long> sols;
    for (long x = 0; x < p; ++x) {
      if (mod_pow(B(x), B(s), B(p)) == a && mod_pow(B(x), B(t), B(p)) == b) sols.insert(x);
    }
    if (sols.empty()) {
      EXPECT_THROW(double_congruence_solve(B(s), B(t), B(a), B(b), B(p)), Error);
    } else {
      ASSERT_EQ(sols.size(), 1u);
      EXPECT_EQ(double_congruence_solve(B(s), B(t), B(a), B(b), B(p)), *sols.begin());
    }
  }
}

TEST(ContinuedFractionTest, Examples) {
  const auto q = cf_expand(B(342114), B(510931));
  ASSERT_GE(q.size(), 6u);
  EXPECT_EQ(std::vector<BigInt>(q.begin(), q.begin() + 6), (std::vector<BigInt>{0, 1, 2, 37, 1, 2}));
  EXPECT_EQ(cf_expand(B(1), B(2)), (std::vector<BigInt>{0, 2}));
  EXPECT_EQ(cf_expand(B(8), B(5)), (std::vector<BigInt>{1, 1, 1, 2}));

  const auto cv = cf_convergents(q);
  EXPECT_EQ(cv[2].numerator, 2);
  EXPECT_EQ(cv[2].denominator, 3);
  const auto half = cf_convergents(cf_expand(B(1), B(2)));
  ASSERT_EQ(half.size(), 2u);
  EXPECT_EQ(half[0].numerator, 0);
  EXPECT_EQ(half[0].denominator, 1);
  EXPECT_EQ(half[1].numerator, 1);
  EXPECT_EQ(half[1].denominator, 2);
  const auto eight_fifths = cf_convergents(cf_expand(B(8), B(5)));
  EXPECT_EQ(eight_fifths.back().numerator, 8);
  EXPECT_EQ(eight_fifths.back().denominator, 5);
}

TEST(ContinuedFractionTest, ConvergentInvariants) {
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const BigInt den = rng.uniform_range(B(1), BigInt(1) << 64);
    const BigInt num = rng.uniform_below(den * 3);
    const auto q = cf_expand(num, den);
    if (q.size() > 1) {
      EXPECT_GE(q.back(), 2);
    }
    const auto cv = cf_convergents(q);
    mpq_class x(num, den);
    x.canonicalize();
    for (std::size_t k = 0; k < cv.size(); ++k) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), cv[k].numerator.get_mpz_t(), cv[k].denominator.get_mpz_t());
      EXPECT_EQ(g, 1);
      if (k + 1 < cv.size()) {
        mpq_class diff = x - mpq_class(cv[k].numerator, cv[k].denominator);
        diff = abs(diff);
        // Equality only at the penultimate convergent.
        if (k + 2 < cv.size()) {
          EXPECT_LT(diff, mpq_class(BigInt(1), cv[k].denominator * cv[k + 1].denominator));
        } else {
          EXPECT_LE(diff, mpq_class(BigInt(1), cv[k].denominator * cv[k + 1].denominator));
        }
      }
    }
    mpq_class last(cv.back().numerator, cv.back().denominator);
    EXPECT_EQ(last, x);
  }
}

TEST(FactorSmallTest, ReconstructsValue) {
  Rng rng(3);
  for (std::uint64_t n : {1ULL, 2ULL, 97ULL, 1ULL << 40, 600851475143ULL, 18446744073709551557ULL}) {
    EXPECT_EQ(factor_small(n).value(), BigInt(static_cast<unsigned long>(n)));
  }
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = rng.uniform_u64(2, 1ULL << 62);
    const auto f = factor_small(n);
    EXPECT_TRUE(f.is_consistent());
    EXPECT_EQ(f.value(), BigInt(static_cast<unsigned long>(n)));
  }
}

}  // namespace
}  // namespace reesse
