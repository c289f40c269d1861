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

#include <algorithm>
#include <map>
#include <set>
#include <thread>
#include <vector>

#include "reesse/attacks.hpp"
#include "reesse/numtheory.hpp"

namespace reesse {
namespace {

// Exact re-check of a probe bound: gz/M - L/q in (0, 1 / (2^shift q^2)).
mpq_class rational(const BigInt& num, const BigInt& den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

bool under_bound(const BigInt& gz, const BigInt& M, const BigInt& L, const BigInt& q, unsigned shift) {
  const mpq_class diff = rational(gz, M) - rational(L, q);
  if (diff <= 0) return false;
  return diff < rational(1, (BigInt(1) << shift) * q * q);
}

std::vector<std::uint64_t> to_u64(const std::vector<BigInt>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& x : v) out.push_back(x.get_ui());
  return out;
}

TEST(SlackKeyTest, WorkedExampleResidues) {
  const auto key = example1_slack_key();
  EXPECT_EQ(key.pub.M, 510931);
  EXPECT_EQ(to_u64(key.pub.C), (std::vector<std::uint64_t>{113101, 79182, 175066, 433093, 501150, 389033}));
  EXPECT_EQ(key.A, (std::vector<std::uint64_t>{11, 10, 3, 7, 17, 13}));
}

TEST(SlackKeyTest, DefiningRelationAndDeterminism) {
  for (auto mode : {LeverMode::kConstant, LeverMode::kInjective}) {
    Rng a(5), b(5);
    const auto ka = make_slack_key(8, mode, a);
    const auto kb = make_slack_key(8, mode, b);
    EXPECT_EQ(ka.pub.C, kb.pub.C);
    EXPECT_EQ(ka.pub.M, kb.pub.M);
    EXPECT_TRUE(is_probable_prime(ka.pub.M));
    for (std::size_t i = 0; i < 8; ++i) {
      const BigInt expect = BigInt(static_cast<unsigned long>(ka.A[i])) *
                            mod_pow(ka.W, BigInt(static_cast<unsigned long>(ka.lever[i])), ka.pub.M) % ka.pub.M;
      EXPECT_EQ(ka.pub.C[i], expect);
    }
    const auto max_a = *std::max_element(ka.A.begin(), ka.A.end());
    BigInt bound = 1;
    for (int i = 0; i < 8; ++i) bound *= static_cast<unsigned long>(max_a);
    EXPECT_GT(ka.pub.M, bound);
  }
}

TEST(SlackKeyTest, ConstantModeRatiosCancelW) {
  Rng rng(6);
  const auto k = make_slack_key(6, LeverMode::kConstant, rng);
  const BigInt& M = k.pub.M;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      EXPECT_EQ(k.pub.C[i] * mod_inv(k.pub.C[j], M) % M,
                BigInt(static_cast<unsigned long>(k.A[i])) * mod_inv(BigInt(static_cast<unsigned long>(k.A[j])), M) % M);
    }
  }
}

TEST(LeverModeTest, RoundTrip) {
  for (auto m : {LeverMode::kConstant, LeverMode::kInjective}) EXPECT_EQ(parse_lever_mode(to_string(m)), m);
  EXPECT_THROW(parse_lever_mode("bogus"), Error);
}

TEST(ConstantAttackTest, FirstSixPrimes) {
  const std::vector<std::uint64_t> A{2, 3, 5, 7, 11, 13};
  const auto key = slack_key_from(A, std::vector<std::uint64_t>(6, 5), BigInt(98765), next_prime(BigInt(1000000000)));
  const auto r = cf_attack_constant_lever(key.pub);
  ASSERT_TRUE(r.recovered);
  EXPECT_EQ(r.A, A);
  EXPECT_EQ(r.wk, mod_pow(BigInt(98765), BigInt(5), key.pub.M));
}

TEST(ConstantAttackTest, SmallestCase) {
  const std::vector<std::uint64_t> A{5, 7};
  const auto key = slack_key_from(A, {3, 3}, BigInt(4242), next_prime(BigInt(100000)));
  const auto r = cf_attack_constant_lever(key.pub);
  ASSERT_TRUE(r.recovered);
  EXPECT_EQ(r.A, A);
}

TEST(ConstantAttackTest, RandomKeysCrossIndexConsistency) {
  Rng rng(7);
  int exact = 0;
  for (int t = 0; t < 30; ++t) {
    const auto key = make_slack_key(6 + 2 * (t % 4), LeverMode::kConstant, rng);
    const auto r = cf_attack_constant_lever(key.pub);
    if (!r.recovered) continue;
    const BigInt& M = key.pub.M;
    for (std::size_t i = 0; i < key.pub.n(); ++i) {
      EXPECT_EQ(key.pub.C[i] * mod_inv(BigInt(static_cast<unsigned long>(r.A[i])), M) % M, r.wk);
    }
    exact += r.A == key.A;
  }
  EXPECT_GE(exact, 28);
}

TEST(ConstantAttackTest, InjectiveWorkedExampleIsNotRecovered) {
  const auto key = example1_slack_key();
  const auto r = cf_attack_constant_lever(key.pub);
  EXPECT_TRUE(!r.recovered || r.A != key.A);
  EXPECT_EQ(r.denominators.size(), 5u);
}

TEST(ProbeTest, WorkedExample) {
  const auto key = example1_slack_key();
  const std::vector<std::size_t> x{1, 5}, y{4};
  const auto res = cf_probe(key.pub, x, y, 1201);
  EXPECT_EQ(res.gz, 342114);

  const auto q = cf_expand(res.gz, key.pub.M);
  ASSERT_GE(q.size(), 4u);
  EXPECT_EQ(std::vector<BigInt>(q.begin(), q.begin() + 4), (std::vector<BigInt>{0, 1, 2, 37}));

  const mpq_class diff = rational(res.gz, key.pub.M) - rational(2, 3);
  EXPECT_GT(diff, rational(2922769, 1000000000));
  EXPECT_LT(diff, rational(2922770, 1000000000));
  EXPECT_LT(diff, mpq_class(1, 72));

  auto it = std::find_if(res.candidates.begin(), res.candidates.end(),
                         [](const ProbeCandidate& c) { return c.Ay == 3; });
  ASSERT_NE(it, res.candidates.end());
  EXPECT_EQ(it->L, 2);
  EXPECT_TRUE(it->satisfies(ProbeBound::kBound4));
  EXPECT_NE(key.A[4], 3u);
  EXPECT_EQ(key.A[4], 17u);
}

TEST(ProbeTest, CandidatesSatisfyTaggedBoundsExactly) {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const auto key = make_slack_key(8, LeverMode::kInjective, rng);
    const std::vector<std::size_t> x{0, 3}, y{6};
    const auto res = cf_probe(key.pub, x, y, 1201);
    const unsigned n = 8, m = 2, h = 1;
    for (const auto& c : res.candidates) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), c.L.get_mpz_t(), c.Ay.get_mpz_t());
      EXPECT_EQ(g, 1);
      EXPECT_NE(c.bounds, 0u);
      EXPECT_EQ(c.satisfies(ProbeBound::kBound4), under_bound(res.gz, key.pub.M, c.L, c.Ay, n - m - h));
      EXPECT_EQ(c.satisfies(ProbeBound::kBound4Prime), under_bound(res.gz, key.pub.M, c.L, c.Ay, 1));
      EXPECT_EQ(c.satisfies(ProbeBound::kBound4Double), under_bound(res.gz, key.pub.M, c.L, c.Ay, n - 3));
    }
  }
}

TEST(ProbeTest, EqualLeverSumsExposeTrueProduct) {
  const std::vector<std::uint64_t> A{3, 5, 7, 11, 13, 17};
  // l(1) + l(4) = l(2) + l(3) = 8.
  const auto key = slack_key_from(A, {1, 3, 5, 7, 9, 11}, BigInt(12345), next_prime(BigInt(1000000000)));
  const std::vector<std::size_t> x{0, 3}, y{1, 2};
  const auto res = cf_probe(key.pub, x, y, 1201);
  EXPECT_TRUE(std::any_of(res.candidates.begin(), res.candidates.end(),
                          [](const ProbeCandidate& c) { return c.Ay == 35 && c.L > 0; }));
}

TEST(ProbeTest, RejectsBadIndexLists) {
  const auto key = example1_slack_key();
  const std::vector<std::size_t> a{1}, b{1}, empty{}, out{6};
  EXPECT_THROW(cf_probe(key.pub, a, b, 1201), Error);
  EXPECT_THROW(cf_probe(key.pub, empty, a, 1201), Error);
  EXPECT_THROW(cf_probe(key.pub, out, a, 1201), Error);
}

TEST(ProbeTest, BoundLabels) {
  EXPECT_EQ(bound_label(1), "4");
  EXPECT_EQ(bound_label(2), "4'");
  EXPECT_EQ(bound_label(7), "4,4',4''");
}

TEST(ProbeStatisticsTest, FalseCandidatesAppear) {
  Rng rng(9);
  const auto s = probe_statistics(8, 20, 2, 1, rng);
  EXPECT_EQ(s.trials, 20u);
  EXPECT_GT(s.probes, 0u);
  EXPECT_GT(s.hits4pp, 0u);
}

TEST(ProbeStatisticsTest, DegenerateAndDeterministic) {
  Rng rng(10);
  const auto s = probe_statistics(8, 5, 0, 0, rng);
  EXPECT_EQ(s.probes, 0u);
  EXPECT_EQ(s.hits4 + s.hits4p + s.hits4pp + s.true_hits, 0u);
  Rng a(11), b(11);
  const auto sa = probe_statistics(8, 10, 2, 1, a);
  const auto sb = probe_statistics(8, 10, 2, 1, b);
  EXPECT_EQ(sa.probes, sb.probes);
  EXPECT_EQ(sa.hits4, sb.hits4);
  EXPECT_EQ(sa.hits4pp, sb.hits4pp);
}

TEST(DiscreteLogTest, MatchesBruteForce) {
  const std::uint64_t p = 1009, g = 11;  // 11 generates (Z/1009)*
  for (std::uint64_t e = 0; e < p - 1; e += 7) {
    const std::uint64_t y = powmod_u64(g, e, p);
    EXPECT_EQ(discrete_log(g, y, p, p - 1), e);
  }
}

class LeverOracleTest : public ::testing::Test {
 protected:
  static constexpr std::uint64_t kM = 1000003;
  std::vector<std::uint64_t> C{123456, 654321, 111111, 999999, 500000, 42};

  static void expect_reproduces(const std::vector<std::uint64_t>& C, const LeverOracleAnswer& a) {
    ASSERT_EQ(a.A.size(), C.size());
    std::set<std::uint64_t> levers(a.lever.begin(), a.lever.end());
    EXPECT_EQ(levers.size(), C.size());
    for (std::size_t i = 0; i < C.size(); ++i) {
      EXPECT_EQ(mulmod_u64(a.A[i], powmod_u64(a.W, a.lever[i], kM), kM), C[i]);
      EXPECT_GE(a.lever[i], 1u);
      EXPECT_LE(a.lever[i], kM - 1);
    }
  }
};

TEST_F(LeverOracleTest, Postcondition) {
  LeverOracle oracle(1);
  expect_reproduces(C, oracle.query(C, kM));
}

TEST_F(LeverOracleTest, CachedAnswersRepeat) {
  LeverOracle oracle(2);
  const auto first = oracle.query(C, kM);
  EXPECT_EQ(oracle.query(C, kM), first);
  EXPECT_EQ(oracle.cache_size(), 1u);
  auto reordered = C;
  std::swap(reordered[0], reordered[1]);
  const auto other = oracle.query(reordered, kM);
  EXPECT_EQ(oracle.cache_size(), 2u);
  expect_reproduces(reordered, other);
}

TEST_F(LeverOracleTest, ConcurrentQueriesAgree) {
  LeverOracle oracle(3);
  std::vector<LeverOracleAnswer> answers(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < answers.size(); ++i) {
    threads.emplace_back([&, i] { answers[i] = oracle.query(C, kM); });
  }
  for (auto& t : threads) t.join();
  for (const auto& a : answers) EXPECT_EQ(a, answers[0]);
  EXPECT_EQ(oracle.cache_size(), 1u);
}

TEST_F(LeverOracleTest, Errors) {
  LeverOracle oracle(4);
  try {
    oracle.query(C, (1ULL << 32) + 15);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kTooLarge);
  }
  EXPECT_THROW(oracle.query(C, 1000001), Error);  // composite
  const std::vector<std::uint64_t> zero{0, 5};
  EXPECT_THROW(oracle.query(zero, kM), Error);
}

TEST(DensityTest, ExactValues) {
  EXPECT_EQ(assp_density(80, 696), rational(6400, 696));
  EXPECT_EQ(assp_density(80, 696), rational(800, 87));
  EXPECT_EQ(assp_density(37, 37 * 37), 1);
  struct Case {
    std::uint64_t n, log_m;
    long hundredths;
  };
  for (const Case& c : {Case{80, 696, 919}, Case{96, 864, 1066}, Case{112, 1030, 1218}, Case{128, 1216, 1347}}) {
    const mpq_class err = assp_density(c.n, c.log_m) - rational(c.hundredths, 100);
    EXPECT_LE(abs(err), mpq_class(1, 100)) << c.n;
  }
}

TEST(TlpTest, ImageTables) {
  EXPECT_EQ(tlp_image(11), (std::vector<std::uint64_t>{1, 3, 4, 5, 6}));
  EXPECT_EQ(tlp_image(13), (std::vector<std::uint64_t>{1, 3, 4, 5, 6, 9, 12}));
  EXPECT_EQ(tlp_image(17), (std::vector<std::uint64_t>{1, 2, 4, 8, 9, 10, 12, 13, 14}));
}

TEST(TlpTest, SolveMatchesDirectPowers) {
  // 9^9 = 5 (mod 11) as well, so the complete set has four elements.
  EXPECT_EQ(tlp_brute(5, 11), (std::vector<std::uint64_t>{3, 6, 8, 9}));
  // 6^6 = 15^15 = 8 (mod 17); only 10 and 14 reach 2.
  EXPECT_EQ(tlp_brute(2, 17), (std::vector<std::uint64_t>{10, 14}));
  EXPECT_EQ(tlp_brute(8, 17), (std::vector<std::uint64_t>{6, 15}));
  EXPECT_TRUE(tlp_brute(7, 11).empty());
}

TEST(TlpTest, ImageIsUnionOfPreimages) {
  for (std::uint64_t p : {11u, 13u, 17u, 101u, 997u}) {
    std::size_t total = 0;
    std::vector<std::uint64_t> image;
    for (std::uint64_t y = 0; y < p; ++y) {
      const auto sols = tlp_brute(y, p);
      for (auto x : sols) EXPECT_EQ(powmod_u64(x, x, p), y);
      if (!sols.empty()) image.push_back(y);
      total += sols.size();
    }
    EXPECT_EQ(total, p - 1);
    EXPECT_EQ(image, tlp_image(p));
  }
}

TEST(TlpTest, TooLarge) {
  EXPECT_THROW(tlp_image(kTlpMaxModulus + 1), Error);
  EXPECT_THROW(tlp_brute(2, kTlpMaxModulus + 1), Error);
}

}  // namespace
}  // namespace reesse
