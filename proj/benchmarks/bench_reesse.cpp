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

#include <benchmark/benchmark.h>

#include <map>

#include "reesse/attacks.hpp"
#include "reesse/cipher.hpp"
#include "reesse/keygen.hpp"
#include "reesse/numtheory.hpp"
#include "reesse/sigver.hpp"

namespace reesse {
namespace {

struct Fixture {
  SystemParams params;
  KeyPair keys;
};

const Fixture& desk(unsigned n) {
  static std::map<unsigned, Fixture> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    Rng rng(n);
    Fixture f;
    f.params = generate_params(n, Profile::kDesk, rng);
    f.keys = generate_keypair(f.params, rng);
    it = cache.emplace(n, std::move(f)).first;
  }
  return it->second;
}

BitString alternating(unsigned n) {
  BitString bits(n);
  for (unsigned i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((i + 1) % 2);
  return bits;
}

void BM_Keygen(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(++seed);
    const auto params = generate_params(n, Profile::kDesk, rng);
    benchmark::DoNotOptimize(generate_keypair(params, rng));
  }
}
BENCHMARK(BM_Keygen)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Encrypt(benchmark::State& state) {
  const auto& f = desk(static_cast<unsigned>(state.range(0)));
  const auto bits = alternating(f.params.n);
  for (auto _ : state) benchmark::DoNotOptimize(encrypt(f.keys.pub, bits));
}
BENCHMARK(BM_Encrypt)->Arg(8)->Arg(16);

void BM_Decrypt(benchmark::State& state) {
  const auto& f = desk(static_cast<unsigned>(state.range(0)));
  const auto ct = encrypt(f.keys.pub, alternating(f.params.n));
  for (auto _ : state) benchmark::DoNotOptimize(decrypt(f.keys.priv, f.params, ct));
}
BENCHMARK(BM_Decrypt)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_Sign(benchmark::State& state) {
  const auto& f = desk(static_cast<unsigned>(state.range(0)));
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sign(f.keys.priv, f.params, as_bytes("benchmark"), rng));
}
BENCHMARK(BM_Sign)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_Verify(benchmark::State& state) {
  const auto& f = desk(static_cast<unsigned>(state.range(0)));
  Rng rng(1);
  const auto sig = sign(f.keys.priv, f.params, as_bytes("benchmark"), rng);
  for (auto _ : state) benchmark::DoNotOptimize(verify(f.keys.pub, as_bytes("benchmark"), sig));
}
BENCHMARK(BM_Verify)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_ConstantLeverAttack(benchmark::State& state) {
  Rng rng(7);
  const auto key = make_slack_key(static_cast<std::size_t>(state.range(0)), LeverMode::kConstant, rng);
  for (auto _ : state) benchmark::DoNotOptimize(cf_attack_constant_lever(key.pub));
}
BENCHMARK(BM_ConstantLeverAttack)->DenseRange(6, 12, 2)->Unit(benchmark::kMicrosecond);

void BM_NthRootCoprime(benchmark::State& state) {
  Rng rng(3);
  const BigInt p = next_prime(BigInt(1) << static_cast<unsigned>(state.range(0)));
  BigInt n = 65537;
  while (gcd(n, BigInt(p - 1)) != 1) n += 2;
  const BigInt c = rng.uniform_range(2, p - 1);
  for (auto _ : state) benchmark::DoNotOptimize(nth_root_coprime(n, c, p));
}
BENCHMARK(BM_NthRootCoprime)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

void BM_TlpImage(benchmark::State& state) {
  const auto p = next_prime(BigInt(static_cast<unsigned long>(state.range(0)))).get_ui();
  for (auto _ : state) benchmark::DoNotOptimize(tlp_image(p));
}
BENCHMARK(BM_TlpImage)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace reesse

BENCHMARK_MAIN();
