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

#ifndef REESSE_COMMON_HPP_
#define REESSE_COMMON_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reesse {

using BigInt = mpz_class;

// One bit per element, each 0 or 1. Index 0 is b_1.
using BitString = std::vector<std::uint8_t>;

enum class Errc {
  kInvalidArgument,
  kNotCoprime,
  kNotAUnit,
  kBadExponent,
  kNotResidue,
  kIncompatible,
  kBadLength,
  kTooSmall,
  kPoolExhausted,
  kZeroPlaintext,
  kMalformed,
  kSearchExhausted,
  kNoDecode,
  kTooLarge,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Deterministic random source. Every randomized routine in the library takes
// one of these explicitly; the same seed reproduces the same outputs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  // Uniform on [lo, hi], both inclusive.
  std::uint64_t uniform_u64(std::uint64_t lo, std::uint64_t hi);
  // Uniform on [0, bound). bound must be positive.
  BigInt uniform_below(const BigInt& bound);
  // Uniform on [lo, hi], both inclusive.
  BigInt uniform_range(const BigInt& lo, const BigInt& hi);
  // Uniform on [0, 2^bits).
  BigInt random_bits(unsigned bits);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Canonical decimal rendering, no leading zeros.
std::string to_decimal(const BigInt& v);
// Strict decimal parser: digits only, no sign, no leading zeros (except "0").
BigInt parse_decimal(std::string_view text);

}  // namespace reesse

#endif  // REESSE_COMMON_HPP_
