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

#include "reesse/common.hpp"

namespace reesse {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kNotCoprime: return "NotCoprime";
    case Errc::kNotAUnit: return "NotAUnit";
    case Errc::kBadExponent: return "BadExponent";
    case Errc::kNotResidue: return "NotResidue";
    case Errc::kIncompatible: return "Incompatible";
    case Errc::kBadLength: return "BadLength";
    case Errc::kTooSmall: return "TooSmall";
    case Errc::kPoolExhausted: return "PoolExhausted";
    case Errc::kZeroPlaintext: return "ZeroPlaintext";
    case Errc::kMalformed: return "Malformed";
    case Errc::kSearchExhausted: return "SearchExhausted";
    case Errc::kNoDecode: return "NoDecode";
    case Errc::kTooLarge: return "TooLarge";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

std::uint64_t Rng::uniform_u64(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw Error(Errc::kInvalidArgument, "uniform_u64: empty range");
  std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
  return dist(engine_);
}

BigInt Rng::random_bits(unsigned bits) {
  BigInt out = 0;
  unsigned filled = 0;
  while (filled < bits) {
    unsigned take = bits - filled < 64 ? bits - filled : 64;
    std::uint64_t word = engine_();
    if (take < 64) word &= (std::uint64_t{1} << take) - 1;
    BigInt w;
    mpz_import(w.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
    out <<= take;
    out += w;
    filled += take;
  }
  return out;
}

BigInt Rng::uniform_below(const BigInt& bound) {
  if (bound <= 0) throw Error(Errc::kInvalidArgument, "uniform_below: bound must be positive");
  if (bound == 1) return 0;
  BigInt top = bound - 1;
  unsigned bits = static_cast<unsigned>(mpz_sizeinbase(top.get_mpz_t(), 2));
  // Rejection sampling keeps the distribution exact.
  for (;;) {
    BigInt candidate = random_bits(bits);
    if (candidate < bound) return candidate;
  }
}

BigInt Rng::uniform_range(const BigInt& lo, const BigInt& hi) {
  if (lo > hi) throw Error(Errc::kInvalidArgument, "uniform_range: empty range");
  BigInt span = hi - lo + 1;
  return lo + uniform_below(span);
}

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

BigInt parse_decimal(std::string_view text) {
  if (text.empty()) throw Error(Errc::kMalformed, "empty integer");
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(Errc::kMalformed, "non-digit in integer '" + std::string(text) + "'");
  }
  if (text.size() > 1 && text.front() == '0') {
    throw Error(Errc::kMalformed, "leading zero in integer '" + std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

}  // namespace reesse
