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

#include "reesse/lever.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace reesse {

namespace {

// Bitmap keyed by sum value that grows on demand.
class SumBitmap {
 public:
  bool test(std::uint64_t v) const { return v < bits_.size() && bits_[v]; }
  void set(std::uint64_t v) {
    if (v >= bits_.size()) bits_.resize(std::max<std::size_t>(v + 1, bits_.size() * 2), false);
    bits_[v] = true;
  }

 private:
  std::vector<bool> bits_;
};

}  // namespace

bool OmegaSet::contains(std::uint64_t v) const {
  return std::binary_search(elements.begin(), elements.end(), v);
}

OmegaSet omega_simple(std::size_t n) {
  if (n < 2 || n % 2 != 0) {
    throw Error(Errc::kBadLength, "simple Omega needs an even n >= 2, got " + std::to_string(n));
  }
  OmegaSet out;
  out.kind = OmegaKind::kSimple;
  out.elements.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.elements.push_back(2 * i + 1);
  return out;
}

OmegaSet omega_sumfree(std::size_t n) {
  if (n < 2) throw Error(Errc::kBadLength, "sum-free Omega needs n >= 2");
  const std::size_t target = 2 * n;

  OmegaSet out;
  out.kind = OmegaKind::kSumFree;
  auto& q = out.elements;
  q = {5, 7, 9};

  SumBitmap pair_sums;    // sums of two distinct members
  SumBitmap triple_sums;  // sums of three distinct members
  std::vector<std::uint64_t> pair_list = {12, 14, 16};
  for (auto s : pair_list) pair_sums.set(s);
  triple_sums.set(21);

  while (q.size() < target) {
    std::uint64_t e = q.back() + 2;
    while (triple_sums.test(e)) e += 2;
    // New triples pair e with every existing two-element sum.
    for (auto s : pair_list) triple_sums.set(s + e);
    for (auto member : q) {
      const std::uint64_t s = member + e;
      if (!pair_sums.test(s)) {
        pair_sums.set(s);
        pair_list.push_back(s);
      }
    }
    q.push_back(e);
  }
  return out;
}

std::uint64_t max_pair_sum(const OmegaSet& omega) {
  const auto& e = omega.elements;
  if (e.size() < 2) return 0;
  return e[e.size() - 1] + e[e.size() - 2];
}

SumFreeCheck validate_sumfree(std::span<const std::uint64_t> candidate) {
  SumFreeCheck out;
  std::vector<std::uint64_t> sorted(candidate.begin(), candidate.end());
  for (auto v : sorted) {
    if (v % 2 == 0) {
      out.ok = false;
      out.violation = SumFreeCheck::Violation::kEven;
      out.witness = {v, 0, 0, 0};
      return out;
    }
  }
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      out.ok = false;
      out.violation = SumFreeCheck::Violation::kDuplicate;
      out.witness = {sorted[i], sorted[i], 0, 0};
      return out;
    }
  }
  const std::unordered_set<std::uint64_t> members(sorted.begin(), sorted.end());
  const std::uint64_t top = sorted.empty() ? 0 : sorted.back();
  const std::size_t m = sorted.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::uint64_t pair = sorted[i] + sorted[j];
      if (pair >= top) break;
      for (std::size_t k = j + 1; k < m; ++k) {
        const std::uint64_t triple = pair + sorted[k];
        if (triple > top) break;
        if (members.count(triple)) {
          out.ok = false;
          out.violation = SumFreeCheck::Violation::kTripleSum;
          out.witness = {sorted[i], sorted[j], sorted[k], triple};
          return out;
        }
      }
    }
  }
  return out;
}

bool LeverAssignment::is_injection_into(const OmegaSet& omega) const {
  std::unordered_set<std::uint64_t> seen;
  for (auto v : values) {
    if (!omega.contains(v) || !seen.insert(v).second) return false;
  }
  return true;
}

LeverAssignment sample_lever(std::size_t n, const OmegaSet& omega, Rng& rng) {
  if (omega.size() < n) {
    throw Error(Errc::kTooSmall, "Omega has " + std::to_string(omega.size()) + " elements, need " +
                                     std::to_string(n));
  }
  // Partial Fisher-Yates: the first n slots form a uniform injection.
  std::vector<std::uint64_t> pool = omega.elements;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = rng.uniform_u64(i, pool.size() - 1);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(n);
  return LeverAssignment{std::move(pool)};
}

}  // namespace reesse
