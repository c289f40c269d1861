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

// Lever-function codomains (Omega sets) and random lever injections.

#ifndef REESSE_LEVER_HPP_
#define REESSE_LEVER_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "reesse/common.hpp"

namespace reesse {

enum class OmegaKind { kSimple, kSumFree };

struct OmegaSet {
  std::vector<std::uint64_t> elements;  // strictly increasing, all odd
  OmegaKind kind = OmegaKind::kSimple;

  std::size_t size() const { return elements.size(); }
  std::uint64_t max() const { return elements.empty() ? 0 : elements.back(); }
  bool contains(std::uint64_t v) const;
};

// {1, 3, ..., 2n - 1}; n must be even and at least 2.
OmegaSet omega_simple(std::size_t n);

// Greedy odd set of 2n elements starting from {5, 7, 9}: each new element is
// the next odd number that is not a sum of three distinct earlier elements.
OmegaSet omega_sumfree(std::size_t n);

// Largest sum of two distinct elements of the set (0 for fewer than two).
std::uint64_t max_pair_sum(const OmegaSet& omega);

struct SumFreeCheck {
  enum class Violation { kNone, kEven, kDuplicate, kTripleSum };

  bool ok = true;
  Violation violation = Violation::kNone;
  // kEven: witness[0]; kDuplicate: witness[0..1]; kTripleSum: e1 + e2 + e3 = e4.
  std::array<std::uint64_t, 4> witness{};

  explicit operator bool() const { return ok; }
};

SumFreeCheck validate_sumfree(std::span<const std::uint64_t> candidate);

// ell(1..n), stored 0-based: values[i] is the lever of element i + 1.
struct LeverAssignment {
  std::vector<std::uint64_t> values;

  std::size_t size() const { return values.size(); }
  std::uint64_t operator[](std::size_t i) const { return values[i]; }
  bool is_injection_into(const OmegaSet& omega) const;
};

// Uniformly random injection {1..n} -> omega. Throws kTooSmall if |omega| < n.
LeverAssignment sample_lever(std::size_t n, const OmegaSet& omega, Rng& rng);

}  // namespace reesse

#endif  // REESSE_LEVER_HPP_
