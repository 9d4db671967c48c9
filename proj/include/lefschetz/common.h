// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEFSCHETZ_COMMON_H_
#define LEFSCHETZ_COMMON_H_

#include <gmpxx.h>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lefschetz {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Characteristic mask over a ground set {0, ..., m-1}; bit i is element i.
using Subset = std::uint64_t;

// Ground sets of products E ⊔_0 E need 2m-1 bits, so single matroids stop at
// 32 elements regardless of user overrides.
inline constexpr int kHardMaxGroundSize = 32;

constexpr Subset Singleton(int e) { return Subset{1} << e; }
constexpr Subset FullSet(int m) {
  return m >= 64 ? ~Subset{0} : (Subset{1} << m) - 1;
}
constexpr bool Contains(Subset s, int e) { return ((s >> e) & 1u) != 0; }
constexpr bool IsSubsetOf(Subset a, Subset b) { return (a & ~b) == 0; }
inline int Cardinality(Subset s) { return std::popcount(s); }

std::vector<int> Elements(Subset s);
Subset FromElements(const std::vector<int>& elements);

// "{0,2,5}"
std::string FormatSubset(Subset s);

constexpr int SignOf(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

// Malformed or out-of-range user input: bad documents, non-automorphisms,
// size caps.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold by construction failed (route disagreement,
// unbalanced fan, non-integral trace, ...).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Outcome of a structural self-check: how many instances were examined and
// a bounded sample of the violations found.
struct Validation {
  static constexpr std::size_t kMaxRecorded = 20;

  std::string name;
  std::size_t checked = 0;
  std::size_t violation_count = 0;
  std::vector<std::string> violations;

  bool passed() const { return violation_count == 0; }
  void Fail(std::string message) {
    ++violation_count;
    if (violations.size() < kMaxRecorded) violations.push_back(std::move(message));
  }
  void Merge(const Validation& other) {
    checked += other.checked;
    for (const auto& v : other.violations) Fail(v);
    violation_count += other.violation_count - other.violations.size();
  }
};

}  // namespace lefschetz

#endif  // LEFSCHETZ_COMMON_H_
