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

#ifndef LEFSCHETZ_FAN_H_
#define LEFSCHETZ_FAN_H_

#include <map>
#include <string>
#include <vector>

#include "lefschetz/common.h"
#include "lefschetz/matroid.h"
#include "lefschetz/pl_function.h"

namespace lefschetz {

// Links F_1 ⊋ F_2 ⊋ ... ⊋ F_l of proper nonempty subsets; E and ∅ are
// implicit. The cone it indexes is spanned by the v_{F_i}.
using Chain = std::vector<Subset>;

// Throws InputError unless `chain` is strictly decreasing with proper
// nonempty links.
void ValidateChain(const Chain& chain, int ground_size);

// "{1,2} {1}", or "-" for the empty chain.
std::string FormatChain(const Chain& chain);

// Integer-weighted cones of the permutahedral fan, all of one dimension.
// Zero weights are never stored.
class WeightedFan {
 public:
  WeightedFan(int ground_size, int dimension);

  int ground_size() const { return ground_size_; }
  int dimension() const { return dimension_; }
  const std::map<Chain, Integer>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }

  // Adds `weight` to the cone of `chain`.
  void Add(const Chain& chain, const Integer& weight);
  Integer Weight(const Chain& chain) const;

  // One line per cone, "<links> : <weight>", in key order.
  std::string Dump() const;

  bool operator==(const WeightedFan& other) const = default;

 private:
  int ground_size_;
  int dimension_;
  std::map<Chain, Integer> weights_;
};

// Σ_M in its fine subdivision: every complete flag of proper nonempty flats
// with weight 1. Dimension n = rk(M) - 1.
WeightedFan MatroidFan(const Matroid& m);

// A facet σ ⊃ τ obtained by inserting `link` into τ before position
// `position` (0-based).
struct Filling {
  Subset link = 0;
  int position = 0;
  Integer weight;
};

// A codimension-one face together with all stored facets containing it.
struct FaceStar {
  Chain face;
  std::vector<Filling> fillings;
};

// Faces obtained by deleting one link from a facet, in chain order.
std::vector<FaceStar> CodimOneStars(const WeightedFan& fan);

// Layer values of a vector c (dehomogenized, x_0 = 0) constant on
// E \ F_1, F_1 \ F_2, ..., F_l; then c = Σ_j coefficients[j]·v_{F_j}
// modulo 𝟙. `ok` is false if c is not constant on the layers, that is,
// c ∉ span(τ).
struct SpanCoefficients {
  bool ok = false;
  std::vector<Integer> coefficients;
};
SpanCoefficients ExpressInChain(const std::vector<Integer>& c,
                                const Chain& chain, int ground_size);

// Σ_{σ ⊃ τ} ω(σ)·Dehomogenize(S_σ).
std::vector<Integer> StarSum(const FaceStar& star, int ground_size);

struct BalancingResult {
  bool balanced = true;
  std::size_t faces_checked = 0;
  Chain witness;  // first unbalanced face
};
BalancingResult CheckBalancing(const WeightedFan& fan);

// Compares f against its linear extension from the generators of the cone
// at pairwise sums, at the sum of all generators and at 16 pseudo-random
// positive rational combinations (fixed seed).
bool LinearityGuard(const PLFunction& f, const Chain& chain);

struct DivisorOptions {
  bool check_linearity = true;
};

// f·X. Throws ConsistencyError if X is unbalanced at some face, if f is not
// linear on some facet (when checked) or if the result is unbalanced.
WeightedFan Divisor(const PLFunction& f, const WeightedFan& fan,
                    const DivisorOptions& options = {});

// Weight of the empty chain of a 0-dimensional fan.
Integer Degree(const WeightedFan& fan);

// (r_0, ..., r_l) with r_i = rk(F_i) - rk(F_{i+1}) - 1, F_0 = E and
// F_{l+1} = ∅. Throws InputError on a non-flat link.
std::vector<int> GapSequence(const Chain& chain, const Matroid& m);

}  // namespace lefschetz

#endif  // LEFSCHETZ_FAN_H_
