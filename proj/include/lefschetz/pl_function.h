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

#ifndef LEFSCHETZ_PL_FUNCTION_H_
#define LEFSCHETZ_PL_FUNCTION_H_

#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "lefschetz/common.h"

namespace lefschetz {

// Points of R^E / R·1 for E = {0, ..., m-1} are stored in dehomogenized
// coordinates: the m-1 entries x_1..x_{m-1}, with x_0 = 0 implicit.

// Image of the indicator vector v_S: the indicator of S on 1..m-1 when
// 0 ∉ S, and indicator(S) - 1 (that is, -indicator(E \ S)) when 0 ∈ S.
RationalVector Dehomogenize(Subset s, int ground_size);

// The unique expansion of a point along a chain of subsets: with x_0 = 0
// prepended and m := min_i x_i,
//   x = shift·1 + Σ_j coefficient_j · v_{S_j},
// where shift = m, the S_j are the strict upper level sets
// {i : x_i >= λ_j} for the distinct values λ_1 > ... > λ_t > m, and all
// coefficients are positive. The S_j form a decreasing chain of proper
// nonempty subsets.
struct ChainExpansion {
  Rational shift;
  std::vector<std::pair<Subset, Rational>> terms;
};
ChainExpansion ExpandAlongChain(std::span<const Rational> x, int ground_size);

// A function on R^E (with linear behaviour along 1) that is evaluated at
// points given in dehomogenized coordinates.
//
// Two flavours exist. A *subset-valued* function is piecewise linear on the
// permutahedral fan and is determined by its values f(S) on indicator
// vectors together with f(E); evaluation goes through ExpandAlongChain:
//   f(x) = Σ_j c_j f(S_j) + shift · f(E).
// An *evaluator* function is an arbitrary callable, used for pullbacks whose
// linearity domains are not permutahedral cones.
//
// Value(S) always means the value at the point Dehomogenize(S); for a
// subset-valued function this is f(S) - [0 ∈ S]·f(E). Values are memoized
// and must be integral.
class PLFunction {
 public:
  using SubsetValues = std::function<Integer(Subset)>;
  using Evaluator = std::function<Rational(std::span<const Rational>)>;

  static PLFunction FromSubsetValues(int ground_size, SubsetValues values,
                                     Integer top_value = 0);
  static PLFunction FromEvaluator(int ground_size, Evaluator evaluator);

  int ground_size() const { return ground_size_; }
  int coordinate_count() const { return ground_size_ - 1; }

  Rational Evaluate(std::span<const Rational> x) const;
  Integer Value(Subset s) const;

 private:
  struct Cache;

  PLFunction(int ground_size, Evaluator evaluator);

  int ground_size_ = 0;
  Evaluator evaluator_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace lefschetz

#endif  // LEFSCHETZ_PL_FUNCTION_H_
