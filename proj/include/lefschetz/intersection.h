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

#ifndef LEFSCHETZ_INTERSECTION_H_
#define LEFSCHETZ_INTERSECTION_H_

#include <span>
#include <utility>
#include <vector>

#include "lefschetz/common.h"
#include "lefschetz/fan.h"
#include "lefschetz/matroid.h"
#include "lefschetz/pl_function.h"

namespace lefschetz {

// Subsets of E ⊔_0 E on 2m-1 bits: bit 0 is the shared element 0, bits
// 1..m-1 the first copy of 1..m-1 and bits m..2m-2 the second copy.
Subset EncodePair(Subset f, Subset g, int ground_size);
std::pair<Subset, Subset> DecodePair(Subset s, int ground_size);

// g_i(F, G) for 1 <= i <= n and a valid pair:
//   -1 if 0 ∉ F and rk F + rk G >= rk(F ∪ G) + n + 1 - i,
//   +1 if 0 ∈ F and rk F + rk G <= rk(F ∪ G) + n + 1 - i,
//    0 otherwise.
int GValue(const Matroid& m, int i, Subset f, Subset g);

// g_i as a function on the product, ground set of size 2m-1.
PLFunction DiagonalFunction(const Matroid& m, int i);

// Ψ in dehomogenized coordinates: e_i ↦ e_{ψ(i)}, or ↦ -𝟙 when ψ(i) = 0.
RationalVector ApplyInduced(const MatroidAutomorphism& psi,
                            std::span<const Rational> x);

// f_k = Γ^* g_k, x ↦ g_k(x, Ψx).
PLFunction PullbackFunction(const Matroid& m, const MatroidAutomorphism& psi,
                            int k);

// f_k(S) by evaluating the pullback at v_S.
Integer FValueGeneric(const Matroid& m, const MatroidAutomorphism& psi, int k,
                      Subset s);

// f_k(S) from the four-case closed form, with c = n - k + 1:
//   -1 if 0 ∉ S ∪ ψS and 2 rk S >= rk(S ∪ ψS) + c,
//   +1 if 0 ∈ S ∩ ψS and 2 rk S <= rk(S ∪ ψS) + c,
//   +1 if 0 lies in exactly one of S, ψS and rk S <= c,
//    0 otherwise.
int FValueClosed(const Matroid& m, const MatroidAutomorphism& psi, int k,
                 Subset s);

struct IntersectionOptions {
  bool check_linearity = true;
  // Perturbs the weight of one facet of X_0 (failure-path fixture).
  bool corrupt_weight = false;
};

struct IntersectionRun {
  Matroid matroid;
  MatroidAutomorphism psi;
  std::vector<WeightedFan> cycles;     // X_0, ..., X_n
  std::vector<PLFunction> functions;   // f_1, ..., f_n
  Integer degree;
};

// X_0 = Σ_M, X_k = f_k·X_{k-1}, degree = deg X_n.
IntersectionRun ComputeIntersection(const Matroid& m,
                                    const MatroidAutomorphism& psi,
                                    const IntersectionOptions& options = {});

// Every X_k is balanced.
Validation ValidateCycleBalancing(const IntersectionRun& run);

// Facets of X_k are chains of flats with gap sequence (r, s, 0, ..., 0),
// r + s = k, or (r, s, 0, ..., 0, 1, 0, ..., 0), r + s = k - 1, subject to
// the side conditions on F_1 and on the position of 0 and ψ^{-1}(0).
Validation ValidateXkStructure(const IntersectionRun& run);

// Closed-form facet weights: 1, rk F_1^ψ - rk F_1, or
// (-1)^(n - rk F_1) β(Fix(M/F_1)) depending on the facet's type.
Validation ValidateFacetWeights(const IntersectionRun& run);

// Per-gap weight contributions at every codimension-one face of X_{k-1},
// against the case table indexed by how many fillings meet {0, ψ^{-1}(0)}.
// Faces whose fillings do not partition their gap are skipped.
Validation ValidateWeightTable(const IntersectionRun& run);

// FValueGeneric against FValueClosed on every proper nonempty flat and k.
Validation CompareFValueRoutes(const IntersectionRun& run);

}  // namespace lefschetz

#endif  // LEFSCHETZ_INTERSECTION_H_
