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

#ifndef LEFSCHETZ_FRAMING_H_
#define LEFSCHETZ_FRAMING_H_

#include <cstddef>
#include <vector>

#include "lefschetz/common.h"
#include "lefschetz/exterior.h"
#include "lefschetz/fan.h"
#include "lefschetz/matroid.h"

namespace lefschetz {

// N×N matrix of Ψ on dehomogenized coordinates, matrix[row][col]; column i
// is Dehomogenize({ψ(i)}).
std::vector<RationalVector> InducedMap(const MatroidAutomorphism& psi);

// Λ^p Ψ applied term by term (never materializing the wedge-power matrix).
ExteriorVector ApplyWedgePower(const MatroidAutomorphism& psi,
                               const ExteriorVector& v);

// Strict chains F_1 ⊋ ... ⊋ F_length of proper nonempty flats, all of rank
// at most max_rank, in lexicographic order of links.
std::vector<Chain> FlatChains(const Matroid& m, int length, int max_rank);

// V_F = v_{F_1} ∧ ... ∧ v_{F_l} in dehomogenized coordinates; the empty
// chain gives the scalar 1.
ExteriorVector VolumeElement(const Chain& chain, int ground_size);

// F_p(Σ_M): the span of V_F over all flat chains of length p.
struct FramingBasis {
  int p = 0;
  std::vector<Chain> generators;
  SparseEchelon echelon;
  std::size_t dimension() const { return echelon.rank(); }
};
FramingBasis BuildFramingBasis(const Matroid& m, int p);

// Tr(Ψ_*, F_p) from the restricted linear map. Checks Λ^pΨ V_F = V_{ψF} for
// every generator and integrality of the result (ConsistencyError).
Integer TraceLinear(const Matroid& m, const MatroidAutomorphism& psi, int p);

// (-1)^p Σ_{F fixed, rk F <= p} μ^ψ(∅, F); the sum is checked against the
// signed count Σ_i (-1)^i of ψ-fixed flat chains of length i and rank <= p.
Integer TraceChains(const Matroid& m, const MatroidAutomorphism& psi, int p);

struct TracePair {
  int p = 0;
  Integer linear;
  Integer chains;
};
struct LefschetzResult {
  Integer sum;
  std::vector<TracePair> traces;
};
// Σ_p (-1)^p Tr(Ψ_*, F_p), both routes; ConsistencyError on disagreement.
LefschetzResult LefschetzSum(const Matroid& m, const MatroidAutomorphism& psi);

struct ResolutionReport {
  int p = 0;
  std::vector<std::size_t> dimensions;  // |C^{<=p}_l|, l = 0..p
  std::vector<std::size_t> ranks;       // rank of ∂_l : C_l -> C_{l+1}
  std::size_t framing_dimension = 0;
  Validation validation;
};
// Exactness of 0 -> RC_0 -> ... -> RC_p -> F_p -> 0 over Q.
ResolutionReport CheckResolution(const Matroid& m, int p);

// For p <= n: chains with all ranks <= p span the same space as all chains
// (trivially at p = n).
bool FramingHyperplaneCheck(const Matroid& m, int p);

}  // namespace lefschetz

#endif  // LEFSCHETZ_FRAMING_H_
