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

#ifndef LEFSCHETZ_MATROID_H_
#define LEFSCHETZ_MATROID_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/common.h"
#include "lefschetz/lattice.h"
#include "lefschetz/pl_function.h"

namespace lefschetz {

struct MatroidLimits {
  // Elements 0..N, so the default allows N <= 20.
  int max_ground_size = 21;
  std::size_t max_flats = 100000;
};

// A loopless matroid on E = {0, ..., ground_size-1} given by a rank oracle.
// All flats are enumerated at construction. Instances are immutable and
// cheap to copy (shared state).
class Matroid {
 public:
  using RankFunction = std::function<int(Subset)>;

  // U_{rank, ground_size}: rk(S) = min(|S|, rank).
  static Matroid Uniform(int rank, int ground_size,
                         const MatroidLimits& limits = {});
  // Cycle matroid; edge i is element i, rk(S) = |V| - #components(V, S).
  static Matroid Graphic(int vertex_count,
                         const std::vector<std::pair<int, int>>& edges,
                         const MatroidLimits& limits = {});
  // rk(S) = max_B |B ∩ S| over the listed bases. This and FromFlats throw
  // InputError unless the rank axioms hold.
  static Matroid FromBases(int ground_size, std::vector<Subset> bases,
                           const MatroidLimits& limits = {});
  // rk(S) = least rank index of a listed flat containing S.
  static Matroid FromFlats(int ground_size,
                           const std::vector<std::vector<Subset>>& flats_by_rank,
                           const MatroidLimits& limits = {});
  static Matroid FromRankFunction(int ground_size, RankFunction rank,
                                  const MatroidLimits& limits = {});

  int ground_size() const;
  Subset ground_set() const { return FullSet(ground_size()); }
  // rk(E) = n + 1.
  int rank() const;
  // n, the dimension of the projective matroid fan.
  int dimension() const { return rank() - 1; }

  int Rank(Subset s) const;
  Subset Closure(Subset s) const;
  bool IsFlat(Subset s) const;

  // All flats, ordered by rank and then by mask.
  const std::vector<Subset>& flats() const;
  const std::vector<std::vector<Subset>>& flats_by_rank() const;
  // Position in flats(), or -1.
  int FlatIndex(Subset s) const;

  const MatroidLimits& limits() const;

 private:
  struct State;

  explicit Matroid(std::shared_ptr<const State> state)
      : state_(std::move(state)) {}
  static Matroid Build(int ground_size, RankFunction rank,
                       const MatroidLimits& limits);

  std::shared_ptr<const State> state_;
};

// Rank axioms (normalization, unit increase, monotonicity, submodularity).
// Exhaustive over all subset pairs when the ground set has at most 11
// elements, otherwise over `samples` pseudo-random pairs. Returns an empty
// string on success, a description of the first violation otherwise.
std::string CheckRankAxioms(const Matroid& m, std::size_t samples = 200000);

class MatroidAutomorphism {
 public:
  static MatroidAutomorphism Identity(int ground_size);
  // One-line image notation: element e maps to images[e]. Throws InputError
  // if this is not a permutation.
  explicit MatroidAutomorphism(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int e) const { return images_[e]; }
  Subset Apply(Subset s) const;
  const std::vector<int>& images() const { return images_; }
  MatroidAutomorphism Inverse() const;
  bool IsIdentity() const;

 private:
  std::vector<int> images_;
};

// Throws InputError naming a flat whose image is not a flat.
void ValidateAutomorphism(const Matroid& m, const MatroidAutomorphism& psi);
bool IsAutomorphism(const Matroid& m, const MatroidAutomorphism& psi);

// L(M): flats ordered by inclusion, ranked by the matroid rank. Throws
// InputError if M has a loop.
RankedLattice FlatLattice(const Matroid& m);

// M^{<=i}: flats of rank at most i together with E. 0 <= i <= rk(M).
Matroid Truncation(const Matroid& m, int i);

struct Contraction {
  Matroid matroid;
  // New element j is old element original[j].
  std::vector<int> original;
};
// M/F on E \ F (relabelled in increasing order), rk'(S) = rk(S ∪ F) - rk(F).
Contraction Contract(const Matroid& m, Subset flat);

// ψ restricted to E \ F for a ψ-fixed flat F, in the contraction's labels.
MatroidAutomorphism InducedOnContraction(const Contraction& c,
                                         const MatroidAutomorphism& psi);

// Image matroid under the relabelling e ↦ perm[e].
Matroid Relabel(const Matroid& m, const std::vector<int>& perm);

// A subset of E ⊔_0 E written as a pair (F, G): the two copies of E share
// the element 0, so either 0 ∈ F ∩ G or 0 ∉ F ∪ G.
bool IsValidPair(Subset f, Subset g);

// Rank of (F, G) in the matroid of the diagonal, rk(F ∪ G).
int DiagonalRank(const Matroid& m, Subset f, Subset g);

// The generic chain between a quotient `sub` (L(sub) ⊆ L(super)) and
// `super`: intermediates M_0 = sub, ..., M_s = super with
//   rk_{M_i}(S) = min(rk_sub(S) + i, rk_super(S)),
// and functions g'_1..g'_s with
//   g'_i(S) = -1 if rk_super(S) >= rk_sub(S) + s + 1 - i, 0 otherwise
// (including S = E).
struct GenericChain {
  Matroid sub;
  Matroid super;
  int s = 0;
  std::vector<Matroid> intermediates;
  std::vector<PLFunction> functions;  // functions[i-1] is g'_i
};
GenericChain MakeGenericChain(const Matroid& sub, const Matroid& super);

// Flats F with ψ(F) = F, in flats() order.
std::vector<Subset> FixedFlats(const Matroid& m, const MatroidAutomorphism& psi);

// Fix(L(M)) with the restricted rank. Meet- and join-closure is verified
// during construction.
RankedLattice FixedFlatLattice(const Matroid& m,
                               const MatroidAutomorphism& psi);

// F^ψ: the intersection of all ψ-fixed flats containing F.
Subset PsiClosure(const Matroid& m, const MatroidAutomorphism& psi,
                  Subset flat);

}  // namespace lefschetz

#endif  // LEFSCHETZ_MATROID_H_
