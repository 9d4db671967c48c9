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

#ifndef LEFSCHETZ_LATTICE_H_
#define LEFSCHETZ_LATTICE_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "lefschetz/common.h"

namespace lefschetz {

// A finite lattice with an arbitrary integer rank function. Elements are
// indices 0..size()-1; the order, meet and join are stored as dense tables,
// so construction cost is quadratic in the number of elements.
class RankedLattice {
 public:
  // Largest lattice accepted; dense tables beyond this get unreasonable.
  static constexpr std::size_t kMaxElements = 2048;

  // `leq[a * size + b]` is true iff a <= b. The relation must be a partial
  // order with a unique bottom and top in which every pair has a meet and a
  // join; violations throw InputError.
  RankedLattice(std::vector<char> leq, std::vector<int> ranks,
                std::vector<Subset> labels = {});

  // Inclusion order on a family of subsets. `join_closure` maps a union to
  // the smallest family member containing it; the result must lie in the
  // family (checked). Meets are intersections, which must also lie in the
  // family.
  static RankedLattice FromSubsets(
      std::vector<Subset> sets, std::vector<int> ranks,
      const std::function<Subset(Subset)>& join_closure);

  std::size_t size() const { return ranks_.size(); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int rank(int a) const { return ranks_[a]; }
  const std::vector<int>& ranks() const { return ranks_; }
  // rk(top) - rk(bottom) - 1.
  int n() const { return ranks_[top_] - ranks_[bottom_] - 1; }

  bool Leq(int a, int b) const { return leq_[Index(a, b)] != 0; }
  bool Less(int a, int b) const { return a != b && Leq(a, b); }
  int Meet(int a, int b) const { return meet_[Index(a, b)]; }
  int Join(int a, int b) const { return join_[Index(a, b)]; }

  // Subset labels when built from a set family; empty otherwise.
  const std::vector<Subset>& labels() const { return labels_; }
  // Index of the element labelled `s`, or -1.
  int IndexOf(Subset s) const;

  // Elements in a linear extension of the order (bottom first).
  const std::vector<int>& linear_extension() const { return order_; }

  // Same order, different rank function.
  RankedLattice WithRanks(std::vector<int> ranks) const;

  // μ(a, b) by the recursive definition; memoized per lower element.
  // Throws InputError unless a <= b.
  Integer Mobius(int a, int b) const;

  // μ(a, b) as the signed count of strict chains in the open interval (a, b),
  // each chain of length l contributing (-1)^(l+1). Exponential; intended as
  // an independent check of Mobius. Throws InputError unless a < b.
  Integer MobiusViaChains(int a, int b) const;

 private:
  struct MobiusCache;

  RankedLattice() = default;

  std::size_t Index(int a, int b) const {
    return static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b);
  }
  void BuildTables();
  const std::vector<Integer>& MobiusRow(int a) const;

  std::vector<char> leq_;
  std::vector<int> ranks_;
  std::vector<Subset> labels_;
  std::vector<int> meet_;
  std::vector<int> join_;
  std::vector<int> order_;
  int bottom_ = -1;
  int top_ = -1;
  std::shared_ptr<MobiusCache> mobius_;
};

// β(L) = (-1)^(n+1) Σ_F μ(bottom, F) rk(F).
Integer Beta(const RankedLattice& lattice);

// β([F, top]) with the restricted rank:
// (-1)^(rk(top) - rk(F)) Σ_{G >= F} μ(F, G) rk(G).
Integer BetaInterval(const RankedLattice& lattice, int f);

// rk(F) = Σ_{G >= F} (-1)^(rk(top) - rk(G)) β(G) for every F.
bool CheckMobiusInversion(const RankedLattice& lattice);

// (-1)^n β(L) = (rk(G) - rk(bottom))
//               - Σ_{bottom != F, F not in [G, top]} (-1)^(rk(top)-rk(F)-1) β(F).
// For G = bottom the rearranged form degenerates (the β(bottom) term is not in
// the sum), so the unrearranged identity
//   rk(bottom) - rk(G) = Σ_{F not in [G, top]} (-1)^(rk(top)-rk(F)) β(F)
// is checked instead; it reduces to 0 = 0 there.
bool CheckRecursiveBeta(const RankedLattice& lattice, int g);

// Möbius function and β of a sublattice K ⊆ L through the closure map
//   μ^K(bottom, G) = Σ_{F in L, cl(F) = G} μ^L(bottom, F)
//   β(K) = (-1)^(n+1) Σ_{F in L} μ^L(bottom, F) rk(cl(F)).
// `embedding[k]` is the L-index of K-element k and `closure[f]` the K-index
// of the smallest K-element above L-element f. Throws InputError if the maps
// are not consistent with the two orders.
bool SublatticeMobiusCheck(const RankedLattice& l, const RankedLattice& k,
                           std::span<const int> embedding,
                           std::span<const int> closure);

}  // namespace lefschetz

#endif  // LEFSCHETZ_LATTICE_H_
