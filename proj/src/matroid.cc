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

#include "lefschetz/matroid.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace lefschetz {

namespace {

// Rank tables are materialized up to this many elements (64k entries).
constexpr int kRankTableLimit = 16;

}  // namespace

struct Matroid::State {
  int ground_size = 0;
  int rank = 0;
  RankFunction rank_fn;
  std::vector<std::int8_t> rank_table;
  std::vector<Subset> flats;
  std::vector<std::vector<Subset>> flats_by_rank;
  std::unordered_map<Subset, int> flat_index;
  MatroidLimits limits;
};

Matroid Matroid::Build(int ground_size, RankFunction rank_fn,
                       const MatroidLimits& limits) {
  if (limits.max_ground_size > kHardMaxGroundSize) {
    throw InputError("ground size limit cannot exceed " +
                     std::to_string(kHardMaxGroundSize));
  }
  if (ground_size < 0 || ground_size > limits.max_ground_size) {
    throw InputError("ground set of " + std::to_string(ground_size) +
                     " elements exceeds the cap of " +
                     std::to_string(limits.max_ground_size));
  }
  auto state = std::make_shared<State>();
  state->ground_size = ground_size;
  state->limits = limits;
  if (ground_size <= kRankTableLimit) {
    const Subset count = Subset{1} << ground_size;
    state->rank_table.resize(count);
    for (Subset s = 0; s < count; ++s) {
      state->rank_table[s] = static_cast<std::int8_t>(rank_fn(s));
    }
  }
  state->rank_fn = std::move(rank_fn);

  auto rank_of = [&](Subset s) {
    return state->rank_table.empty() ? state->rank_fn(s)
                                     : state->rank_table[s];
  };
  if (rank_of(0) != 0) throw InputError("rank of the empty set must be 0");
  for (int e = 0; e < ground_size; ++e) {
    const int r = rank_of(Singleton(e));
    if (r == 0) throw InputError("element " + std::to_string(e) + " is a loop");
    if (r != 1) {
      throw InputError("singleton {" + std::to_string(e) + "} has rank " +
                       std::to_string(r));
    }
  }
  const Subset ground = FullSet(ground_size);
  state->rank = rank_of(ground);

  auto closure = [&](Subset s) {
    const int r = rank_of(s);
    for (int e = 0; e < ground_size; ++e) {
      if (!Contains(s, e) && rank_of(s | Singleton(e)) == r) s |= Singleton(e);
    }
    return s;
  };

  // Breadth-first over covers: every flat other than closure(∅) is
  // closure(F ∪ {e}) for a flat F it covers.
  std::unordered_set<Subset> seen;
  std::deque<Subset> queue;
  const Subset start = closure(0);
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    const Subset f = queue.front();
    queue.pop_front();
    for (int e = 0; e < ground_size; ++e) {
      if (Contains(f, e)) continue;
      const Subset g = closure(f | Singleton(e));
      if (seen.insert(g).second) {
        if (seen.size() > limits.max_flats) {
          throw InputError("more than " + std::to_string(limits.max_flats) +
                           " flats");
        }
        queue.push_back(g);
      }
    }
  }

  state->flats.assign(seen.begin(), seen.end());
  std::vector<int> ranks;
  std::sort(state->flats.begin(), state->flats.end(),
            [&](Subset a, Subset b) {
              const int ra = rank_of(a);
              const int rb = rank_of(b);
              return ra != rb ? ra < rb : a < b;
            });
  state->flats_by_rank.assign(state->rank + 1, {});
  for (std::size_t i = 0; i < state->flats.size(); ++i) {
    const Subset f = state->flats[i];
    state->flat_index.emplace(f, static_cast<int>(i));
    state->flats_by_rank[rank_of(f)].push_back(f);
  }
  return Matroid(std::move(state));
}

Matroid Matroid::Uniform(int rank, int ground_size,
                         const MatroidLimits& limits) {
  if (rank < 0 || rank > ground_size) {
    throw InputError("uniform matroid needs 0 <= r <= n_elements");
  }
  return Build(
      ground_size,
      [rank](Subset s) { return std::min(Cardinality(s), rank); }, limits);
}

Matroid Matroid::Graphic(int vertex_count,
                         const std::vector<std::pair<int, int>>& edges,
                         const MatroidLimits& limits) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw InputError("edge endpoint out of range");
    }
  }
  auto rank = [vertex_count, edges](Subset s) {
    std::vector<int> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int merged = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!Contains(s, static_cast<int>(i))) continue;
      const int a = find(edges[i].first);
      const int b = find(edges[i].second);
      if (a != b) {
        parent[a] = b;
        ++merged;
      }
    }
    return merged;
  };
  return Build(static_cast<int>(edges.size()), std::move(rank), limits);
}

namespace {

void RequireRankAxioms(const Matroid& m) {
  const std::string error = CheckRankAxioms(m);
  if (!error.empty()) throw InputError("not a matroid: " + error);
}

}  // namespace

Matroid Matroid::FromBases(int ground_size, std::vector<Subset> bases,
                           const MatroidLimits& limits) {
  if (bases.empty()) throw InputError("a matroid needs at least one basis");
  const int r = Cardinality(bases.front());
  for (Subset b : bases) {
    if (!IsSubsetOf(b, FullSet(ground_size))) {
      throw InputError("basis " + FormatSubset(b) + " leaves the ground set");
    }
    if (Cardinality(b) != r) throw InputError("bases differ in size");
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  auto rank = [bases = std::move(bases)](Subset s) {
    int best = 0;
    for (Subset b : bases) best = std::max(best, Cardinality(b & s));
    return best;
  };
  Matroid m = Build(ground_size, std::move(rank), limits);
  RequireRankAxioms(m);
  return m;
}

Matroid Matroid::FromFlats(int ground_size,
                           const std::vector<std::vector<Subset>>& flats_by_rank,
                           const MatroidLimits& limits) {
  const Subset ground = FullSet(ground_size);
  bool has_top = false;
  for (const auto& level : flats_by_rank) {
    for (Subset f : level) {
      if (!IsSubsetOf(f, ground)) {
        throw InputError("flat " + FormatSubset(f) + " leaves the ground set");
      }
      has_top = has_top || f == ground;
    }
  }
  if (!has_top) throw InputError("flat list does not contain the ground set");
  auto rank = [flats_by_rank](Subset s) {
    for (std::size_t r = 0; r < flats_by_rank.size(); ++r) {
      for (Subset f : flats_by_rank[r]) {
        if (IsSubsetOf(s, f)) return static_cast<int>(r);
      }
    }
    return static_cast<int>(flats_by_rank.size());
  };
  Matroid m = Build(ground_size, std::move(rank), limits);
  RequireRankAxioms(m);
  // The listed sets must be exactly the flats of the induced rank function.
  std::size_t listed = 0;
  for (const auto& level : flats_by_rank) {
    for (Subset f : level) {
      if (!m.IsFlat(f)) {
        throw InputError("listed set " + FormatSubset(f) + " is not closed");
      }
      ++listed;
    }
  }
  if (listed != m.flats().size()) {
    throw InputError("flat list is not closed under intersection");
  }
  return m;
}

Matroid Matroid::FromRankFunction(int ground_size, RankFunction rank,
                                  const MatroidLimits& limits) {
  return Build(ground_size, std::move(rank), limits);
}

int Matroid::ground_size() const { return state_->ground_size; }
int Matroid::rank() const { return state_->rank; }
const std::vector<Subset>& Matroid::flats() const { return state_->flats; }
const std::vector<std::vector<Subset>>& Matroid::flats_by_rank() const {
  return state_->flats_by_rank;
}
const MatroidLimits& Matroid::limits() const { return state_->limits; }

int Matroid::Rank(Subset s) const {
  if (!IsSubsetOf(s, ground_set())) {
    throw InputError("subset " + FormatSubset(s) + " leaves the ground set");
  }
  return state_->rank_table.empty() ? state_->rank_fn(s)
                                    : state_->rank_table[s];
}

Subset Matroid::Closure(Subset s) const {
  const int r = Rank(s);
  Subset closed = s;
  for (int e = 0; e < ground_size(); ++e) {
    if (!Contains(s, e) && Rank(s | Singleton(e)) == r) closed |= Singleton(e);
  }
  return closed;
}

bool Matroid::IsFlat(Subset s) const {
  return IsSubsetOf(s, ground_set()) && state_->flat_index.count(s) > 0;
}

int Matroid::FlatIndex(Subset s) const {
  auto it = state_->flat_index.find(s);
  return it == state_->flat_index.end() ? -1 : it->second;
}

std::string CheckRankAxioms(const Matroid& m, std::size_t samples) {
  const int size = m.ground_size();
  const Subset ground = m.ground_set();
  if (m.Rank(0) != 0) return "rank of the empty set is not 0";

  auto check_pair = [&](Subset a, Subset b) -> std::string {
    const int ra = m.Rank(a);
    const int rb = m.Rank(b);
    if (ra + rb < m.Rank(a | b) + m.Rank(a & b)) {
      return "submodularity fails for " + FormatSubset(a) + ", " +
             FormatSubset(b);
    }
    if (IsSubsetOf(a, b) && ra > rb) {
      return "monotonicity fails for " + FormatSubset(a) + " ⊆ " +
             FormatSubset(b);
    }
    return {};
  };
  auto check_unit = [&](Subset a) -> std::string {
    const int ra = m.Rank(a);
    if (ra > Cardinality(a)) return "rank exceeds size at " + FormatSubset(a);
    for (int e = 0; e < size; ++e) {
      const int d = m.Rank(a | Singleton(e)) - ra;
      if (d < 0 || d > 1) {
        return "adding " + std::to_string(e) + " to " + FormatSubset(a) +
               " changes rank by " + std::to_string(d);
      }
    }
    return {};
  };

  if (size <= 11) {
    for (Subset a = 0; a <= ground; ++a) {
      if (auto err = check_unit(a); !err.empty()) return err;
      for (Subset b = a; b <= ground; ++b) {
        if (auto err = check_pair(a, b); !err.empty()) return err;
      }
    }
    return {};
  }
  std::mt19937_64 rng(0x5eed5eedULL);
  for (std::size_t i = 0; i < samples; ++i) {
    const Subset a = rng() & ground;
    const Subset b = rng() & ground;
    if (auto err = check_unit(a); !err.empty()) return err;
    if (auto err = check_pair(a, b); !err.empty()) return err;
    if (auto err = check_pair(a & b, a); !err.empty()) return err;
  }
  return {};
}

MatroidAutomorphism MatroidAutomorphism::Identity(int ground_size) {
  std::vector<int> images(ground_size);
  std::iota(images.begin(), images.end(), 0);
  return MatroidAutomorphism(std::move(images));
}

MatroidAutomorphism::MatroidAutomorphism(std::vector<int> images)
    : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int image : images_) {
    if (image < 0 || image >= static_cast<int>(images_.size()) || hit[image]) {
      throw InputError("image list is not a permutation");
    }
    hit[image] = 1;
  }
}

Subset MatroidAutomorphism::Apply(Subset s) const {
  Subset out = 0;
  for (int e = 0; e < size(); ++e) {
    if (Contains(s, e)) out |= Singleton(images_[e]);
  }
  return out;
}

MatroidAutomorphism MatroidAutomorphism::Inverse() const {
  std::vector<int> inverse(images_.size());
  for (int e = 0; e < size(); ++e) inverse[images_[e]] = e;
  return MatroidAutomorphism(std::move(inverse));
}

bool MatroidAutomorphism::IsIdentity() const {
  for (int e = 0; e < size(); ++e) {
    if (images_[e] != e) return false;
  }
  return true;
}

void ValidateAutomorphism(const Matroid& m, const MatroidAutomorphism& psi) {
  if (psi.size() != m.ground_size()) {
    throw InputError("permutation has " + std::to_string(psi.size()) +
                     " entries but the ground set has " +
                     std::to_string(m.ground_size()));
  }
  for (Subset f : m.flats()) {
    const Subset image = psi.Apply(f);
    if (!m.IsFlat(image)) {
      throw InputError("permutation maps flat " + FormatSubset(f) +
                       " to non-flat " + FormatSubset(image));
    }
  }
}

bool IsAutomorphism(const Matroid& m, const MatroidAutomorphism& psi) {
  try {
    ValidateAutomorphism(m, psi);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

RankedLattice FlatLattice(const Matroid& m) {
  if (m.Closure(0) != 0) throw InputError("matroid has a loop");
  std::vector<int> ranks;
  ranks.reserve(m.flats().size());
  for (Subset f : m.flats()) ranks.push_back(m.Rank(f));
  return RankedLattice::FromSubsets(m.flats(), std::move(ranks),
                                    [&m](Subset s) { return m.Closure(s); });
}

Matroid Truncation(const Matroid& m, int i) {
  if (i < 0 || i > m.rank()) {
    throw InputError("truncation index " + std::to_string(i) +
                     " outside [0, " + std::to_string(m.rank()) + "]");
  }
  return Matroid::FromRankFunction(
      m.ground_size(),
      [m, i](Subset s) {
        const int generic = (s == 0 ? 0 : 1) + i;
        return std::min(generic, m.Rank(s));
      },
      m.limits());
}

Contraction Contract(const Matroid& m, Subset flat) {
  if (!m.IsFlat(flat)) {
    throw InputError("cannot contract non-flat " + FormatSubset(flat));
  }
  std::vector<int> original;
  for (int e = 0; e < m.ground_size(); ++e) {
    if (!Contains(flat, e)) original.push_back(e);
  }
  const int base = m.Rank(flat);
  auto rank = [m, flat, original, base](Subset s) {
    Subset lifted = flat;
    for (std::size_t j = 0; j < original.size(); ++j) {
      if (Contains(s, static_cast<int>(j))) lifted |= Singleton(original[j]);
    }
    return m.Rank(lifted) - base;
  };
  const int size = static_cast<int>(original.size());
  return Contraction{Matroid::FromRankFunction(size, std::move(rank),
                                               m.limits()),
                     std::move(original)};
}

MatroidAutomorphism InducedOnContraction(const Contraction& c,
                                         const MatroidAutomorphism& psi) {
  std::vector<int> position(psi.size(), -1);
  for (std::size_t j = 0; j < c.original.size(); ++j) {
    position[c.original[j]] = static_cast<int>(j);
  }
  std::vector<int> images(c.original.size());
  for (std::size_t j = 0; j < c.original.size(); ++j) {
    const int target = position[psi(c.original[j])];
    if (target < 0) {
      throw InputError("automorphism does not fix the contracted flat");
    }
    images[j] = target;
  }
  return MatroidAutomorphism(std::move(images));
}

Matroid Relabel(const Matroid& m, const std::vector<int>& perm) {
  const MatroidAutomorphism inverse = MatroidAutomorphism(perm).Inverse();
  if (inverse.size() != m.ground_size()) {
    throw InputError("relabelling has the wrong size");
  }
  return Matroid::FromRankFunction(
      m.ground_size(),
      [m, inverse](Subset s) { return m.Rank(inverse.Apply(s)); }, m.limits());
}

bool IsValidPair(Subset f, Subset g) {
  return Contains(f, 0) == Contains(g, 0);
}

int DiagonalRank(const Matroid& m, Subset f, Subset g) {
  if (!IsValidPair(f, g)) {
    throw InputError("(" + FormatSubset(f) + ", " + FormatSubset(g) +
                     ") is not a subset of E ⊔_0 E");
  }
  return m.Rank(f | g);
}

GenericChain MakeGenericChain(const Matroid& sub, const Matroid& super) {
  if (sub.ground_size() != super.ground_size()) {
    throw InputError("generic chain needs a common ground set");
  }
  for (Subset f : sub.flats()) {
    if (!super.IsFlat(f)) {
      throw InputError("not a quotient: " + FormatSubset(f) +
                       " is a flat of the smaller matroid only");
    }
  }
  const int s = super.rank() - sub.rank();
  if (s < 0) throw InputError("not a quotient: rank decreases");

  GenericChain chain{sub, super, s, {}, {}};
  for (int i = 0; i <= s; ++i) {
    chain.intermediates.push_back(Matroid::FromRankFunction(
        super.ground_size(),
        [sub, super, i](Subset x) {
          return std::min(sub.Rank(x) + i, super.Rank(x));
        },
        super.limits()));
  }
  for (int i = 1; i <= s; ++i) {
    auto value = [sub, super, s, i](Subset x) -> Integer {
      return super.Rank(x) >= sub.Rank(x) + s + 1 - i ? -1 : 0;
    };
    const Integer top = value(super.ground_set());
    chain.functions.push_back(
        PLFunction::FromSubsetValues(super.ground_size(), value, top));
  }
  return chain;
}

std::vector<Subset> FixedFlats(const Matroid& m,
                               const MatroidAutomorphism& psi) {
  std::vector<Subset> fixed;
  for (Subset f : m.flats()) {
    if (psi.Apply(f) == f) fixed.push_back(f);
  }
  return fixed;
}

RankedLattice FixedFlatLattice(const Matroid& m,
                               const MatroidAutomorphism& psi) {
  std::vector<Subset> fixed = FixedFlats(m, psi);
  std::vector<int> ranks;
  ranks.reserve(fixed.size());
  for (Subset f : fixed) ranks.push_back(m.Rank(f));
  return RankedLattice::FromSubsets(std::move(fixed), std::move(ranks),
                                    [&m](Subset s) { return m.Closure(s); });
}

Subset PsiClosure(const Matroid& m, const MatroidAutomorphism& psi,
                  Subset flat) {
  Subset result = m.ground_set();
  for (Subset g : m.flats()) {
    if (IsSubsetOf(flat, g) && psi.Apply(g) == g) result &= g;
  }
  return result;
}

}  // namespace lefschetz
