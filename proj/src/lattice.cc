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

#include "lefschetz/lattice.h"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

namespace lefschetz {

struct RankedLattice::MobiusCache {
  std::mutex mu;
  std::vector<std::unique_ptr<std::vector<Integer>>> rows;
};

namespace {

void CheckSize(std::size_t n) {
  if (n == 0) throw InputError("lattice must have at least one element");
  if (n > RankedLattice::kMaxElements) {
    throw InputError("lattice has " + std::to_string(n) +
                     " elements; the dense-table limit is " +
                     std::to_string(RankedLattice::kMaxElements));
  }
}

}  // namespace

RankedLattice::RankedLattice(std::vector<char> leq, std::vector<int> ranks,
                             std::vector<Subset> labels)
    : leq_(std::move(leq)),
      ranks_(std::move(ranks)),
      labels_(std::move(labels)),
      mobius_(std::make_shared<MobiusCache>()) {
  const std::size_t n = ranks_.size();
  CheckSize(n);
  if (leq_.size() != n * n) throw InputError("order table has wrong size");
  if (!labels_.empty() && labels_.size() != n) {
    throw InputError("label count does not match element count");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a * n + a]) throw InputError("order is not reflexive");
    for (std::size_t b = a + 1; b < n; ++b) {
      if (leq_[a * n + b] && leq_[b * n + a]) {
        throw InputError("order is not antisymmetric");
      }
    }
  }
  if (n <= 400) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!leq_[a * n + b]) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (leq_[b * n + c] && !leq_[a * n + c])
            throw InputError("order is not transitive");
      }
  }
  BuildTables();
}

void RankedLattice::BuildTables() {
  const int n = static_cast<int>(size());
  std::vector<int> down(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (Leq(b, a)) ++down[a];

  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](int a, int b) { return down[a] < down[b]; });

  bottom_ = top_ = -1;
  for (int a = 0; a < n; ++a) {
    if (down[a] == 1 && bottom_ < 0) {
      bool below_all = true;
      for (int b = 0; b < n && below_all; ++b) below_all = Leq(a, b);
      if (below_all) bottom_ = a;
    }
    if (down[a] == n) top_ = a;
  }
  if (bottom_ < 0) throw InputError("order has no minimum element");
  if (top_ < 0) throw InputError("order has no maximum element");

  if (!meet_.empty()) return;  // supplied by the caller

  meet_.assign(static_cast<std::size_t>(n) * n, -1);
  join_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      int lo = -1;
      int hi = -1;
      for (int c = 0; c < n; ++c) {
        if (Leq(c, a) && Leq(c, b) && (lo < 0 || down[c] > down[lo])) lo = c;
        if (Leq(a, c) && Leq(b, c) && (hi < 0 || down[c] < down[hi])) hi = c;
      }
      for (int c = 0; c < n; ++c) {
        if (Leq(c, a) && Leq(c, b) && !Leq(c, lo))
          throw InputError("order is not a lattice (no meet)");
        if (Leq(a, c) && Leq(b, c) && !Leq(hi, c))
          throw InputError("order is not a lattice (no join)");
      }
      meet_[Index(a, b)] = meet_[Index(b, a)] = lo;
      join_[Index(a, b)] = join_[Index(b, a)] = hi;
    }
  }
}

RankedLattice RankedLattice::FromSubsets(
    std::vector<Subset> sets, std::vector<int> ranks,
    const std::function<Subset(Subset)>& join_closure) {
  const std::size_t n = sets.size();
  CheckSize(n);
  if (ranks.size() != n) throw InputError("rank count does not match sets");

  std::unordered_map<Subset, int> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(sets[i], static_cast<int>(i)).second) {
      throw InputError("duplicate set " + FormatSubset(sets[i]));
    }
  }

  RankedLattice lattice;
  lattice.ranks_ = std::move(ranks);
  lattice.mobius_ = std::make_shared<MobiusCache>();
  lattice.leq_.assign(n * n, 0);
  lattice.meet_.assign(n * n, -1);
  lattice.join_.assign(n * n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      lattice.leq_[a * n + b] = IsSubsetOf(sets[a], sets[b]) ? 1 : 0;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const Subset m = sets[a] & sets[b];
      const Subset j = join_closure(sets[a] | sets[b]);
      auto mi = index.find(m);
      auto ji = index.find(j);
      if (mi == index.end()) {
        throw InputError("family not closed under intersection: " +
                               FormatSubset(sets[a]) + " ∩ " +
                               FormatSubset(sets[b]));
      }
      if (ji == index.end() || !IsSubsetOf(sets[a] | sets[b], j)) {
        throw InputError("family not closed under join: " +
                               FormatSubset(sets[a]) + " ∨ " +
                               FormatSubset(sets[b]));
      }
      lattice.meet_[a * n + b] = lattice.meet_[b * n + a] = mi->second;
      lattice.join_[a * n + b] = lattice.join_[b * n + a] = ji->second;
    }
  }
  lattice.labels_ = std::move(sets);
  lattice.BuildTables();
  return lattice;
}

int RankedLattice::IndexOf(Subset s) const {
  auto it = std::find(labels_.begin(), labels_.end(), s);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

RankedLattice RankedLattice::WithRanks(std::vector<int> ranks) const {
  if (ranks.size() != size()) throw InputError("rank count mismatch");
  RankedLattice copy = *this;
  copy.ranks_ = std::move(ranks);
  return copy;
}

const std::vector<Integer>& RankedLattice::MobiusRow(int a) const {
  std::lock_guard<std::mutex> lock(mobius_->mu);
  if (mobius_->rows.empty()) mobius_->rows.resize(size());
  auto& slot = mobius_->rows[a];
  if (slot) return *slot;

  auto row = std::make_unique<std::vector<Integer>>(size(), 0);
  for (int b : order_) {
    if (!Leq(a, b)) continue;
    if (b == a) {
      (*row)[b] = 1;
      continue;
    }
    Integer sum = 0;
    for (int c : order_) {
      if (c == b) break;
      if (Leq(a, c) && Leq(c, b)) sum += (*row)[c];
    }
    (*row)[b] = -sum;
  }
  slot = std::move(row);
  return *slot;
}

Integer RankedLattice::Mobius(int a, int b) const {
  if (!Leq(a, b)) throw InputError("Möbius function needs a <= b");
  return MobiusRow(a)[b];
}

Integer RankedLattice::MobiusViaChains(int a, int b) const {
  if (!Less(a, b)) throw InputError("chain expansion needs a < b");
  Integer total = 0;
  const int n = static_cast<int>(size());
  std::function<void(int, int)> extend = [&](int last, int length) {
    total += (length % 2 == 0) ? -1 : 1;
    for (int c = 0; c < n; ++c) {
      if (Less(last, c) && Less(c, b)) extend(c, length + 1);
    }
  };
  extend(a, 0);
  return total;
}

Integer Beta(const RankedLattice& lattice) {
  Integer sum = 0;
  const int bottom = lattice.bottom();
  for (std::size_t f = 0; f < lattice.size(); ++f) {
    const int fi = static_cast<int>(f);
    sum += lattice.Mobius(bottom, fi) * lattice.rank(fi);
  }
  return SignOf(lattice.n() + 1) * sum;
}

Integer BetaInterval(const RankedLattice& lattice, int f) {
  Integer sum = 0;
  for (std::size_t g = 0; g < lattice.size(); ++g) {
    const int gi = static_cast<int>(g);
    if (lattice.Leq(f, gi)) sum += lattice.Mobius(f, gi) * lattice.rank(gi);
  }
  return SignOf(lattice.rank(lattice.top()) - lattice.rank(f)) * sum;
}

namespace {

std::vector<Integer> AllIntervalBetas(const RankedLattice& lattice) {
  std::vector<Integer> betas(lattice.size());
  for (std::size_t f = 0; f < lattice.size(); ++f) {
    betas[f] = BetaInterval(lattice, static_cast<int>(f));
  }
  return betas;
}

}  // namespace

bool CheckMobiusInversion(const RankedLattice& lattice) {
  const std::vector<Integer> betas = AllIntervalBetas(lattice);
  const int top_rank = lattice.rank(lattice.top());
  for (std::size_t f = 0; f < lattice.size(); ++f) {
    Integer sum = 0;
    for (std::size_t g = 0; g < lattice.size(); ++g) {
      if (!lattice.Leq(static_cast<int>(f), static_cast<int>(g))) continue;
      sum += SignOf(top_rank - lattice.rank(static_cast<int>(g))) * betas[g];
    }
    if (sum != lattice.rank(static_cast<int>(f))) return false;
  }
  return true;
}

bool CheckRecursiveBeta(const RankedLattice& lattice, int g) {
  const std::vector<Integer> betas = AllIntervalBetas(lattice);
  const int bottom = lattice.bottom();
  const int top_rank = lattice.rank(lattice.top());

  if (g == bottom) {
    Integer sum = 0;
    for (std::size_t f = 0; f < lattice.size(); ++f) {
      if (lattice.Leq(g, static_cast<int>(f))) continue;
      sum += SignOf(top_rank - lattice.rank(static_cast<int>(f))) * betas[f];
    }
    return sum == lattice.rank(bottom) - lattice.rank(g);
  }

  Integer rhs = lattice.rank(g) - lattice.rank(bottom);
  for (std::size_t f = 0; f < lattice.size(); ++f) {
    const int fi = static_cast<int>(f);
    if (fi == bottom || lattice.Leq(g, fi)) continue;
    rhs -= SignOf(top_rank - lattice.rank(fi) - 1) * betas[f];
  }
  return SignOf(lattice.n()) * Beta(lattice) == rhs;
}

bool SublatticeMobiusCheck(const RankedLattice& l, const RankedLattice& k,
                           std::span<const int> embedding,
                           std::span<const int> closure) {
  if (embedding.size() != k.size() || closure.size() != l.size()) {
    throw InputError("sublattice maps have the wrong size");
  }
  const int ks = static_cast<int>(k.size());
  const int ls = static_cast<int>(l.size());
  for (int i = 0; i < ks; ++i) {
    if (embedding[i] < 0 || embedding[i] >= ls) {
      throw InputError("embedding index out of range");
    }
    if (k.rank(i) != l.rank(embedding[i])) {
      throw InputError("sublattice rank is not the restricted rank");
    }
    for (int j = 0; j < ks; ++j) {
      if (k.Leq(i, j) != l.Leq(embedding[i], embedding[j])) {
        throw InputError("embedding does not preserve the order");
      }
    }
  }
  if (embedding[k.bottom()] != l.bottom() || embedding[k.top()] != l.top()) {
    throw InputError("sublattice must contain bottom and top");
  }
  for (int f = 0; f < ls; ++f) {
    const int c = closure[f];
    if (c < 0 || c >= ks || !l.Leq(f, embedding[c])) {
      throw InputError("closure map does not send F above F");
    }
    for (int g = 0; g < ks; ++g) {
      if (l.Leq(f, embedding[g]) && !k.Leq(c, g)) {
        throw InputError("closure map is not the least element above F");
      }
    }
  }

  std::vector<Integer> pushed(ks, 0);
  Integer beta_sum = 0;
  for (int f = 0; f < ls; ++f) {
    const Integer mu = l.Mobius(l.bottom(), f);
    pushed[closure[f]] += mu;
    beta_sum += mu * k.rank(closure[f]);
  }
  for (int g = 0; g < ks; ++g) {
    if (pushed[g] != k.Mobius(k.bottom(), g)) return false;
  }
  return SignOf(k.n() + 1) * beta_sum == Beta(k);
}

}  // namespace lefschetz
