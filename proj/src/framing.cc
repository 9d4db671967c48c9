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

#include "lefschetz/framing.h"

#include <map>
#include <string>

#include "lefschetz/lattice.h"
#include "lefschetz/pl_function.h"

namespace lefschetz {

namespace {

void CheckDegree(const Matroid& m, int p) {
  if (p < 0 || p > m.dimension()) {
    throw InputError("p = " + std::to_string(p) + " outside [0, " +
                     std::to_string(m.dimension()) + "]");
  }
}

RationalVector Column(const MatroidAutomorphism& psi, int i) {
  return Dehomogenize(Singleton(psi(i)), psi.size());
}

void ExtendChains(const Matroid& m, int length, int max_rank, Chain& chain,
                  std::vector<Chain>& out) {
  if (static_cast<int>(chain.size()) == length) {
    out.push_back(chain);
    return;
  }
  const Subset above = chain.empty() ? m.ground_set() : chain.back();
  for (Subset f : m.flats()) {
    if (f == 0 || f == above || !IsSubsetOf(f, above)) continue;
    if (m.Rank(f) > max_rank) continue;
    chain.push_back(f);
    ExtendChains(m, length, max_rank, chain, out);
    chain.pop_back();
  }
}

Chain ApplyToChain(const MatroidAutomorphism& psi, const Chain& chain) {
  Chain image;
  for (Subset link : chain) image.push_back(psi.Apply(link));
  return image;
}

}  // namespace

std::vector<RationalVector> InducedMap(const MatroidAutomorphism& psi) {
  const int count = psi.size() - 1;
  std::vector<RationalVector> matrix(count, RationalVector(count));
  for (int i = 1; i <= count; ++i) {
    const RationalVector column = Column(psi, i);
    for (int row = 0; row < count; ++row) matrix[row][i - 1] = column[row];
  }
  return matrix;
}

ExteriorVector ApplyWedgePower(const MatroidAutomorphism& psi,
                               const ExteriorVector& v) {
  const int count = psi.size() - 1;
  std::vector<RationalVector> columns;
  for (int i = 1; i <= count; ++i) columns.push_back(Column(psi, i));
  ExteriorVector out(v.degree());
  for (const auto& [key, coefficient] : v.terms()) {
    ExteriorVector image = ExteriorVector::Scalar(coefficient);
    for (int index : Elements(key)) image = image.Wedge(columns[index]);
    out.AddMultiple(image, 1);
  }
  return out;
}

std::vector<Chain> FlatChains(const Matroid& m, int length, int max_rank) {
  std::vector<Chain> out;
  Chain chain;
  ExtendChains(m, length, max_rank, chain, out);
  return out;
}

ExteriorVector VolumeElement(const Chain& chain, int ground_size) {
  ExteriorVector v = ExteriorVector::Scalar(1);
  for (Subset link : chain) v = v.Wedge(Dehomogenize(link, ground_size));
  return v;
}

FramingBasis BuildFramingBasis(const Matroid& m, int p) {
  CheckDegree(m, p);
  FramingBasis basis;
  basis.p = p;
  basis.generators = FlatChains(m, p, m.rank());
  for (const Chain& chain : basis.generators) {
    basis.echelon.Insert(VolumeElement(chain, m.ground_size()));
  }
  return basis;
}

Integer TraceLinear(const Matroid& m, const MatroidAutomorphism& psi, int p) {
  const FramingBasis basis = BuildFramingBasis(m, p);
  for (const Chain& chain : basis.generators) {
    const ExteriorVector image =
        ApplyWedgePower(psi, VolumeElement(chain, m.ground_size()));
    if (!(image == VolumeElement(ApplyToChain(psi, chain), m.ground_size()))) {
      throw ConsistencyError("Ψ_* V_F differs from V_ψF at " +
                             FormatChain(chain));
    }
  }
  Rational trace = 0;
  const auto& rows = basis.echelon.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto coordinates =
        basis.echelon.Coordinates(ApplyWedgePower(psi, rows[i]));
    if (!coordinates) {
      throw ConsistencyError("framing space F_" + std::to_string(p) +
                             " is not Ψ-invariant");
    }
    trace += (*coordinates)[i];
  }
  if (trace.get_den() != 1) {
    throw ConsistencyError("trace on F_" + std::to_string(p) +
                           " is not integral: " + trace.get_str());
  }
  return trace.get_num();
}

Integer TraceChains(const Matroid& m, const MatroidAutomorphism& psi, int p) {
  CheckDegree(m, p);
  const RankedLattice fixed = FixedFlatLattice(m, psi);
  Integer mobius_sum = 0;
  for (std::size_t f = 0; f < fixed.size(); ++f) {
    if (fixed.rank(static_cast<int>(f)) <= p) {
      mobius_sum += fixed.Mobius(fixed.bottom(), static_cast<int>(f));
    }
  }
  Integer chain_sum = 0;
  for (int length = 0; length <= p; ++length) {
    long fixed_chains = 0;
    for (const Chain& chain : FlatChains(m, length, p)) {
      if (ApplyToChain(psi, chain) == chain) ++fixed_chains;
    }
    chain_sum += SignOf(length) * fixed_chains;
  }
  if (mobius_sum != chain_sum) {
    throw ConsistencyError("fixed-chain count " + chain_sum.get_str() +
                           " differs from Möbius sum " + mobius_sum.get_str() +
                           " at p = " + std::to_string(p));
  }
  return SignOf(p) * mobius_sum;
}

LefschetzResult LefschetzSum(const Matroid& m, const MatroidAutomorphism& psi) {
  ValidateAutomorphism(m, psi);
  LefschetzResult result;
  result.sum = 0;
  for (int p = 0; p <= m.dimension(); ++p) {
    TracePair pair{p, TraceLinear(m, psi, p), TraceChains(m, psi, p)};
    if (pair.linear != pair.chains) {
      throw ConsistencyError("trace routes disagree at p = " +
                             std::to_string(p) + ": " + pair.linear.get_str() +
                             " vs " + pair.chains.get_str());
    }
    result.sum += SignOf(p) * pair.linear;
    result.traces.push_back(std::move(pair));
  }
  return result;
}

namespace {

// ∂_l : C_l -> C_{l+1} as a |C_{l+1}| × |C_l| matrix; inserting the link at
// 1-based position k contributes (-1)^k.
std::vector<std::vector<Rational>> Coboundary(const std::vector<Chain>& from,
                                              const std::vector<Chain>& to) {
  std::map<Chain, std::size_t> index;
  for (std::size_t j = 0; j < from.size(); ++j) index.emplace(from[j], j);
  std::vector<std::vector<Rational>> matrix(to.size(),
                                            std::vector<Rational>(from.size()));
  for (std::size_t i = 0; i < to.size(); ++i) {
    for (std::size_t k = 0; k < to[i].size(); ++k) {
      Chain face = to[i];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
      auto it = index.find(face);
      if (it != index.end()) {
        matrix[i][it->second] += SignOf(static_cast<int>(k) + 1);
      }
    }
  }
  return matrix;
}

bool ProductIsZero(const std::vector<std::vector<Rational>>& left,
                   const std::vector<std::vector<Rational>>& right) {
  for (const auto& row : left) {
    const std::size_t columns = right.empty() ? 0 : right.front().size();
    for (std::size_t c = 0; c < columns; ++c) {
      Rational entry = 0;
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] != 0) entry += row[j] * right[j][c];
      }
      if (entry != 0) return false;
    }
  }
  return true;
}

}  // namespace

ResolutionReport CheckResolution(const Matroid& m, int p) {
  CheckDegree(m, p);
  ResolutionReport report;
  report.p = p;
  report.validation.name = "resolution_p" + std::to_string(p);
  Validation& v = report.validation;

  std::vector<std::vector<Chain>> chains;
  for (int l = 0; l <= p; ++l) {
    chains.push_back(FlatChains(m, l, p));
    report.dimensions.push_back(chains.back().size());
  }
  std::vector<std::vector<std::vector<Rational>>> boundaries;
  for (int l = 0; l < p; ++l) {
    boundaries.push_back(Coboundary(chains[l], chains[l + 1]));
    report.ranks.push_back(MatrixRank(boundaries.back()));
  }
  const FramingBasis basis = BuildFramingBasis(m, p);
  report.framing_dimension = basis.dimension();

  for (int l = 0; l + 1 < p; ++l) {
    ++v.checked;
    if (!ProductIsZero(boundaries[l + 1], boundaries[l])) {
      v.Fail("∂∘∂ ≠ 0 at position " + std::to_string(l));
    }
  }
  if (p >= 1) {
    // Augmentation C_p -> F_p composed with ∂_{p-1}.
    ++v.checked;
    const auto& last = boundaries[p - 1];
    for (std::size_t j = 0; j < chains[p - 1].size(); ++j) {
      ExteriorVector image(p);
      for (std::size_t i = 0; i < chains[p].size(); ++i) {
        if (last[i][j] != 0) {
          image.AddMultiple(VolumeElement(chains[p][i], m.ground_size()),
                            last[i][j]);
        }
      }
      if (!image.IsZero()) {
        v.Fail("augmentation∘∂ ≠ 0 at " + FormatChain(chains[p - 1][j]));
        break;
      }
    }
    ++v.checked;
    if (report.ranks[0] != report.dimensions[0]) {
      v.Fail("∂_0 is not injective");
    }
  }
  for (int l = 1; l < p; ++l) {
    ++v.checked;
    if (report.ranks[l] + report.ranks[l - 1] != report.dimensions[l]) {
      v.Fail("not exact at position " + std::to_string(l));
    }
  }
  // Exactness at C_p and surjectivity onto F_p.
  ++v.checked;
  const std::size_t incoming = p >= 1 ? report.ranks[p - 1] : 0;
  if (report.dimensions[p] - incoming != report.framing_dimension) {
    v.Fail("dim F_p = " + std::to_string(report.framing_dimension) +
           " but dim C_p - rank ∂_{p-1} = " +
           std::to_string(report.dimensions[p] - incoming));
  }
  ++v.checked;
  SparseEchelon top;
  for (const Chain& chain : chains[p]) {
    top.Insert(VolumeElement(chain, m.ground_size()));
  }
  if (top.rank() != report.framing_dimension) {
    v.Fail("C_p does not surject onto F_p");
  }
  // dim F_p against the Möbius sum over flats of rank <= p.
  ++v.checked;
  const RankedLattice lattice = FlatLattice(m);
  Integer mobius_sum = 0;
  for (std::size_t f = 0; f < lattice.size(); ++f) {
    if (lattice.rank(static_cast<int>(f)) <= p) {
      mobius_sum += lattice.Mobius(lattice.bottom(), static_cast<int>(f));
    }
  }
  if (SignOf(p) * mobius_sum != static_cast<long>(report.framing_dimension)) {
    v.Fail("dim F_p = " + std::to_string(report.framing_dimension) +
           " but the signed Möbius sum is " +
           Integer(SignOf(p) * mobius_sum).get_str());
  }
  return report;
}

bool FramingHyperplaneCheck(const Matroid& m, int p) {
  if (p < 0 || p > m.dimension()) {
    throw InputError("hyperplane check needs 0 <= p <= n");
  }
  SparseEchelon restricted;
  for (const Chain& chain : FlatChains(m, p, p)) {
    restricted.Insert(VolumeElement(chain, m.ground_size()));
  }
  const FramingBasis all = BuildFramingBasis(m, p);
  if (restricted.rank() != all.dimension()) return false;
  for (const ExteriorVector& row : all.echelon.rows()) {
    if (!restricted.Coordinates(row)) return false;
  }
  return true;
}

}  // namespace lefschetz
