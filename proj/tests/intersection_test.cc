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

#include <gtest/gtest.h>

#include <vector>

#include "corpus.h"
#include "lefschetz/catalog.h"
#include "lefschetz/intersection.h"
#include "lefschetz/lattice.h"
#include "lefschetz/matroid.h"
#include "oracles.h"

namespace lefschetz {
namespace {

const MatroidAutomorphism kSwap({0, 2, 1});
const MatroidAutomorphism kCycle({1, 2, 0});

// g_i on a valid pair, written out from its definition.
int GOracle(const Matroid& m, int i, Subset f, Subset g) {
  const int n = m.dimension();
  const int lhs = m.Rank(f) + m.Rank(g);
  const int rhs = m.Rank(f | g) + n + 1 - i;
  if (!Contains(f, 0)) return lhs >= rhs ? -1 : 0;
  return lhs <= rhs ? 1 : 0;
}

// f_k(S) from the image of v_S under x ↦ (x, Ψx): the pair (S, ψS) when 0
// lies in both or neither, otherwise the sum over the two rays of the
// product cone that contains it.
int FOracle(const Matroid& m, const MatroidAutomorphism& psi, int k,
            Subset s) {
  const Subset image = psi.Apply(s);
  const Subset e = m.ground_set();
  if (Contains(s, 0) == Contains(image, 0)) return GOracle(m, k, s, image);
  if (Contains(s, 0)) return GOracle(m, k, s, e) + GOracle(m, k, 0, image);
  return GOracle(m, k, e, image) + GOracle(m, k, s, 0);
}

Integer SignedBetaFix(const Matroid& m, const MatroidAutomorphism& psi) {
  std::vector<Subset> sets;
  std::vector<int> ranks;
  oracle::FixedFlats(testing::RankOf(m), m.ground_size(), psi.images(), sets,
                     ranks);
  const Integer beta = oracle::Beta(sets, ranks);
  return m.dimension() % 2 == 0 ? beta : Integer(-beta);
}

TEST(IntersectionTest, PairEncodingRoundTrips) {
  const int size = 4;
  for (Subset f = 0; f < 16; ++f) {
    for (Subset g = 0; g < 16; ++g) {
      if (!IsValidPair(f, g)) {
        EXPECT_THROW(EncodePair(f, g, size), InputError);
        continue;
      }
      const Subset s = EncodePair(f, g, size);
      EXPECT_LT(s, Subset{1} << 7);
      EXPECT_EQ(DecodePair(s, size), std::make_pair(f, g));
    }
  }
}

TEST(IntersectionTest, GValueExamples) {
  const Matroid u23 = Matroid::Uniform(2, 3);
  for (const char* name : {"uniform:2:4", "uniform:3:4", "fano"}) {
    const Matroid m = CatalogEntry(name).matroid;
    for (int i = 1; i <= m.dimension(); ++i) {
      EXPECT_EQ(GValue(m, i, m.ground_set(), m.ground_set()), 0);
      EXPECT_EQ(GValue(m, i, 0, 0), 0);
    }
  }
  EXPECT_EQ(GValue(u23, 1, Singleton(0), Singleton(0)), 1);
  EXPECT_EQ(GValue(u23, 1, Singleton(1), Singleton(2)), 0);
  EXPECT_EQ(GValue(u23, 1, Singleton(1), Singleton(1)), -1);
  EXPECT_THROW(GValue(u23, 2, 0, 0), InputError);
  EXPECT_THROW(GValue(u23, 1, Singleton(0), Singleton(1)), InputError);
}

TEST(IntersectionTest, DiagonalFunctionMatchesFormula) {
  for (const char* name : {"uniform:2:3", "uniform:3:4", "graphic:K4"}) {
    const Matroid m = CatalogEntry(name).matroid;
    const int size = m.ground_size();
    for (int i = 1; i <= m.dimension(); ++i) {
      const PLFunction g = DiagonalFunction(m, i);
      for (Subset f = 0; f <= m.ground_set(); ++f) {
        for (Subset h = 0; h <= m.ground_set(); ++h) {
          if (!IsValidPair(f, h) || (f == m.ground_set() && h == f)) continue;
          ASSERT_EQ(g.Value(EncodePair(f, h, size)), GOracle(m, i, f, h))
              << name << " " << FormatSubset(f) << " " << FormatSubset(h);
        }
      }
    }
  }
}

TEST(IntersectionTest, InducedMapExamples) {
  const RationalVector x = {Rational(3), Rational(5)};
  EXPECT_EQ(ApplyInduced(MatroidAutomorphism::Identity(3), x), x);
  EXPECT_EQ(ApplyInduced(kSwap, x), (RationalVector{5, 3}));
  // e_1 ↦ e_2, e_2 ↦ -𝟙.
  EXPECT_EQ(ApplyInduced(kCycle, x), (RationalVector{-5, -2}));
  // Dehomogenized v_S goes to v_{ψS}.
  for (const auto& pair : testing::Corpus()) {
    const int size = pair.spec.matroid.ground_size();
    for (Subset s = 1; s < FullSet(size); ++s) {
      ASSERT_EQ(ApplyInduced(pair.psi, Dehomogenize(s, size)),
                Dehomogenize(pair.psi.Apply(s), size));
    }
  }
}

TEST(IntersectionTest, FValueExamples) {
  const Matroid u23 = Matroid::Uniform(2, 3);
  EXPECT_EQ(FValueGeneric(u23, kCycle, 1, Singleton(1)), 0);
  EXPECT_EQ(FValueClosed(u23, kCycle, 1, Singleton(1)), 0);
  // v_{0} maps to the pair ({0},{0}), where g_1 is +1.
  EXPECT_EQ(FValueGeneric(u23, kSwap, 1, Singleton(0)), 1);
  EXPECT_EQ(FValueClosed(u23, kSwap, 1, Singleton(0)), 1);
  EXPECT_EQ(FValueGeneric(u23, kSwap, 1, Singleton(1)), 0);
}

TEST(IntersectionTest, FValueOnFixedFlats) {
  for (const auto& pair : testing::Corpus()) {
    const Matroid& m = pair.spec.matroid;
    const int n = m.dimension();
    for (int k = 1; k <= n; ++k) {
      for (Subset f : FixedFlats(m, pair.psi)) {
        if (f == 0 || f == m.ground_set()) continue;
        const Integer value = FValueGeneric(m, pair.psi, k, f);
        if (!Contains(f, 0) && m.Rank(f) >= n - k + 1) {
          EXPECT_EQ(value, -1) << pair.label;
        }
        if (!Contains(f, 0) && m.Rank(f) < n - k + 1) {
          EXPECT_EQ(value, 0) << pair.label;
        }
        if (Contains(f, 0) && m.Rank(f) >= n - k + 2) {
          EXPECT_EQ(value, 0) << pair.label;
        }
        if (Contains(f, 0) && m.Rank(f) <= n - k + 1) {
          EXPECT_EQ(value, 1) << pair.label;
        }
      }
    }
  }
}

TEST(IntersectionTest, FValueThreeRoutesAgree) {
  for (const auto& pair : testing::Corpus()) {
    const Matroid& m = pair.spec.matroid;
    for (int k = 1; k <= m.dimension(); ++k) {
      for (Subset f : m.flats()) {
        if (f == 0 || f == m.ground_set()) continue;
        const int oracle = FOracle(m, pair.psi, k, f);
        ASSERT_EQ(FValueGeneric(m, pair.psi, k, f), oracle)
            << pair.label << " k=" << k << " " << FormatSubset(f);
        ASSERT_EQ(FValueClosed(m, pair.psi, k, f), oracle)
            << pair.label << " k=" << k << " " << FormatSubset(f);
      }
    }
  }
}

TEST(IntersectionTest, WorkedDegrees) {
  const Matroid u23 = Matroid::Uniform(2, 3);
  EXPECT_EQ(ComputeIntersection(u23, MatroidAutomorphism::Identity(3)).degree,
            -1);
  EXPECT_EQ(ComputeIntersection(u23, kSwap).degree, 1);
  const IntersectionRun cyclic = ComputeIntersection(u23, kCycle);
  EXPECT_EQ(cyclic.degree, 2);
  ASSERT_EQ(cyclic.cycles.size(), 2u);
  EXPECT_EQ(cyclic.cycles[1].Weight({}), 2);
}

TEST(IntersectionTest, DegreeIsSignedBetaOfFixedLattice) {
  for (const auto& pair : testing::Corpus()) {
    const IntersectionRun run =
        ComputeIntersection(pair.spec.matroid, pair.psi);
    EXPECT_EQ(run.degree, SignedBetaFix(pair.spec.matroid, pair.psi))
        << pair.label;
  }
}

TEST(IntersectionTest, CycleShapes) {
  for (const auto& pair : testing::Corpus()) {
    const Matroid& m = pair.spec.matroid;
    const IntersectionRun run = ComputeIntersection(m, pair.psi);
    ASSERT_EQ(run.cycles.size(), static_cast<std::size_t>(m.dimension() + 1));
    EXPECT_EQ(run.cycles[0], MatroidFan(m));
    for (int k = 0; k <= m.dimension(); ++k) {
      EXPECT_EQ(run.cycles[k].dimension(), m.dimension() - k);
      EXPECT_TRUE(CheckBalancing(run.cycles[k]).balanced) << pair.label;
    }
    // The pullbacks are linear on every facet they are applied to.
    for (int k = 1; k <= m.dimension(); ++k) {
      for (const auto& [chain, weight] : run.cycles[k - 1].weights()) {
        ASSERT_TRUE(LinearityGuard(run.functions[k - 1], chain))
            << pair.label << " k=" << k << " " << FormatChain(chain);
      }
    }
  }
}

TEST(IntersectionTest, ValidatorsReportNoViolations) {
  for (const auto& pair : testing::Corpus()) {
    const IntersectionRun run =
        ComputeIntersection(pair.spec.matroid, pair.psi);
    for (const Validation& v :
         {ValidateCycleBalancing(run), ValidateXkStructure(run),
          ValidateFacetWeights(run), ValidateWeightTable(run),
          CompareFValueRoutes(run)}) {
      EXPECT_TRUE(v.passed())
          << pair.label << " " << v.name << ": "
          << (v.violations.empty() ? "" : v.violations.front());
      EXPECT_GT(v.checked, 0u) << pair.label << " " << v.name;
    }
  }
}

TEST(IntersectionTest, ValidatorsCatchTamperedCycles) {
  const Matroid m = CatalogEntry("uniform:3:4").matroid;
  IntersectionRun run =
      ComputeIntersection(m, MatroidAutomorphism({0, 2, 1, 3}));
  // A facet weight off by one violates the closed form.
  WeightedFan& x1 = run.cycles[1];
  ASSERT_FALSE(x1.empty());
  x1.Add(x1.weights().begin()->first, 1);
  EXPECT_FALSE(ValidateFacetWeights(run).passed());
  EXPECT_FALSE(ValidateCycleBalancing(run).passed());
  // {1,3} has gaps (0,1) but is not fixed although 0 ∉ {1,3} ∪ {2,3}.
  IntersectionRun shaped =
      ComputeIntersection(m, MatroidAutomorphism({0, 2, 1, 3}));
  shaped.cycles[1].Add({FromElements({1, 3})}, 1);
  EXPECT_FALSE(ValidateXkStructure(shaped).passed());
}

TEST(IntersectionTest, IdentityGivesOrdinaryBeta) {
  for (const auto& name : testing::CorpusMatroids()) {
    const Matroid m = CatalogEntry(name).matroid;
    std::vector<int> ranks;
    for (Subset f : m.flats()) ranks.push_back(m.Rank(f));
    Integer expected = oracle::Beta(m.flats(), ranks);
    if (m.dimension() % 2 != 0) expected = -expected;
    const IntersectionRun run =
        ComputeIntersection(m, MatroidAutomorphism::Identity(m.ground_size()));
    EXPECT_EQ(run.degree, expected) << name;
    EXPECT_EQ(run.cycles.back().Weight({}), expected) << name;
  }
}

TEST(IntersectionTest, InvariantUnderRelabelling) {
  const MatroidSpec fano = CatalogEntry("fano");
  const std::vector<int> sigma = {3, 6, 0, 5, 1, 4, 2};
  const MatroidAutomorphism s(sigma);
  const Matroid relabelled = Relabel(fano.matroid, sigma);
  const auto autos = oracle::Automorphisms(testing::RankOf(fano.matroid), 7);
  for (std::size_t a = 0; a < autos.size(); a += 23) {
    const MatroidAutomorphism psi(autos[a]);
    // σψσ^{-1} in one-line notation.
    std::vector<int> conjugated(7);
    for (int e = 0; e < 7; ++e) conjugated[sigma[e]] = sigma[psi(e)];
    const MatroidAutomorphism image(conjugated);
    ASSERT_TRUE(IsAutomorphism(relabelled, image));
    // Relabelling moves 0, so only the degree is compared.
    EXPECT_EQ(ComputeIntersection(fano.matroid, psi).degree,
              ComputeIntersection(relabelled, image).degree);
  }
}

TEST(IntersectionTest, CorruptedWeightIsDetected) {
  IntersectionOptions options;
  options.corrupt_weight = true;
  EXPECT_THROW(
      ComputeIntersection(Matroid::Uniform(2, 3), kSwap, options),
      ConsistencyError);
}

TEST(IntersectionTest, RejectsNonAutomorphisms) {
  const Matroid k4 = CatalogEntry("graphic:K4").matroid;
  EXPECT_THROW(ComputeIntersection(k4, MatroidAutomorphism({1, 0, 2, 3, 4, 5})),
               InputError);
}

}  // namespace
}  // namespace lefschetz
