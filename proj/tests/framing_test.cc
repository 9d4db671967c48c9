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
#include "lefschetz/exterior.h"
#include "lefschetz/framing.h"
#include "lefschetz/matroid.h"
#include "oracles.h"

namespace lefschetz {
namespace {

const MatroidAutomorphism kSwap({0, 2, 1});
const MatroidAutomorphism kCycle({1, 2, 0});

using Matrix = std::vector<RationalVector>;

// Ψ written out from its action on basis vectors.
oracle::Matrix InducedOracle(const MatroidAutomorphism& psi) {
  const int count = psi.size() - 1;
  oracle::Matrix a(count, std::vector<Rational>(count));
  for (int i = 1; i <= count; ++i) {
    for (int row = 0; row < count; ++row) {
      if (psi(i) == 0) {
        a[row][i - 1] = -1;
      } else {
        a[row][i - 1] = (row == psi(i) - 1) ? 1 : 0;
      }
    }
  }
  return a;
}

std::vector<oracle::Matrix> ChainGenerators(const Matroid& m, int p) {
  std::vector<oracle::Matrix> out;
  for (const Chain& chain : FlatChains(m, p, m.rank())) {
    oracle::Matrix vectors;
    for (Subset f : chain) vectors.push_back(Dehomogenize(f, m.ground_size()));
    out.push_back(vectors);
  }
  return out;
}

// (-1)^p Σ_{F fixed, rk F <= p} μ^ψ(∅, F) from the zeta-inverse oracle.
Integer MobiusTraceOracle(const Matroid& m, const MatroidAutomorphism& psi,
                          int p) {
  std::vector<Subset> sets;
  std::vector<int> ranks;
  oracle::FixedFlats(testing::RankOf(m), m.ground_size(), psi.images(), sets,
                     ranks);
  const auto mu = oracle::MobiusMatrix(sets);
  Integer sum = 0;
  for (std::size_t f = 0; f < sets.size(); ++f) {
    if (ranks[f] <= p) sum += mu[0][f];
  }
  return p % 2 == 0 ? sum : Integer(-sum);
}

TEST(ExteriorTest, WedgeSigns) {
  const RationalVector e1 = {1, 0, 0};
  const RationalVector e2 = {0, 1, 0};
  const RationalVector e3 = {0, 0, 1};
  const ExteriorVector one = ExteriorVector::Scalar(1);
  EXPECT_EQ(one.Wedge(e1).Wedge(e2).Coefficient(0b011), 1);
  EXPECT_EQ(one.Wedge(e2).Wedge(e1).Coefficient(0b011), -1);
  EXPECT_EQ(one.Wedge(e3).Wedge(e1).Wedge(e2).Coefficient(0b111), 1);
  EXPECT_EQ(one.Wedge(e2).Wedge(e1).Wedge(e3).Coefficient(0b111), -1);
  EXPECT_TRUE(one.Wedge(e1).Wedge(e1).IsZero());
  // (e1 + e2) ∧ (e1 - e2) = -2 e1∧e2.
  const ExteriorVector v = one.Wedge({1, 1, 0}).Wedge({1, -1, 0});
  EXPECT_EQ(v.Coefficient(0b011), -2);
  EXPECT_EQ(v.degree(), 2);
}

TEST(ExteriorTest, WedgeMatchesMinors) {
  const oracle::Matrix vectors = {{1, 2, 0, -1}, {3, -1, 2, 0}, {0, 1, 1, 5}};
  ExteriorVector v = ExteriorVector::Scalar(1);
  for (const auto& column : vectors) v = v.Wedge(column);
  for (const auto& rows : oracle::Combinations(4, 3)) {
    oracle::Matrix minor(3, std::vector<Rational>(3));
    Subset key = 0;
    for (int i = 0; i < 3; ++i) {
      key |= Singleton(rows[i]);
      for (int j = 0; j < 3; ++j) minor[i][j] = vectors[j][rows[i]];
    }
    EXPECT_EQ(v.Coefficient(key), oracle::Determinant(minor));
  }
}

TEST(ExteriorTest, EchelonAndRank) {
  SparseEchelon echelon;
  ExteriorVector a(1);
  a.AddTerm(0b01, 1);
  a.AddTerm(0b10, 2);
  ExteriorVector b(1);
  b.AddTerm(0b10, 1);
  ExteriorVector c = a;
  c.AddMultiple(b, 3);
  EXPECT_TRUE(echelon.Insert(a));
  EXPECT_TRUE(echelon.Insert(b));
  EXPECT_FALSE(echelon.Insert(c));
  EXPECT_EQ(echelon.rank(), 2u);
  const auto coordinates = echelon.Coordinates(c);
  ASSERT_TRUE(coordinates.has_value());
  ExteriorVector rebuilt(1);
  for (std::size_t i = 0; i < coordinates->size(); ++i) {
    rebuilt.AddMultiple(echelon.rows()[i], (*coordinates)[i]);
  }
  EXPECT_EQ(rebuilt, c);

  EXPECT_EQ(MatrixRank({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}), 2u);
  EXPECT_EQ(MatrixRank({}), 0u);
  EXPECT_EQ(MatrixRank({{0, 0}, {0, 0}}), 0u);
}

TEST(FramingTest, InducedMapExamples) {
  EXPECT_EQ(InducedMap(MatroidAutomorphism::Identity(3)),
            (Matrix{{1, 0}, {0, 1}}));
  EXPECT_EQ(InducedMap(kSwap), (Matrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(InducedMap(kCycle), (Matrix{{0, -1}, {1, -1}}));
  for (const auto& pair : testing::Corpus()) {
    EXPECT_EQ(InducedMap(pair.psi), InducedOracle(pair.psi)) << pair.label;
  }
}

TEST(FramingTest, WedgePowerMovesVolumeElements) {
  for (const auto& pair : testing::Corpus()) {
    const Matroid& m = pair.spec.matroid;
    for (int p = 0; p <= m.dimension(); ++p) {
      for (const Chain& chain : FlatChains(m, p, m.rank())) {
        Chain image;
        for (Subset f : chain) image.push_back(pair.psi.Apply(f));
        ASSERT_EQ(ApplyWedgePower(pair.psi,
                                  VolumeElement(chain, m.ground_size())),
                  VolumeElement(image, m.ground_size()))
            << pair.label << " " << FormatChain(chain);
      }
    }
  }
}

TEST(FramingTest, FramingDimensions) {
  const Matroid u23 = Matroid::Uniform(2, 3);
  EXPECT_EQ(BuildFramingBasis(u23, 1).dimension(), 2u);
  for (const auto& name : testing::CorpusMatroids()) {
    const Matroid m = CatalogEntry(name).matroid;
    EXPECT_EQ(BuildFramingBasis(m, 0).dimension(), 1u) << name;
    const MatroidAutomorphism id = MatroidAutomorphism::Identity(m.ground_size());
    for (int p = 0; p <= m.dimension(); ++p) {
      EXPECT_EQ(Integer(BuildFramingBasis(m, p).dimension()),
                MobiusTraceOracle(m, id, p))
          << name << " p=" << p;
    }
  }
}

TEST(FramingTest, TraceExamples) {
  const Matroid u23 = Matroid::Uniform(2, 3);
  for (const auto& psi :
       {MatroidAutomorphism::Identity(3), kSwap, kCycle}) {
    EXPECT_EQ(TraceLinear(u23, psi, 0), 1);
    EXPECT_EQ(TraceChains(u23, psi, 0), 1);
  }
  EXPECT_EQ(TraceLinear(u23, kSwap, 1), 0);
  EXPECT_EQ(TraceChains(u23, kSwap, 1), 0);
  EXPECT_EQ(TraceLinear(u23, kCycle, 1), -1);
  EXPECT_EQ(TraceChains(u23, kCycle, 1), -1);
  EXPECT_EQ(TraceLinear(u23, MatroidAutomorphism::Identity(3), 1), 2);
}

TEST(FramingTest, TracesMatchOracles) {
  for (const auto& pair : testing::Corpus()) {
    const Matroid& m = pair.spec.matroid;
    const oracle::Matrix a = InducedOracle(pair.psi);
    for (int p = 0; p <= m.dimension(); ++p) {
      const Integer linear = TraceLinear(m, pair.psi, p);
      EXPECT_EQ(Rational(linear),
                oracle::WedgeTraceOnSpan(a, ChainGenerators(m, p), p))
          << pair.label << " p=" << p;
      EXPECT_EQ(TraceChains(m, pair.psi, p), linear) << pair.label;
      EXPECT_EQ(linear, MobiusTraceOracle(m, pair.psi, p)) << pair.label;
    }
  }
}

TEST(FramingTest, LefschetzSumExamples) {
  const Matroid u23 = Matroid::Uniform(2, 3);
  struct Case {
    MatroidAutomorphism psi;
    int sum;
    int trace1;
  };
  for (const Case& c : {Case{MatroidAutomorphism::Identity(3), -1, 2},
                        Case{kSwap, 1, 0}, Case{kCycle, 2, -1}}) {
    const LefschetzResult r = LefschetzSum(u23, c.psi);
    EXPECT_EQ(r.sum, c.sum);
    ASSERT_EQ(r.traces.size(), 2u);
    EXPECT_EQ(r.traces[0].linear, 1);
    EXPECT_EQ(r.traces[1].linear, c.trace1);
    EXPECT_EQ(r.traces[1].chains, c.trace1);
  }
}

TEST(FramingTest, ResolutionExamples) {
  const Matroid u23 = Matroid::Uniform(2, 3);
  const ResolutionReport p1 = CheckResolution(u23, 1);
  EXPECT_TRUE(p1.validation.passed());
  EXPECT_EQ(p1.dimensions, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(p1.framing_dimension, 2u);

  const ResolutionReport p0 = CheckResolution(u23, 0);
  EXPECT_TRUE(p0.validation.passed());
  EXPECT_EQ(p0.dimensions, (std::vector<std::size_t>{1}));
  EXPECT_EQ(p0.framing_dimension, 1u);

  const ResolutionReport b3 = CheckResolution(Matroid::Uniform(3, 3), 2);
  EXPECT_TRUE(b3.validation.passed());
  long euler = 0;
  for (std::size_t l = 0; l < b3.dimensions.size(); ++l) {
    euler += (l % 2 == 0 ? 1 : -1) * static_cast<long>(b3.dimensions[l]);
  }
  EXPECT_EQ(euler, static_cast<long>(b3.framing_dimension));
  EXPECT_THROW(CheckResolution(u23, 2), InputError);
}

TEST(FramingTest, ResolutionExactOnCorpus) {
  for (const auto& name : testing::CorpusMatroids()) {
    const Matroid m = CatalogEntry(name).matroid;
    for (int p = 0; p <= m.dimension(); ++p) {
      const ResolutionReport r = CheckResolution(m, p);
      EXPECT_TRUE(r.validation.passed())
          << name << " p=" << p << " "
          << (r.validation.violations.empty() ? ""
                                              : r.validation.violations[0]);
      long euler = 0;
      for (std::size_t l = 0; l < r.dimensions.size(); ++l) {
        euler += (l % 2 == 0 ? 1 : -1) * static_cast<long>(r.dimensions[l]);
      }
      EXPECT_EQ(p % 2 == 0 ? euler : -euler,
                static_cast<long>(r.framing_dimension))
          << name << " p=" << p;
    }
  }
}

TEST(FramingTest, HyperplaneProperty) {
  EXPECT_TRUE(FramingHyperplaneCheck(Matroid::Uniform(3, 4), 1));
  for (const auto& name : testing::CorpusMatroids()) {
    const Matroid m = CatalogEntry(name).matroid;
    for (int p = 0; p <= m.dimension(); ++p) {
      EXPECT_TRUE(FramingHyperplaneCheck(m, p)) << name << " p=" << p;
    }
  }
}

}  // namespace
}  // namespace lefschetz
