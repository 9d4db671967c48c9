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

// Acceptance run over the fixed corpus: one [PASS]/[FAIL] line per
// criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.h"
#include "lefschetz/catalog.h"
#include "lefschetz/fan.h"
#include "lefschetz/framing.h"
#include "lefschetz/intersection.h"
#include "lefschetz/lattice.h"
#include "lefschetz/matroid.h"
#include "lefschetz/verify.h"
#include "oracles.h"

namespace lefschetz {
namespace {

// Detail text of a criterion; empty failure means pass.
struct Outcome {
  std::string failure;
  std::string detail;
};

using Criterion = std::function<Outcome()>;

Integer Signed(int n, const Integer& value) {
  return n % 2 == 0 ? value : Integer(-value);
}

std::string Str(const Integer& value) { return value.get_str(); }

Outcome ThreeWayEquality(const std::vector<testing::CorpusPair>& corpus) {
  const auto start = std::chrono::steady_clock::now();
  VerifyOptions options;
  options.fast = true;
  for (const auto& pair : corpus) {
    const VerificationReport r = Verify(pair.spec, pair.psi, options);
    const Integer signed_beta = Signed(r.n, r.beta_fix);
    if (r.intersection_degree != signed_beta ||
        r.lefschetz_sum != signed_beta) {
      return {pair.label + ": degree " + Str(r.intersection_degree) +
                  ", (-1)^n beta " + Str(signed_beta) + ", lefschetz " +
                  Str(r.lefschetz_sum),
              ""};
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::ostringstream detail;
  detail << corpus.size() << " pairs in " << seconds << " s";
  if (seconds >= 60) return {detail.str() + " exceeds 60 s", ""};
  return {"", detail.str()};
}

Outcome WorkedValues() {
  const MatroidSpec u23 = CatalogEntry("uniform:2:3");
  struct Case {
    std::vector<int> perm;
    int value;
    int trace1;
  };
  for (const Case& c : {Case{{0, 1, 2}, -1, 2}, Case{{0, 2, 1}, 1, 0},
                        Case{{1, 2, 0}, 2, -1}}) {
    const VerificationReport r = Verify(u23, MatroidAutomorphism(c.perm));
    const std::string label = testing::PermLabel(c.perm);
    if (r.intersection_degree != c.value || r.lefschetz_sum != c.value ||
        Signed(r.n, r.beta_fix) != c.value) {
      return {label + ": expected " + std::to_string(c.value), ""};
    }
    if (r.traces.size() != 2 || r.traces[0].linear != 1 ||
        r.traces[1].linear != c.trace1 || r.traces[0].chains != 1 ||
        r.traces[1].chains != c.trace1) {
      return {label + ": per-p traces differ", ""};
    }
    if (!r.verdict) return {label + ": verdict false", ""};
  }
  return {"", "(-1,(1,2)) (1,(1,0)) (2,(1,-1))"};
}

Outcome PoincareHopf() {
  std::string detail;
  for (const auto& name : testing::CorpusMatroids()) {
    const Matroid m = CatalogEntry(name).matroid;
    std::vector<int> ranks;
    for (Subset f : m.flats()) ranks.push_back(m.Rank(f));
    const Integer expected =
        Signed(m.dimension(), oracle::Beta(m.flats(), ranks));
    const Integer degree =
        ComputeIntersection(m, MatroidAutomorphism::Identity(m.ground_size()))
            .degree;
    if (degree != expected) {
      return {name + ": degree " + Str(degree) + ", expected " + Str(expected),
              ""};
    }
    detail += name + "=" + Str(degree) + " ";
  }
  return {"", detail};
}

Outcome TraceRoutes(const std::vector<testing::CorpusPair>& corpus) {
  std::size_t checked = 0;
  for (const auto& pair : corpus) {
    const Matroid& m = pair.spec.matroid;
    for (int p = 0; p <= m.dimension(); ++p) {
      const Integer linear = TraceLinear(m, pair.psi, p);
      const Integer chains = TraceChains(m, pair.psi, p);
      ++checked;
      if (linear != chains) {
        return {pair.label + " p=" + std::to_string(p) + ": " + Str(linear) +
                    " vs " + Str(chains),
                ""};
      }
    }
  }
  return {"", std::to_string(checked) + " (pair, p) traces"};
}

Outcome ValidatorsOnCorpus(const std::vector<testing::CorpusPair>& corpus,
                           const std::vector<std::string>& names) {
  std::size_t checked = 0;
  for (const auto& pair : corpus) {
    const IntersectionRun run =
        ComputeIntersection(pair.spec.matroid, pair.psi);
    std::vector<Validation> results;
    for (const auto& name : names) {
      if (name == "f_value_routes") results.push_back(CompareFValueRoutes(run));
      if (name == "gap_forms") results.push_back(ValidateXkStructure(run));
      if (name == "facet_weights") results.push_back(ValidateFacetWeights(run));
      if (name == "balancing") results.push_back(ValidateCycleBalancing(run));
      if (name == "weight_table") results.push_back(ValidateWeightTable(run));
    }
    for (const Validation& v : results) {
      checked += v.checked;
      if (!v.passed()) {
        return {pair.label + " " + v.name + ": " +
                    (v.violations.empty() ? "" : v.violations.front()),
                ""};
      }
    }
  }
  return {"", std::to_string(checked) + " checks, 0 violations"};
}

Outcome HyperplaneSections() {
  std::size_t cuts = 0;
  for (const auto& name : testing::CorpusMatroids()) {
    const Matroid m = CatalogEntry(name).matroid;
    const GenericChain chain =
        MakeGenericChain(Matroid::Uniform(1, m.ground_size()), m);
    WeightedFan x = MatroidFan(m);
    for (int j = 1; j <= m.dimension(); ++j) {
      x = Divisor(chain.functions[j - 1], x);
      ++cuts;
      const int i = m.dimension() - j;
      if (!(x == MatroidFan(Truncation(m, i)))) {
        return {name + ": cut down to i=" + std::to_string(i) +
                    " differs from the truncation fan",
                ""};
      }
    }
  }
  return {"", std::to_string(cuts) + " sections"};
}

Outcome Resolutions() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t runs = 0;
  for (const auto& name : testing::CorpusMatroids()) {
    const Matroid m = CatalogEntry(name).matroid;
    const RankedLattice l = FlatLattice(m);
    for (int p = 0; p <= m.dimension(); ++p) {
      const ResolutionReport r = CheckResolution(m, p);
      ++runs;
      if (!r.validation.passed()) {
        return {name + " p=" + std::to_string(p) + ": " +
                    r.validation.violations.front(),
                ""};
      }
      Integer mobius_sum = 0;
      for (std::size_t f = 0; f < l.size(); ++f) {
        if (l.rank(static_cast<int>(f)) <= p) {
          mobius_sum += l.Mobius(l.bottom(), static_cast<int>(f));
        }
      }
      if (Integer(r.framing_dimension) != Signed(p, mobius_sum)) {
        return {name + " p=" + std::to_string(p) + ": dim F_p mismatch", ""};
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::ostringstream detail;
  detail << runs << " resolutions in " << seconds << " s";
  if (seconds >= 30) return {detail.str() + " exceeds 30 s", ""};
  return {"", detail.str()};
}

Outcome FramingHyperplane() {
  std::size_t checked = 0;
  for (const auto& name : testing::CorpusMatroids()) {
    const Matroid m = CatalogEntry(name).matroid;
    for (int p = 0; p < m.dimension(); ++p) {
      ++checked;
      if (!FramingHyperplaneCheck(m, p)) {
        return {name + " p=" + std::to_string(p), ""};
      }
    }
  }
  return {"", std::to_string(checked) + " (M, p)"};
}

Outcome MobiusSuite(const std::vector<testing::CorpusPair>& corpus) {
  std::size_t intervals = 0;
  for (const auto& pair : corpus) {
    const Matroid& m = pair.spec.matroid;
    const RankedLattice l = FlatLattice(m);
    const RankedLattice k = FixedFlatLattice(m, pair.psi);
    for (const RankedLattice* lattice : {&l, &k}) {
      for (std::size_t a = 0; a < lattice->size(); ++a) {
        for (std::size_t b = 0; b < lattice->size(); ++b) {
          const int ia = static_cast<int>(a);
          const int ib = static_cast<int>(b);
          if (!lattice->Less(ia, ib)) continue;
          ++intervals;
          if (lattice->Mobius(ia, ib) != lattice->MobiusViaChains(ia, ib)) {
            return {pair.label + ": Möbius routes disagree", ""};
          }
        }
      }
      if (!CheckMobiusInversion(*lattice)) {
        return {pair.label + ": Möbius inversion fails", ""};
      }
      for (std::size_t g = 0; g < lattice->size(); ++g) {
        if (!CheckRecursiveBeta(*lattice, static_cast<int>(g))) {
          return {pair.label + ": recursive beta fails", ""};
        }
      }
    }
    std::vector<int> embedding;
    for (Subset f : k.labels()) embedding.push_back(l.IndexOf(f));
    std::vector<int> closure;
    for (Subset f : l.labels()) {
      closure.push_back(k.IndexOf(PsiClosure(m, pair.psi, f)));
    }
    if (!SublatticeMobiusCheck(l, k, embedding, closure)) {
      return {pair.label + ": sublattice check fails", ""};
    }
  }
  return {"", std::to_string(intervals) + " intervals"};
}

}  // namespace
}  // namespace lefschetz

int main() {
  using lefschetz::Outcome;
  const auto corpus = lefschetz::testing::Corpus();
  const std::vector<std::pair<std::string, lefschetz::Criterion>> criteria = {
      {"AC1 three-way equality on the corpus",
       [&] { return lefschetz::ThreeWayEquality(corpus); }},
      {"AC2 worked values on U(2,3)", [] { return lefschetz::WorkedValues(); }},
      {"AC3 identity gives (-1)^n beta(M)",
       [] { return lefschetz::PoincareHopf(); }},
      {"AC4 trace routes agree", [&] { return lefschetz::TraceRoutes(corpus); }},
      {"AC5 closed form matches pullback",
       [&] { return lefschetz::ValidatorsOnCorpus(corpus, {"f_value_routes"}); }},
      {"AC6 structure, weights and balancing",
       [&] {
         return lefschetz::ValidatorsOnCorpus(
             corpus, {"gap_forms", "facet_weights", "balancing", "weight_table"});
       }},
      {"AC7 hyperplane sections give truncations",
       [] { return lefschetz::HyperplaneSections(); }},
      {"AC8 resolution exactness", [] { return lefschetz::Resolutions(); }},
      {"AC9 framing hyperplane property",
       [] { return lefschetz::FramingHyperplane(); }},
      {"AC10 Möbius and beta identities",
       [&] { return lefschetz::MobiusSuite(corpus); }},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.failure = std::string("exception: ") + e.what();
    }
    if (outcome.failure.empty()) {
      std::printf("[PASS] %s (%s)\n", name.c_str(), outcome.detail.c_str());
    } else {
      ++failures;
      std::printf("[FAIL] %s: %s\n", name.c_str(), outcome.failure.c_str());
    }
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
