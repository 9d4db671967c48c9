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

// The fixed corpus of (matroid, automorphism) pairs shared by tests.
// Automorphisms come from brute-force enumeration, not from the catalog.

#ifndef LEFSCHETZ_TESTS_CORPUS_H_
#define LEFSCHETZ_TESTS_CORPUS_H_

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "lefschetz/catalog.h"
#include "lefschetz/matroid.h"
#include "oracles.h"

namespace lefschetz::testing {

struct CorpusPair {
  std::string label;
  MatroidSpec spec;
  MatroidAutomorphism psi;
};

inline oracle::RankOracle RankOf(const Matroid& m) {
  return [m](Subset s) { return m.Rank(s); };
}

inline std::string PermLabel(const std::vector<int>& perm) {
  std::string out = "[";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(perm[i]);
  }
  return out + "]";
}

// Matroids of the corpus, by catalog name.
inline std::vector<std::string> CorpusMatroids() {
  return {"uniform:2:3", "uniform:2:4", "uniform:3:4", "boolean:3",
          "boolean:4",   "graphic:K4",  "fano"};
}

inline std::vector<CorpusPair> Corpus() {
  std::vector<CorpusPair> pairs;
  auto add = [&](const MatroidSpec& spec, const std::vector<int>& perm) {
    pairs.push_back({spec.id + " " + PermLabel(perm), spec,
                     MatroidAutomorphism(perm)});
  };
  // Every automorphism of the small uniform and Boolean matroids.
  for (const char* name :
       {"uniform:2:3", "uniform:2:4", "uniform:3:4", "boolean:3",
        "boolean:4"}) {
    const MatroidSpec spec = CatalogEntry(name);
    for (const auto& perm :
         oracle::Automorphisms(RankOf(spec.matroid), spec.matroid.ground_size())) {
      add(spec, perm);
    }
  }
  // Ten vertex permutations of K4, spread over S_4.
  {
    const MatroidSpec spec = CatalogEntry("graphic:K4");
    const auto edges = CompleteGraphEdges(4);
    std::vector<int> vertices = {0, 1, 2, 3};
    int index = 0;
    const std::vector<int> picks = {0, 2, 5, 7, 10, 12, 15, 17, 20, 23};
    do {
      if (std::find(picks.begin(), picks.end(), index) != picks.end()) {
        add(spec, EdgePermutation(edges, vertices));
      }
      ++index;
    } while (std::next_permutation(vertices.begin(), vertices.end()));
  }
  // Ten Fano automorphisms, every 17th of the brute-force list.
  {
    const MatroidSpec spec = CatalogEntry("fano");
    const auto all = oracle::Automorphisms(RankOf(spec.matroid), 7);
    for (std::size_t i = 0; i < 10; ++i) add(spec, all[17 * i]);
  }
  return pairs;
}

}  // namespace lefschetz::testing

#endif  // LEFSCHETZ_TESTS_CORPUS_H_
