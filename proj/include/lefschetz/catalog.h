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

#ifndef LEFSCHETZ_CATALOG_H_
#define LEFSCHETZ_CATALOG_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "lefschetz/matroid.h"

namespace lefschetz {

// A resolved matroid together with where it came from.
struct MatroidSpec {
  std::string id;
  nlohmann::json document;
  Matroid matroid;
  // Known automorphisms in one-line image notation.
  std::vector<std::vector<int>> example_automorphisms;
};

// Matroid documents:
//   {"type": "uniform", "r": 2, "n_elements": 3}
//   {"type": "graphic", "n_vertices": 4, "edges": [[0, 1], ...]}
//   {"type": "bases", "n_elements": 4, "bases": [[0, 1], ...]}
//   {"type": "flats", "n_elements": 3, "flats_by_rank": [[[]], [[0], ...], ...]}
// Bases and flats documents are checked against the rank axioms.
MatroidSpec ParseMatroidDocument(const nlohmann::json& document,
                                 const MatroidLimits& limits,
                                 const std::string& id = "");

// {"perm": [img_0, ..., img_N]}.
MatroidAutomorphism ParseAutomorphismDocument(const nlohmann::json& document);

// "uniform:r:m", "boolean:m", "graphic:K4", "graphic:K33", "fano",
// "nonfano". Throws InputError for unknown names.
MatroidSpec CatalogEntry(const std::string& name,
                         const MatroidLimits& limits = {});
std::vector<std::string> CatalogPatterns();

// Edge permutation induced by a vertex permutation, or InputError if the
// vertex map does not preserve the edge set.
std::vector<int> EdgePermutation(const std::vector<std::pair<int, int>>& edges,
                                 const std::vector<int>& vertex_perm);

std::vector<std::pair<int, int>> CompleteGraphEdges(int vertices);
std::vector<std::pair<int, int>> CompleteBipartiteEdges(int left, int right);

}  // namespace lefschetz

#endif  // LEFSCHETZ_CATALOG_H_
