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

#include "lefschetz/catalog.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace lefschetz {

namespace {

using nlohmann::json;

const std::vector<std::vector<int>> kFanoLines = {
    {0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6},
    {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};

// Rank-3 matroid on 7 points whose 3-point lines are `lines`.
std::vector<Subset> BasesAvoidingLines(
    const std::vector<std::vector<int>>& lines) {
  std::vector<Subset> line_masks;
  for (const auto& line : lines) line_masks.push_back(FromElements(line));
  std::vector<Subset> bases;
  for (Subset s = 0; s < (Subset{1} << 7); ++s) {
    if (Cardinality(s) != 3) continue;
    if (std::find(line_masks.begin(), line_masks.end(), s) == line_masks.end()) {
      bases.push_back(s);
    }
  }
  return bases;
}

std::vector<int> Cycle(int m) {
  std::vector<int> images(m);
  for (int e = 0; e < m; ++e) images[e] = (e + 1) % m;
  return images;
}

std::vector<int> Transposition(int m, int a, int b) {
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 0);
  std::swap(images[a], images[b]);
  return images;
}

int ParseCount(const std::string& text, const std::string& name) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw InputError("malformed catalog name '" + name + "'");
  }
  return value;
}

std::vector<std::string> Split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, separator)) parts.push_back(part);
  return parts;
}

std::vector<Subset> ParseSubsetList(const json& list, int ground_size,
                                    const std::string& what) {
  if (!list.is_array()) throw InputError(what + " must be an array");
  std::vector<Subset> out;
  for (const json& entry : list) {
    if (!entry.is_array()) throw InputError(what + " entries must be arrays");
    Subset s = 0;
    for (const json& e : entry) {
      if (!e.is_number_integer()) {
        throw InputError(what + " elements must be integers");
      }
      const int element = e.get<int>();
      if (element < 0 || element >= ground_size) {
        throw InputError(what + " element " + std::to_string(element) +
                         " out of range");
      }
      s |= Singleton(element);
    }
    out.push_back(s);
  }
  return out;
}

int RequireInt(const json& document, const char* key) {
  if (!document.contains(key) || !document[key].is_number_integer()) {
    throw InputError(std::string("matroid document needs integer field '") +
                     key + "'");
  }
  return document[key].get<int>();
}

}  // namespace

std::vector<std::pair<int, int>> CompleteGraphEdges(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertices; ++i) {
    for (int j = i + 1; j < vertices; ++j) edges.emplace_back(i, j);
  }
  return edges;
}

std::vector<std::pair<int, int>> CompleteBipartiteEdges(int left, int right) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < left; ++i) {
    for (int j = left; j < left + right; ++j) edges.emplace_back(i, j);
  }
  return edges;
}

std::vector<int> EdgePermutation(const std::vector<std::pair<int, int>>& edges,
                                 const std::vector<int>& vertex_perm) {
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    index[{std::min(u, v), std::max(u, v)}] = static_cast<int>(i);
  }
  std::vector<int> images;
  for (const auto& [u, v] : edges) {
    const int a = vertex_perm.at(u);
    const int b = vertex_perm.at(v);
    auto it = index.find({std::min(a, b), std::max(a, b)});
    if (it == index.end()) {
      throw InputError("vertex permutation does not preserve the edges");
    }
    images.push_back(it->second);
  }
  return images;
}

MatroidSpec ParseMatroidDocument(const json& document,
                                 const MatroidLimits& limits,
                                 const std::string& id) {
  if (!document.is_object() || !document.contains("type") ||
      !document["type"].is_string()) {
    throw InputError("matroid document needs a string field 'type'");
  }
  const std::string type = document["type"].get<std::string>();
  std::string resolved_id = id;
  if (resolved_id.empty() && document.contains("id") &&
      document["id"].is_string()) {
    resolved_id = document["id"].get<std::string>();
  }
  if (type == "uniform") {
    const int r = RequireInt(document, "r");
    const int m = RequireInt(document, "n_elements");
    if (resolved_id.empty()) {
      resolved_id = "uniform:" + std::to_string(r) + ":" + std::to_string(m);
    }
    return {resolved_id, document, Matroid::Uniform(r, m, limits), {}};
  }
  if (type == "graphic") {
    const int vertices = RequireInt(document, "n_vertices");
    if (!document.contains("edges") || !document["edges"].is_array()) {
      throw InputError("graphic matroid needs an 'edges' array");
    }
    std::vector<std::pair<int, int>> edges;
    for (const json& edge : document["edges"]) {
      if (!edge.is_array() || edge.size() != 2 || !edge[0].is_number_integer() ||
          !edge[1].is_number_integer()) {
        throw InputError("edges must be pairs of integers");
      }
      edges.emplace_back(edge[0].get<int>(), edge[1].get<int>());
    }
    if (resolved_id.empty()) resolved_id = "graphic";
    return {resolved_id, document, Matroid::Graphic(vertices, edges, limits),
            {}};
  }
  if (type == "bases") {
    const int m = RequireInt(document, "n_elements");
    if (m < 0 || m > limits.max_ground_size) {
      throw InputError("ground set of " + std::to_string(m) +
                       " elements exceeds the cap of " +
                       std::to_string(limits.max_ground_size));
    }
    if (!document.contains("bases")) throw InputError("missing 'bases'");
    Matroid matroid = Matroid::FromBases(
        m, ParseSubsetList(document["bases"], m, "bases"), limits);
    if (resolved_id.empty()) resolved_id = "bases";
    return {resolved_id, document, matroid, {}};
  }
  if (type == "flats") {
    const int m = RequireInt(document, "n_elements");
    if (m < 0 || m > limits.max_ground_size) {
      throw InputError("ground set of " + std::to_string(m) +
                       " elements exceeds the cap of " +
                       std::to_string(limits.max_ground_size));
    }
    if (!document.contains("flats_by_rank") ||
        !document["flats_by_rank"].is_array()) {
      throw InputError("missing 'flats_by_rank' array");
    }
    std::vector<std::vector<Subset>> levels;
    for (const json& level : document["flats_by_rank"]) {
      levels.push_back(ParseSubsetList(level, m, "flats"));
    }
    Matroid matroid = Matroid::FromFlats(m, levels, limits);
    if (resolved_id.empty()) resolved_id = "flats";
    return {resolved_id, document, matroid, {}};
  }
  throw InputError("unknown matroid type '" + type + "'");
}

MatroidAutomorphism ParseAutomorphismDocument(const json& document) {
  if (!document.is_object() || !document.contains("perm") ||
      !document["perm"].is_array()) {
    throw InputError("automorphism document needs a 'perm' array");
  }
  std::vector<int> images;
  for (const json& e : document["perm"]) {
    if (!e.is_number_integer()) throw InputError("perm entries must be integers");
    images.push_back(e.get<int>());
  }
  return MatroidAutomorphism(std::move(images));
}

std::vector<std::string> CatalogPatterns() {
  return {"uniform:r:m", "boolean:m", "graphic:K4", "graphic:K33", "fano",
          "nonfano"};
}

MatroidSpec CatalogEntry(const std::string& name, const MatroidLimits& limits) {
  const std::vector<std::string> parts = Split(name, ':');
  if (parts.empty()) throw InputError("empty catalog name");
  const std::string& kind = parts[0];

  if (kind == "uniform" && parts.size() == 3) {
    const int r = ParseCount(parts[1], name);
    const int m = ParseCount(parts[2], name);
    MatroidSpec spec{name,
                     {{"type", "uniform"}, {"r", r}, {"n_elements", m}},
                     Matroid::Uniform(r, m, limits),
                     {}};
    spec.example_automorphisms.push_back(Transposition(m, 0, 0));
    if (m >= 2) spec.example_automorphisms.push_back(Transposition(m, 0, 1));
    if (m >= 3) spec.example_automorphisms.push_back(Transposition(m, 1, 2));
    if (m >= 2) spec.example_automorphisms.push_back(Cycle(m));
    return spec;
  }
  if (kind == "boolean" && parts.size() == 2) {
    const int m = ParseCount(parts[1], name);
    MatroidSpec spec{name,
                     {{"type", "uniform"}, {"r", m}, {"n_elements", m}},
                     Matroid::Uniform(m, m, limits),
                     {}};
    spec.example_automorphisms.push_back(Transposition(m, 0, 0));
    if (m >= 2) spec.example_automorphisms.push_back(Transposition(m, 0, 1));
    if (m >= 2) spec.example_automorphisms.push_back(Cycle(m));
    return spec;
  }
  if (kind == "graphic" && parts.size() == 2 &&
      (parts[1] == "K4" || parts[1] == "K33")) {
    const bool k4 = parts[1] == "K4";
    const int vertices = k4 ? 4 : 6;
    const auto edges = k4 ? CompleteGraphEdges(4) : CompleteBipartiteEdges(3, 3);
    json edge_list = json::array();
    for (const auto& [u, v] : edges) edge_list.push_back({u, v});
    MatroidSpec spec{name,
                     {{"type", "graphic"},
                      {"n_vertices", vertices},
                      {"edges", edge_list}},
                     Matroid::Graphic(vertices, edges, limits),
                     {}};
    const std::vector<std::vector<int>> vertex_perms =
        k4 ? std::vector<std::vector<int>>{{0, 1, 2, 3},
                                           {1, 0, 2, 3},
                                           {0, 2, 3, 1},
                                           {1, 2, 3, 0},
                                           {1, 0, 3, 2}}
           : std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5},
                                           {1, 0, 2, 3, 4, 5},
                                           {1, 2, 0, 3, 4, 5},
                                           {3, 4, 5, 0, 1, 2},
                                           {3, 4, 5, 1, 2, 0}};
    for (const auto& perm : vertex_perms) {
      spec.example_automorphisms.push_back(EdgePermutation(edges, perm));
    }
    return spec;
  }
  if ((kind == "fano" || kind == "nonfano") && parts.size() == 1) {
    std::vector<std::vector<int>> lines = kFanoLines;
    if (kind == "nonfano") lines.erase(lines.begin());
    json bases = json::array();
    const std::vector<Subset> masks = BasesAvoidingLines(lines);
    for (Subset b : masks) bases.push_back(Elements(b));
    MatroidSpec spec{name,
                     {{"type", "bases"}, {"n_elements", 7}, {"bases", bases}},
                     Matroid::FromBases(7, masks, limits),
                     {}};
    spec.example_automorphisms.push_back(Transposition(7, 0, 0));
    // Stabilizes the line {0,1,3}, so it also acts on the non-Fano plane.
    spec.example_automorphisms.push_back({1, 0, 2, 3, 6, 5, 4});
    if (kind == "fano") {
      std::vector<int> shift(7), doubling(7);
      for (int x = 0; x < 7; ++x) {
        shift[x] = (x + 1) % 7;
        doubling[x] = (2 * x) % 7;
      }
      spec.example_automorphisms.push_back(shift);
      spec.example_automorphisms.push_back(doubling);
    }
    return spec;
  }
  throw InputError("unknown catalog entry '" + name + "'; known: uniform:r:m, "
                   "boolean:m, graphic:K4, graphic:K33, fano, nonfano");
}

}  // namespace lefschetz
