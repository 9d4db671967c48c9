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

#include "lefschetz/exterior.h"

#include <utility>

namespace lefschetz {

ExteriorVector ExteriorVector::Scalar(const Rational& value) {
  ExteriorVector v(0);
  v.AddTerm(0, value);
  return v;
}

Rational ExteriorVector::Coefficient(Subset key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExteriorVector::AddTerm(Subset key, const Rational& coefficient) {
  if (Cardinality(key) != degree_) {
    throw InputError("exterior term of the wrong degree");
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void ExteriorVector::AddMultiple(const ExteriorVector& other,
                                 const Rational& factor) {
  if (other.degree_ != degree_) {
    throw InputError("adding exterior vectors of different degrees");
  }
  if (factor == 0) return;
  for (const auto& [key, coefficient] : other.terms_) {
    AddTerm(key, factor * coefficient);
  }
}

ExteriorVector ExteriorVector::Wedge(const RationalVector& v) const {
  ExteriorVector out(degree_ + 1);
  for (const auto& [key, coefficient] : terms_) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0 || Contains(key, static_cast<int>(j))) continue;
      // Moving e_j left past the larger indices of the key.
      const int larger = Cardinality(key >> (j + 1));
      const Rational term = coefficient * v[j];
      out.AddTerm(key | Singleton(static_cast<int>(j)),
                  larger % 2 == 0 ? term : Rational(-term));
    }
  }
  return out;
}

std::string ExteriorVector::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, coefficient] : terms_) {
    if (!out.empty()) out += " + ";
    out += coefficient.get_str() + "·e";
    std::string indices;
    for (int i : Elements(key)) {
      if (!indices.empty()) indices += ",";
      indices += std::to_string(i + 1);
    }
    out += "{" + indices + "}";
  }
  return out;
}

ExteriorVector SparseEchelon::Reduce(ExteriorVector v,
                                     std::vector<Rational>* coordinates) const {
  // Row keys beyond the pivot are larger than it, so one ascending pass
  // clears every pivot position.
  for (const auto& [pivot, index] : pivots_) {
    const Rational c = v.Coefficient(pivot);
    if (c == 0) continue;
    if (coordinates != nullptr) (*coordinates)[index] = c;
    v.AddMultiple(rows_[index], -c);
  }
  return v;
}

bool SparseEchelon::Insert(const ExteriorVector& v) {
  if (!rows_.empty() && v.degree() != rows_.front().degree()) {
    throw InputError("echelon rows must share a degree");
  }
  ExteriorVector reduced = Reduce(v, nullptr);
  if (reduced.IsZero()) return false;
  const auto& [pivot, lead] = *reduced.terms().begin();
  const Subset pivot_key = pivot;
  ExteriorVector row(reduced.degree());
  const Rational inverse = 1 / lead;
  row.AddMultiple(reduced, inverse);
  pivots_.emplace(pivot_key, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

std::optional<std::vector<Rational>> SparseEchelon::Coordinates(
    const ExteriorVector& v) const {
  std::vector<Rational> coordinates(rows_.size());
  if (!Reduce(v, &coordinates).IsZero()) return std::nullopt;
  return coordinates;
}

std::size_t MatrixRank(std::vector<std::vector<Rational>> matrix) {
  if (matrix.empty()) return 0;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && matrix[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(matrix[pivot], matrix[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (matrix[r][col] == 0) continue;
      const Rational factor = matrix[r][col] / matrix[rank][col];
      for (std::size_t c = col; c < cols; ++c) {
        matrix[r][c] -= factor * matrix[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace lefschetz
