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

#ifndef LEFSCHETZ_EXTERIOR_H_
#define LEFSCHETZ_EXTERIOR_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/common.h"

namespace lefschetz {

// A sparse element of Λ^p Q^N. Basis element e_{i_1} ∧ ... ∧ e_{i_p} with
// i_1 < ... < i_p is keyed by the mask with bits i_j - 1 set, so coordinate
// x_i of a dehomogenized vector sits at bit i - 1.
class ExteriorVector {
 public:
  using Terms = std::map<Subset, Rational>;

  explicit ExteriorVector(int degree = 0) : degree_(degree) {}
  static ExteriorVector Scalar(const Rational& value);

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }
  Rational Coefficient(Subset key) const;

  void AddTerm(Subset key, const Rational& coefficient);
  // this += factor · other.
  void AddMultiple(const ExteriorVector& other, const Rational& factor);
  // this ∧ v for a vector v of length N.
  ExteriorVector Wedge(const RationalVector& v) const;

  bool operator==(const ExteriorVector& other) const {
    return degree_ == other.degree_ && terms_ == other.terms_;
  }
  std::string ToString() const;

 private:
  int degree_;
  Terms terms_;
};

// Echelon form of a growing family of exterior vectors. Each stored row is
// scaled so its pivot (smallest key) has coefficient 1; pivots are distinct.
class SparseEchelon {
 public:
  // Adds v if it is independent of the rows so far; returns whether it was.
  bool Insert(const ExteriorVector& v);

  std::size_t rank() const { return rows_.size(); }
  const std::vector<ExteriorVector>& rows() const { return rows_; }

  // Coordinates of v in rows(), or nullopt if v is not in the span.
  std::optional<std::vector<Rational>> Coordinates(
      const ExteriorVector& v) const;

 private:
  ExteriorVector Reduce(ExteriorVector v,
                        std::vector<Rational>* coordinates) const;

  std::vector<ExteriorVector> rows_;
  std::map<Subset, std::size_t> pivots_;
};

// Rank of a dense rational matrix (exact elimination).
std::size_t MatrixRank(std::vector<std::vector<Rational>> matrix);

}  // namespace lefschetz

#endif  // LEFSCHETZ_EXTERIOR_H_
