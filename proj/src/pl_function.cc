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

#include "lefschetz/pl_function.h"

#include <algorithm>
#include <mutex>
#include <string>
#include <unordered_map>

namespace lefschetz {

RationalVector Dehomogenize(Subset s, int ground_size) {
  RationalVector x(ground_size > 0 ? ground_size - 1 : 0);
  const bool has_zero = Contains(s, 0);
  for (int i = 1; i < ground_size; ++i) {
    const int bit = Contains(s, i) ? 1 : 0;
    x[i - 1] = has_zero ? bit - 1 : bit;
  }
  return x;
}

ChainExpansion ExpandAlongChain(std::span<const Rational> x, int ground_size) {
  if (static_cast<int>(x.size()) + 1 != ground_size) {
    throw InputError("point has " + std::to_string(x.size()) +
                     " coordinates, expected " +
                     std::to_string(ground_size - 1));
  }
  std::vector<Rational> y(ground_size);
  y[0] = 0;
  std::copy(x.begin(), x.end(), y.begin() + 1);

  std::vector<Rational> levels = y;
  std::sort(levels.begin(), levels.end(),
            [](const Rational& a, const Rational& b) { return a > b; });
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  ChainExpansion out;
  out.shift = levels.back();
  for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
    Subset s = 0;
    for (int i = 0; i < ground_size; ++i) {
      if (y[i] >= levels[j]) s |= Singleton(i);
    }
    out.terms.emplace_back(s, levels[j] - levels[j + 1]);
  }
  return out;
}

struct PLFunction::Cache {
  std::mutex mu;
  std::unordered_map<Subset, Integer> values;
};

PLFunction::PLFunction(int ground_size, Evaluator evaluator)
    : ground_size_(ground_size),
      evaluator_(std::move(evaluator)),
      cache_(std::make_shared<Cache>()) {
  if (ground_size < 1 || ground_size > 64) {
    throw InputError("PL function ground size out of range");
  }
}

PLFunction PLFunction::FromSubsetValues(int ground_size, SubsetValues values,
                                        Integer top_value) {
  auto evaluator = [ground_size, values = std::move(values),
                    top_value](std::span<const Rational> x) -> Rational {
    const ChainExpansion expansion = ExpandAlongChain(x, ground_size);
    Rational total = expansion.shift * top_value;
    for (const auto& [subset, coefficient] : expansion.terms) {
      total += coefficient * values(subset);
    }
    return total;
  };
  return PLFunction(ground_size, std::move(evaluator));
}

PLFunction PLFunction::FromEvaluator(int ground_size, Evaluator evaluator) {
  return PLFunction(ground_size, std::move(evaluator));
}

Rational PLFunction::Evaluate(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != coordinate_count()) {
    throw InputError("point dimension does not match PL function");
  }
  return evaluator_(x);
}

Integer PLFunction::Value(Subset s) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->values.find(s);
    if (it != cache_->values.end()) return it->second;
  }
  const RationalVector point = Dehomogenize(s, ground_size_);
  const Rational value = Evaluate(point);
  if (value.get_den() != 1) {
    throw ConsistencyError("PL function value at " + FormatSubset(s) +
                           " is not integral: " + value.get_str());
  }
  Integer result = value.get_num();
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->values.emplace(s, result);
  return result;
}

}  // namespace lefschetz
