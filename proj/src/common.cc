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

#include "lefschetz/common.h"

namespace lefschetz {

std::vector<int> Elements(Subset s) {
  std::vector<int> out;
  out.reserve(Cardinality(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Subset FromElements(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 0 || e >= 64) {
      throw InputError("element " + std::to_string(e) + " out of range");
    }
    s |= Singleton(e);
  }
  return s;
}

std::string FormatSubset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : Elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace lefschetz
