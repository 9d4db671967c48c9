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

#include "lefschetz/fan.h"

#include <random>
#include <sstream>

namespace lefschetz {

void ValidateChain(const Chain& chain, int ground_size) {
  const Subset ground = FullSet(ground_size);
  Subset previous = ground;
  for (Subset link : chain) {
    if (link == 0 || link == ground || !IsSubsetOf(link, ground)) {
      throw InputError("chain link " + FormatSubset(link) +
                       " is not a proper nonempty subset");
    }
    if (!IsSubsetOf(link, previous) || link == previous) {
      throw InputError("chain " + FormatChain(chain) +
                       " is not strictly decreasing");
    }
    previous = link;
  }
}

std::string FormatChain(const Chain& chain) {
  if (chain.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) out += " ";
    out += FormatSubset(chain[i]);
  }
  return out;
}

WeightedFan::WeightedFan(int ground_size, int dimension)
    : ground_size_(ground_size), dimension_(dimension) {
  if (dimension < 0 || dimension >= ground_size) {
    throw InputError("fan dimension out of range");
  }
}

void WeightedFan::Add(const Chain& chain, const Integer& weight) {
  if (static_cast<int>(chain.size()) != dimension_) {
    throw InputError("chain " + FormatChain(chain) + " has wrong length");
  }
  ValidateChain(chain, ground_size_);
  if (weight == 0) return;
  auto [it, inserted] = weights_.emplace(chain, weight);
  if (!inserted) {
    it->second += weight;
    if (it->second == 0) weights_.erase(it);
  }
}

Integer WeightedFan::Weight(const Chain& chain) const {
  auto it = weights_.find(chain);
  return it == weights_.end() ? Integer(0) : it->second;
}

std::string WeightedFan::Dump() const {
  std::ostringstream out;
  for (const auto& [chain, weight] : weights_) {
    out << FormatChain(chain) << " : " << weight.get_str() << "\n";
  }
  return out.str();
}

namespace {

void ExtendFlags(const Matroid& m, int rank, Chain& chain, WeightedFan& fan) {
  if (rank == 0) {
    fan.Add(chain, 1);
    return;
  }
  const Subset above = chain.empty() ? m.ground_set() : chain.back();
  for (Subset f : m.flats_by_rank()[rank]) {
    if (!IsSubsetOf(f, above)) continue;
    chain.push_back(f);
    ExtendFlags(m, rank - 1, chain, fan);
    chain.pop_back();
  }
}

}  // namespace

WeightedFan MatroidFan(const Matroid& m) {
  if (m.rank() < 1) throw InputError("matroid fan needs rank at least 1");
  WeightedFan fan(m.ground_size(), m.dimension());
  Chain chain;
  ExtendFlags(m, m.dimension(), chain, fan);
  return fan;
}

std::vector<FaceStar> CodimOneStars(const WeightedFan& fan) {
  std::map<Chain, std::vector<Filling>> stars;
  for (const auto& [chain, weight] : fan.weights()) {
    for (std::size_t j = 0; j < chain.size(); ++j) {
      Chain face = chain;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
      stars[face].push_back({chain[j], static_cast<int>(j), weight});
    }
  }
  std::vector<FaceStar> out;
  out.reserve(stars.size());
  for (auto& [face, fillings] : stars) {
    out.push_back({face, std::move(fillings)});
  }
  return out;
}

SpanCoefficients ExpressInChain(const std::vector<Integer>& c,
                                const Chain& chain, int ground_size) {
  auto coordinate = [&](int e) -> Integer { return e == 0 ? 0 : c[e - 1]; };
  const Subset ground = FullSet(ground_size);
  SpanCoefficients out;
  std::vector<Integer> layer_values;
  for (std::size_t j = 0; j <= chain.size(); ++j) {
    const Subset outer = j == 0 ? ground : chain[j - 1];
    const Subset inner = j == chain.size() ? 0 : chain[j];
    const std::vector<int> layer = Elements(outer & ~inner);
    const Integer value = coordinate(layer.front());
    for (int e : layer) {
      if (coordinate(e) != value) return out;
    }
    layer_values.push_back(value);
  }
  out.ok = true;
  for (std::size_t j = 1; j < layer_values.size(); ++j) {
    out.coefficients.push_back(layer_values[j] - layer_values[j - 1]);
  }
  return out;
}

std::vector<Integer> StarSum(const FaceStar& star, int ground_size) {
  std::vector<Integer> c(ground_size - 1);
  for (const Filling& filling : star.fillings) {
    const bool has_zero = Contains(filling.link, 0);
    for (int i = 1; i < ground_size; ++i) {
      const int entry = (Contains(filling.link, i) ? 1 : 0) - (has_zero ? 1 : 0);
      if (entry != 0) c[i - 1] += filling.weight * entry;
    }
  }
  return c;
}

BalancingResult CheckBalancing(const WeightedFan& fan) {
  BalancingResult result;
  for (const FaceStar& star : CodimOneStars(fan)) {
    ++result.faces_checked;
    const std::vector<Integer> c = StarSum(star, fan.ground_size());
    if (!ExpressInChain(c, star.face, fan.ground_size()).ok) {
      result.balanced = false;
      result.witness = star.face;
      return result;
    }
  }
  return result;
}

namespace {

RationalVector Combine(const std::vector<RationalVector>& generators,
                       const std::vector<Rational>& coefficients,
                       int coordinate_count) {
  RationalVector point(coordinate_count);
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (coefficients[j] == 0) continue;
    for (int i = 0; i < coordinate_count; ++i) {
      point[i] += coefficients[j] * generators[j][i];
    }
  }
  return point;
}

}  // namespace

bool LinearityGuard(const PLFunction& f, const Chain& chain) {
  const int count = f.coordinate_count();
  const std::size_t l = chain.size();
  std::vector<RationalVector> generators;
  std::vector<Integer> values;
  for (Subset link : chain) {
    generators.push_back(Dehomogenize(link, f.ground_size()));
    values.push_back(f.Value(link));
  }
  auto agrees = [&](const std::vector<Rational>& coefficients) {
    Rational expected = 0;
    for (std::size_t j = 0; j < l; ++j) expected += coefficients[j] * values[j];
    return f.Evaluate(Combine(generators, coefficients, count)) == expected;
  };

  if (l == 0) return f.Evaluate(RationalVector(count)) == 0;
  for (std::size_t a = 0; a < l; ++a) {
    for (std::size_t b = a + 1; b < l; ++b) {
      std::vector<Rational> coefficients(l, 0);
      coefficients[a] = 1;
      coefficients[b] = 1;
      if (!agrees(coefficients)) return false;
    }
  }
  if (!agrees(std::vector<Rational>(l, 1))) return false;

  std::mt19937_64 rng(0x1f2e3d4c5b6a7988ULL);
  std::uniform_int_distribution<int> numerator(1, 16);
  std::uniform_int_distribution<int> denominator(1, 7);
  for (int trial = 0; trial < 16; ++trial) {
    std::vector<Rational> coefficients(l);
    for (auto& c : coefficients) {
      c = Rational(numerator(rng), denominator(rng));
      c.canonicalize();
    }
    if (!agrees(coefficients)) return false;
  }
  return true;
}

WeightedFan Divisor(const PLFunction& f, const WeightedFan& fan,
                    const DivisorOptions& options) {
  if (fan.dimension() == 0) {
    throw InputError("cannot intersect a 0-dimensional fan");
  }
  if (f.ground_size() != fan.ground_size()) {
    throw InputError("function and fan live on different ground sets");
  }
  if (options.check_linearity) {
    for (const auto& [chain, weight] : fan.weights()) {
      if (!LinearityGuard(f, chain)) {
        throw ConsistencyError("function not facet-linear on " +
                               FormatChain(chain));
      }
    }
  }
  WeightedFan out(fan.ground_size(), fan.dimension() - 1);
  for (const FaceStar& star : CodimOneStars(fan)) {
    const std::vector<Integer> c = StarSum(star, fan.ground_size());
    const SpanCoefficients span = ExpressInChain(c, star.face, fan.ground_size());
    if (!span.ok) {
      throw ConsistencyError("input fan not balanced at " +
                             FormatChain(star.face));
    }
    Integer weight = 0;
    for (const Filling& filling : star.fillings) {
      weight += filling.weight * f.Value(filling.link);
    }
    for (std::size_t j = 0; j < star.face.size(); ++j) {
      weight -= span.coefficients[j] * f.Value(star.face[j]);
    }
    out.Add(star.face, weight);
  }
  const BalancingResult balance = CheckBalancing(out);
  if (!balance.balanced) {
    throw ConsistencyError("divisor not balanced at " +
                           FormatChain(balance.witness));
  }
  return out;
}

Integer Degree(const WeightedFan& fan) {
  if (fan.dimension() != 0) {
    throw InputError("degree needs a 0-dimensional fan");
  }
  return fan.Weight({});
}

std::vector<int> GapSequence(const Chain& chain, const Matroid& m) {
  std::vector<int> ranks{m.rank()};
  for (Subset link : chain) {
    if (!m.IsFlat(link)) {
      throw InputError("chain link " + FormatSubset(link) + " is not a flat");
    }
    ranks.push_back(m.Rank(link));
  }
  ranks.push_back(0);
  std::vector<int> gaps;
  for (std::size_t i = 0; i + 1 < ranks.size(); ++i) {
    gaps.push_back(ranks[i] - ranks[i + 1] - 1);
  }
  return gaps;
}

}  // namespace lefschetz
