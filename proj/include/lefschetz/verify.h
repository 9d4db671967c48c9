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

#ifndef LEFSCHETZ_VERIFY_H_
#define LEFSCHETZ_VERIFY_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lefschetz/catalog.h"
#include "lefschetz/framing.h"
#include "lefschetz/intersection.h"

namespace lefschetz {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitConsistency = 3;

struct VerifyOptions {
  bool fast = false;         // skip structural validators
  bool dump_cycles = false;  // keep X_k listings in the report
  bool timing = false;       // record elapsed time (breaks byte-identity)
  bool corrupt_weight = false;
};

struct VerificationReport {
  std::string matroid_id;
  std::vector<int> permutation;
  int n = 0;
  Integer beta_fix;
  Integer intersection_degree;
  Integer lefschetz_sum;
  std::vector<TracePair> traces;
  std::vector<Validation> validations;
  std::vector<std::string> cycle_dumps;  // one block per k
  std::optional<double> elapsed_ms;
  bool verdict = false;

  bool validations_passed() const;
  int exit_code() const;
  nlohmann::json ToJson() const;
  std::string ToText() const;
};

// All three sides of the trace formula for (M, ψ), plus validators unless
// `fast`. Throws InputError for an invalid permutation and
// ConsistencyError when an internal cross-check fails.
VerificationReport Verify(const MatroidSpec& spec,
                          const MatroidAutomorphism& psi,
                          const VerifyOptions& options = {});

// Identities of the Möbius/beta suite on L(M) and Fix(L(M)).
Validation ValidateBetaIdentities(const Matroid& m,
                                  const MatroidAutomorphism& psi);

// Multi-line "<chain> : <weight>  gap (r_0,...)" listing of X_k.
std::string DumpCycle(const WeightedFan& cycle, const Matroid& m);

nlohmann::json IntegerToJson(const Integer& value);

struct BatchOptions {
  std::string out_dir;
  int workers = 1;
  MatroidLimits limits;
  VerifyOptions verify;
};

// Runs every pair of a manifest
//   {"pairs": [{"id": "...", "catalog": "fano" | "matroid": {...},
//               "perm": [...], "fault": "corrupt-weight"}]}
// writing <out_dir>/<id>.json per pair (atomically) and
// <out_dir>/summary.jsonl. Returns 0 iff every pair passes, otherwise the
// largest per-pair exit code.
int RunBatch(const nlohmann::json& manifest, const BatchOptions& options,
             std::ostream& log);

}  // namespace lefschetz

#endif  // LEFSCHETZ_VERIFY_H_
