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

#include "lefschetz/verify.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "lefschetz/lattice.h"

namespace lefschetz {

using nlohmann::json;

json IntegerToJson(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

bool VerificationReport::validations_passed() const {
  return std::all_of(validations.begin(), validations.end(),
                     [](const Validation& v) { return v.passed(); });
}

int VerificationReport::exit_code() const {
  return verdict && validations_passed() ? kExitOk : kExitViolation;
}

json VerificationReport::ToJson() const {
  json out;
  out["matroid"] = matroid_id;
  out["permutation"] = permutation;
  out["n"] = n;
  out["beta_fix"] = IntegerToJson(beta_fix);
  out["intersection_degree"] = IntegerToJson(intersection_degree);
  out["lefschetz_sum"] = IntegerToJson(lefschetz_sum);
  json traces_json = json::array();
  for (const TracePair& t : traces) {
    traces_json.push_back({{"p", t.p},
                           {"trace_linear", IntegerToJson(t.linear)},
                           {"trace_chains", IntegerToJson(t.chains)}});
  }
  out["per_p_traces"] = traces_json;
  json validations_json = json::array();
  for (const Validation& v : validations) {
    validations_json.push_back({{"name", v.name},
                                {"passed", v.passed()},
                                {"checked", v.checked},
                                {"violation_count", v.violation_count},
                                {"violations", v.violations}});
  }
  out["structural_validations"] = validations_json;
  if (!cycle_dumps.empty()) out["cycles"] = cycle_dumps;
  if (elapsed_ms) out["elapsed_ms"] = *elapsed_ms;
  out["verdict"] = verdict;
  return out;
}

std::string VerificationReport::ToText() const {
  std::ostringstream out;
  out << "matroid             " << matroid_id << "\n";
  out << "permutation         [";
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    out << (i ? "," : "") << permutation[i];
  }
  out << "]\n";
  out << "n                   " << n << "\n";
  out << "beta(Fix)           " << beta_fix.get_str() << "\n";
  out << "(-1)^n beta(Fix)    " << Integer(SignOf(n) * beta_fix).get_str()
      << "\n";
  out << "intersection degree " << intersection_degree.get_str() << "\n";
  out << "lefschetz sum       " << lefschetz_sum.get_str() << "\n";
  for (const TracePair& t : traces) {
    out << "  trace p=" << t.p << "  linear " << t.linear.get_str()
        << "  chains " << t.chains.get_str() << "\n";
  }
  for (const Validation& v : validations) {
    out << "  check " << v.name << ": " << (v.passed() ? "ok" : "FAILED")
        << " (" << v.checked << " checked)\n";
    for (const std::string& violation : v.violations) {
      out << "    " << violation << "\n";
    }
  }
  for (std::size_t k = 0; k < cycle_dumps.size(); ++k) {
    out << "X_" << k << ":\n" << cycle_dumps[k];
  }
  if (elapsed_ms) out << "elapsed_ms          " << *elapsed_ms << "\n";
  out << "verdict             " << (verdict ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string DumpCycle(const WeightedFan& cycle, const Matroid& m) {
  std::ostringstream out;
  for (const auto& [chain, weight] : cycle.weights()) {
    out << FormatChain(chain) << " : " << weight.get_str();
    if (std::all_of(chain.begin(), chain.end(),
                    [&m](Subset s) { return m.IsFlat(s); })) {
      const std::vector<int> gaps = GapSequence(chain, m);
      out << "  gap (";
      for (std::size_t i = 0; i < gaps.size(); ++i) {
        out << (i ? "," : "") << gaps[i];
      }
      out << ")";
    }
    out << "\n";
  }
  return out.str();
}

Validation ValidateBetaIdentities(const Matroid& m,
                                  const MatroidAutomorphism& psi) {
  Validation v;
  v.name = "beta_identities";
  const RankedLattice lattice = FlatLattice(m);
  const RankedLattice fixed = FixedFlatLattice(m, psi);

  for (const RankedLattice* l : {&lattice, &fixed}) {
    const std::string which = l == &lattice ? "L(M)" : "Fix(L(M))";
    ++v.checked;
    if (!CheckMobiusInversion(*l)) v.Fail("Möbius inversion fails on " + which);
    for (std::size_t g = 0; g < l->size(); ++g) {
      ++v.checked;
      if (!CheckRecursiveBeta(*l, static_cast<int>(g))) {
        v.Fail("recursive beta identity fails on " + which + " at " +
               FormatSubset(l->labels()[g]));
      }
    }
    if (l->size() <= 40) {
      for (std::size_t a = 0; a < l->size(); ++a) {
        for (std::size_t b = 0; b < l->size(); ++b) {
          if (!l->Less(static_cast<int>(a), static_cast<int>(b))) continue;
          ++v.checked;
          if (l->Mobius(static_cast<int>(a), static_cast<int>(b)) !=
              l->MobiusViaChains(static_cast<int>(a), static_cast<int>(b))) {
            v.Fail("Möbius routes disagree on " + which);
          }
        }
      }
    }
  }

  std::vector<int> embedding;
  for (Subset f : fixed.labels()) embedding.push_back(lattice.IndexOf(f));
  std::vector<int> closure;
  for (Subset f : lattice.labels()) {
    closure.push_back(fixed.IndexOf(PsiClosure(m, psi, f)));
  }
  ++v.checked;
  if (!SublatticeMobiusCheck(lattice, fixed, embedding, closure)) {
    v.Fail("sublattice Möbius identities fail");
  }

  // β of an upper interval of Fix against the contracted fixed lattice.
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    const Subset f = fixed.labels()[i];
    if (f == m.ground_set()) continue;
    ++v.checked;
    const Contraction c = Contract(m, f);
    const Integer contracted =
        Beta(FixedFlatLattice(c.matroid, InducedOnContraction(c, psi)));
    if (BetaInterval(fixed, static_cast<int>(i)) != contracted) {
      v.Fail("β(Fix([F,E])) ≠ β(Fix(M/F)) at " + FormatSubset(f));
    }
  }
  return v;
}

VerificationReport Verify(const MatroidSpec& spec,
                          const MatroidAutomorphism& psi,
                          const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Matroid& m = spec.matroid;
  ValidateAutomorphism(m, psi);

  VerificationReport report;
  report.matroid_id = spec.id;
  report.permutation = psi.images();
  report.n = m.dimension();
  report.beta_fix = Beta(FixedFlatLattice(m, psi));

  IntersectionOptions intersection_options;
  intersection_options.corrupt_weight = options.corrupt_weight;
  const IntersectionRun run = ComputeIntersection(m, psi, intersection_options);
  report.intersection_degree = run.degree;

  const LefschetzResult lefschetz = LefschetzSum(m, psi);
  report.lefschetz_sum = lefschetz.sum;
  report.traces = lefschetz.traces;

  if (!options.fast) {
    report.validations.push_back(ValidateCycleBalancing(run));
    report.validations.push_back(ValidateXkStructure(run));
    report.validations.push_back(ValidateFacetWeights(run));
    report.validations.push_back(ValidateWeightTable(run));
    report.validations.push_back(CompareFValueRoutes(run));
    Validation resolution;
    resolution.name = "resolution";
    for (int p = 0; p <= report.n; ++p) {
      resolution.Merge(CheckResolution(m, p).validation);
    }
    report.validations.push_back(std::move(resolution));
    Validation hyperplane;
    hyperplane.name = "framing_hyperplane";
    for (int p = 0; p < report.n; ++p) {
      ++hyperplane.checked;
      if (!FramingHyperplaneCheck(m, p)) {
        hyperplane.Fail("rank-restricted chains do not span F_" +
                        std::to_string(p));
      }
    }
    report.validations.push_back(std::move(hyperplane));
    report.validations.push_back(ValidateBetaIdentities(m, psi));
  }
  if (options.dump_cycles) {
    for (const WeightedFan& cycle : run.cycles) {
      report.cycle_dumps.push_back(DumpCycle(cycle, m));
    }
  }

  const Integer signed_beta = SignOf(report.n) * report.beta_fix;
  report.verdict = report.intersection_degree == signed_beta &&
                   report.intersection_degree == report.lefschetz_sum;
  if (options.timing) {
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  }
  return report;
}

namespace {

struct PairOutcome {
  json summary;
  int exit_code = kExitOk;
};

bool IsSafeId(const std::string& id) {
  if (id.empty() || id == "." || id == ".." || id == "summary") return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
           c == '_' || c == '.';
  });
}

void WriteAtomically(const std::filesystem::path& path,
                     const std::string& contents) {
  const std::filesystem::path temporary = path.string() + ".tmp";
  {
    std::ofstream out(temporary, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + temporary.string());
    out << contents;
    if (!out) throw InputError("cannot write " + temporary.string());
  }
  std::filesystem::rename(temporary, path);
}

PairOutcome RunPair(const json& pair, const std::string& id,
                    const BatchOptions& options) {
  PairOutcome outcome;
  json report;
  try {
    MatroidSpec spec = [&]() {
      if (pair.contains("catalog")) {
        if (!pair["catalog"].is_string()) {
          throw InputError("'catalog' must be a string");
        }
        return CatalogEntry(pair["catalog"].get<std::string>(), options.limits);
      }
      if (pair.contains("matroid")) {
        return ParseMatroidDocument(pair["matroid"], options.limits);
      }
      throw InputError("pair needs 'catalog' or 'matroid'");
    }();
    const MatroidAutomorphism psi =
        pair.contains("perm")
            ? ParseAutomorphismDocument(json{{"perm", pair["perm"]}})
            : MatroidAutomorphism::Identity(spec.matroid.ground_size());
    VerifyOptions verify = options.verify;
    if (pair.contains("fault")) {
      if (pair["fault"] != "corrupt-weight") {
        throw InputError("unknown fault " + pair["fault"].dump());
      }
      verify.corrupt_weight = true;
    }
    const VerificationReport result = Verify(spec, psi, verify);
    report = result.ToJson();
    outcome.exit_code = result.exit_code();
    outcome.summary = {{"id", id},
                       {"status", outcome.exit_code == kExitOk ? "pass" : "fail"},
                       {"verdict", result.verdict},
                       {"intersection_degree",
                        IntegerToJson(result.intersection_degree)},
                       {"exit_code", outcome.exit_code}};
  } catch (const InputError& e) {
    outcome.exit_code = kExitInputError;
    report = {{"error", e.what()}};
    outcome.summary = {{"id", id},
                       {"status", "input-error"},
                       {"error", e.what()},
                       {"exit_code", outcome.exit_code}};
  } catch (const ConsistencyError& e) {
    outcome.exit_code = kExitConsistency;
    report = {{"error", e.what()}};
    outcome.summary = {{"id", id},
                       {"status", "consistency-error"},
                       {"error", e.what()},
                       {"exit_code", outcome.exit_code}};
  }
  report["id"] = id;
  report["status"] = outcome.summary["status"];
  WriteAtomically(std::filesystem::path(options.out_dir) / (id + ".json"),
                  report.dump(2) + "\n");
  return outcome;
}

}  // namespace

int RunBatch(const json& manifest, const BatchOptions& options,
             std::ostream& log) {
  if (!manifest.is_object() || !manifest.contains("pairs") ||
      !manifest["pairs"].is_array()) {
    throw InputError("manifest needs a 'pairs' array");
  }
  const json& pairs = manifest["pairs"];
  std::vector<std::string> ids;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::string id = "pair" + std::to_string(i);
    if (pairs[i].contains("id")) {
      if (!pairs[i]["id"].is_string()) throw InputError("ids must be strings");
      id = pairs[i]["id"].get<std::string>();
    }
    if (!IsSafeId(id)) throw InputError("unusable pair id '" + id + "'");
    if (!seen.insert(id).second) throw InputError("duplicate pair id '" + id + "'");
    ids.push_back(id);
  }
  std::filesystem::create_directories(options.out_dir);

  std::vector<PairOutcome> outcomes(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      try {
        outcomes[i] = RunPair(pairs[i], ids[i], options);
      } catch (const std::exception& e) {
        outcomes[i].exit_code = kExitInputError;
        outcomes[i].summary = {{"id", ids[i]},
                               {"status", "input-error"},
                               {"error", e.what()},
                               {"exit_code", kExitInputError}};
      }
    }
  };
  const int workers = std::max(1, std::min<int>(options.workers,
                                                static_cast<int>(pairs.size())));
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();

  std::string summary;
  int exit_code = kExitOk;
  for (const PairOutcome& outcome : outcomes) {
    summary += outcome.summary.dump() + "\n";
    exit_code = std::max(exit_code, outcome.exit_code);
    log << outcome.summary["id"].get<std::string>() << " "
        << outcome.summary["status"].get<std::string>() << "\n";
  }
  WriteAtomically(std::filesystem::path(options.out_dir) / "summary.jsonl",
                  summary);
  return exit_code;
}

}  // namespace lefschetz
