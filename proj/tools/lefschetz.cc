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

// Command-line front end: verify, catalog, batch, beta, trace, degree,
// resolution.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "lefschetz/catalog.h"
#include "lefschetz/framing.h"
#include "lefschetz/intersection.h"
#include "lefschetz/lattice.h"
#include "lefschetz/verify.h"

namespace {

using lefschetz::InputError;
using lefschetz::Integer;
using lefschetz::IntegerToJson;
using nlohmann::json;

constexpr int kDefaultMaxGroundSize = 21;

struct Inputs {
  std::string catalog;
  std::string matroid_file;
  std::string perm;
  std::string perm_file;
  int max_ground_size = kDefaultMaxGroundSize;
  bool allow_large = false;
  bool json = false;
};

void AddMatroidOptions(CLI::App* command, Inputs& inputs, bool with_perm) {
  command->add_option("--catalog", inputs.catalog,
                      "catalog name, e.g. uniform:2:3, fano, graphic:K4");
  command->add_option("--matroid", inputs.matroid_file,
                      "matroid document (JSON)");
  if (with_perm) {
    command->add_option("--perm", inputs.perm,
                        "permutation in image notation, e.g. 0,2,1");
    command->add_option("--perm-file", inputs.perm_file,
                        "automorphism document {\"perm\": [...]}");
  }
  command->add_option("--max-ground-size", inputs.max_ground_size,
                      "ground set cap (needs --allow-large above 21)");
  command->add_flag("--allow-large", inputs.allow_large,
                    "acknowledge a raised ground set cap");
  command->add_flag("--json", inputs.json, "structured output");
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

lefschetz::MatroidLimits Limits(const Inputs& inputs) {
  if (inputs.max_ground_size > kDefaultMaxGroundSize && !inputs.allow_large) {
    throw InputError("--max-ground-size above " +
                     std::to_string(kDefaultMaxGroundSize) +
                     " requires --allow-large");
  }
  lefschetz::MatroidLimits limits;
  limits.max_ground_size = inputs.max_ground_size;
  return limits;
}

lefschetz::MatroidSpec LoadSpec(const Inputs& inputs) {
  if (inputs.catalog.empty() == inputs.matroid_file.empty()) {
    throw InputError("give exactly one of --catalog and --matroid");
  }
  const lefschetz::MatroidLimits limits = Limits(inputs);
  if (!inputs.catalog.empty()) {
    return lefschetz::CatalogEntry(inputs.catalog, limits);
  }
  return lefschetz::ParseMatroidDocument(ReadJsonFile(inputs.matroid_file),
                                         limits, inputs.matroid_file);
}

lefschetz::MatroidAutomorphism LoadPerm(const Inputs& inputs,
                                        const lefschetz::Matroid& m) {
  if (!inputs.perm.empty() && !inputs.perm_file.empty()) {
    throw InputError("give at most one of --perm and --perm-file");
  }
  if (!inputs.perm_file.empty()) {
    return lefschetz::ParseAutomorphismDocument(ReadJsonFile(inputs.perm_file));
  }
  if (inputs.perm.empty()) {
    return lefschetz::MatroidAutomorphism::Identity(m.ground_size());
  }
  std::string text = inputs.perm;
  if (!text.empty() && text.front() == '[') text = text.substr(1);
  if (!text.empty() && text.back() == ']') text.pop_back();
  std::vector<int> images;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      images.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) {
        throw InputError("");
      }
    } catch (const std::exception&) {
      throw InputError("malformed permutation '" + inputs.perm + "'");
    }
  }
  return lefschetz::MatroidAutomorphism(std::move(images));
}

int RunVerify(const Inputs& inputs, const lefschetz::VerifyOptions& options,
              const std::string& out_path) {
  const lefschetz::MatroidSpec spec = LoadSpec(inputs);
  const auto psi = LoadPerm(inputs, spec.matroid);
  const lefschetz::VerificationReport report =
      lefschetz::Verify(spec, psi, options);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write " + out_path);
    out << report.ToJson().dump(2) << "\n";
  }
  if (inputs.json) {
    std::cout << report.ToJson().dump(2) << "\n";
  } else {
    std::cout << report.ToText();
  }
  return report.exit_code();
}

int RunCatalog(const Inputs& inputs, const std::string& name, bool list) {
  if (list || name.empty()) {
    for (const std::string& pattern : lefschetz::CatalogPatterns()) {
      std::cout << pattern << "\n";
    }
    return lefschetz::kExitOk;
  }
  const lefschetz::MatroidSpec spec =
      lefschetz::CatalogEntry(name, Limits(inputs));
  const lefschetz::Matroid& m = spec.matroid;
  json flat_counts = json::array();
  for (const auto& level : m.flats_by_rank()) flat_counts.push_back(level.size());
  if (inputs.json) {
    std::cout << json{{"id", spec.id},
                      {"document", spec.document},
                      {"ground_size", m.ground_size()},
                      {"rank", m.rank()},
                      {"flats_by_rank", flat_counts},
                      {"example_automorphisms", spec.example_automorphisms}}
                     .dump(2)
              << "\n";
    return lefschetz::kExitOk;
  }
  std::cout << spec.id << ": " << m.ground_size() << " elements, rank "
            << m.rank() << ", flats per rank " << flat_counts.dump() << "\n";
  for (const auto& perm : spec.example_automorphisms) {
    std::cout << "  automorphism " << json(perm).dump() << "\n";
  }
  return lefschetz::kExitOk;
}

int RunBeta(const Inputs& inputs) {
  const lefschetz::MatroidSpec spec = LoadSpec(inputs);
  const auto psi = LoadPerm(inputs, spec.matroid);
  lefschetz::ValidateAutomorphism(spec.matroid, psi);
  const Integer beta = lefschetz::Beta(lefschetz::FlatLattice(spec.matroid));
  const lefschetz::RankedLattice fixed =
      lefschetz::FixedFlatLattice(spec.matroid, psi);
  const Integer beta_fix = lefschetz::Beta(fixed);
  if (inputs.json) {
    std::cout << json{{"matroid", spec.id},
                      {"n", spec.matroid.dimension()},
                      {"beta", IntegerToJson(beta)},
                      {"fixed_flats", fixed.size()},
                      {"beta_fix", IntegerToJson(beta_fix)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "beta(L(M))   " << beta.get_str() << "\n"
              << "fixed flats  " << fixed.size() << "\n"
              << "beta(Fix)    " << beta_fix.get_str() << "\n";
  }
  return lefschetz::kExitOk;
}

int RunTrace(const Inputs& inputs) {
  const lefschetz::MatroidSpec spec = LoadSpec(inputs);
  const auto psi = LoadPerm(inputs, spec.matroid);
  const lefschetz::LefschetzResult result =
      lefschetz::LefschetzSum(spec.matroid, psi);
  if (inputs.json) {
    json traces = json::array();
    for (const auto& t : result.traces) {
      traces.push_back({{"p", t.p},
                        {"trace_linear", IntegerToJson(t.linear)},
                        {"trace_chains", IntegerToJson(t.chains)}});
    }
    std::cout << json{{"matroid", spec.id},
                      {"per_p_traces", traces},
                      {"lefschetz_sum", IntegerToJson(result.sum)}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& t : result.traces) {
      std::cout << "p=" << t.p << "  linear " << t.linear.get_str()
                << "  chains " << t.chains.get_str() << "\n";
    }
    std::cout << "lefschetz sum " << result.sum.get_str() << "\n";
  }
  return lefschetz::kExitOk;
}

int RunDegree(const Inputs& inputs, bool dump) {
  const lefschetz::MatroidSpec spec = LoadSpec(inputs);
  const auto psi = LoadPerm(inputs, spec.matroid);
  const lefschetz::IntersectionRun run =
      lefschetz::ComputeIntersection(spec.matroid, psi);
  if (inputs.json) {
    json out{{"matroid", spec.id}, {"degree", IntegerToJson(run.degree)}};
    if (dump) {
      json cycles = json::array();
      for (const auto& cycle : run.cycles) {
        cycles.push_back(lefschetz::DumpCycle(cycle, spec.matroid));
      }
      out["cycles"] = cycles;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    if (dump) {
      for (std::size_t k = 0; k < run.cycles.size(); ++k) {
        std::cout << "X_" << k << ":\n"
                  << lefschetz::DumpCycle(run.cycles[k], spec.matroid);
      }
    }
    std::cout << "degree " << run.degree.get_str() << "\n";
  }
  return lefschetz::kExitOk;
}

int RunResolution(const Inputs& inputs, int only_p) {
  const lefschetz::MatroidSpec spec = LoadSpec(inputs);
  const int n = spec.matroid.dimension();
  json reports = json::array();
  bool passed = true;
  for (int p = 0; p <= n; ++p) {
    if (only_p >= 0 && p != only_p) continue;
    const lefschetz::ResolutionReport report =
        lefschetz::CheckResolution(spec.matroid, p);
    passed = passed && report.validation.passed();
    if (inputs.json) {
      reports.push_back({{"p", p},
                         {"dimensions", report.dimensions},
                         {"ranks", report.ranks},
                         {"framing_dimension", report.framing_dimension},
                         {"passed", report.validation.passed()},
                         {"violations", report.validation.violations}});
    } else {
      std::cout << "p=" << p << "  dims " << json(report.dimensions).dump()
                << "  ranks " << json(report.ranks).dump() << "  dim F_p "
                << report.framing_dimension << "  "
                << (report.validation.passed() ? "exact" : "NOT EXACT") << "\n";
      for (const auto& violation : report.validation.violations) {
        std::cout << "  " << violation << "\n";
      }
    }
  }
  if (only_p > n) throw InputError("p outside [0, n]");
  if (inputs.json) std::cout << reports.dump(2) << "\n";
  return passed ? lefschetz::kExitOk : lefschetz::kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical Lefschetz trace formula checker"};
  app.require_subcommand(1);

  Inputs inputs;
  lefschetz::VerifyOptions verify_options;
  std::string out_path;
  CLI::App* verify = app.add_subcommand("verify", "all three sides for one pair");
  AddMatroidOptions(verify, inputs, true);
  verify->add_flag("--fast", verify_options.fast, "skip structural validators");
  verify->add_flag("--dump-cycles", verify_options.dump_cycles,
                   "include X_k listings");
  verify->add_flag("--timing", verify_options.timing, "report elapsed time");
  verify->add_option("--out", out_path, "also write the JSON report here");

  std::string catalog_name;
  bool catalog_list = false;
  CLI::App* catalog = app.add_subcommand("catalog", "describe a catalog matroid");
  catalog->add_option("name", catalog_name, "catalog name");
  catalog->add_flag("--list", catalog_list, "list catalog names");
  catalog->add_flag("--json", inputs.json, "structured output");

  std::string manifest_path;
  lefschetz::BatchOptions batch_options;
  batch_options.workers =
      std::max(1u, std::thread::hardware_concurrency());
  CLI::App* batch = app.add_subcommand("batch", "verify a manifest of pairs");
  batch->add_option("manifest", manifest_path, "manifest (JSON)")->required();
  batch->add_option("--out-dir", batch_options.out_dir, "report directory")
      ->required();
  batch->add_option("--workers", batch_options.workers, "parallel workers");
  batch->add_flag("--fast", batch_options.verify.fast,
                  "skip structural validators");
  batch->add_flag("--timing", batch_options.verify.timing,
                  "report elapsed time");
  batch->add_option("--max-ground-size", inputs.max_ground_size,
                    "ground set cap (needs --allow-large above 21)");
  batch->add_flag("--allow-large", inputs.allow_large,
                  "acknowledge a raised ground set cap");

  CLI::App* beta = app.add_subcommand("beta", "beta invariants of L(M) and Fix");
  AddMatroidOptions(beta, inputs, true);

  CLI::App* trace = app.add_subcommand("trace", "framing-group traces");
  AddMatroidOptions(trace, inputs, true);

  bool degree_dump = false;
  CLI::App* degree = app.add_subcommand("degree", "intersection degree");
  AddMatroidOptions(degree, inputs, true);
  degree->add_flag("--dump-cycles", degree_dump, "list every X_k");

  int resolution_p = -1;
  CLI::App* resolution =
      app.add_subcommand("resolution", "exactness of the chain resolution");
  AddMatroidOptions(resolution, inputs, false);
  resolution->add_option("--p", resolution_p, "single degree to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return lefschetz::kExitInputError;
  }

  try {
    if (verify->parsed()) return RunVerify(inputs, verify_options, out_path);
    if (catalog->parsed()) return RunCatalog(inputs, catalog_name, catalog_list);
    if (batch->parsed()) {
      batch_options.limits = Limits(inputs);
      const int code = lefschetz::RunBatch(ReadJsonFile(manifest_path),
                                           batch_options, std::cerr);
      return code;
    }
    if (beta->parsed()) return RunBeta(inputs);
    if (trace->parsed()) return RunTrace(inputs);
    if (degree->parsed()) return RunDegree(inputs, degree_dump);
    if (resolution->parsed()) return RunResolution(inputs, resolution_p);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return lefschetz::kExitInputError;
  } catch (const lefschetz::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return lefschetz::kExitConsistency;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return lefschetz::kExitInputError;
  }
  return lefschetz::kExitInputError;
}
