//
// Copyright 2026 The dpgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//


#include "cli.h"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "dpgraph/errors.h"
#include "dpgraph/experiment.h"
#include "dpgraph/io.h"
#include "dpgraph/mechanisms.h"
#include "dpgraph/spectra.h"
#include "dpgraph/verify.h"

namespace dpgraph::cli {
namespace {

struct GraphInput {
  std::string path;
  std::optional<int> expect_nodes;
  std::optional<std::int64_t> expect_edges;

  LabeledGraph Load() const {
    return ReadEdgeListFile(path, {expect_nodes, expect_edges});
  }
};

void AddGraphInput(CLI::App* cmd, GraphInput& input) {
  cmd->add_option("input,--input", input.path, "Edge-list file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--expect-nodes", input.expect_nodes,
                  "Fail unless the graph has exactly this many nodes");
  cmd->add_option("--expect-edges", input.expect_edges,
                  "Fail unless the graph has exactly this many edges");
}

// "-" means the caller's output stream.
void Emit(const std::string& path, const std::string& contents,
          std::ostream& out) {
  if (path == "-") {
    out << contents;
  } else {
    WriteTextFile(path, contents);
  }
}

struct PrivatizeArgs {
  GraphInput input;
  double epsilon = 0.0;
  int adjacency = 1;
  std::uint64_t seed = 0;
  std::string out_path;
};

int RunPrivatize(const PrivatizeArgs& args, std::ostream& out,
                 std::ostream& err) {
  const LabeledGraph sensitive = args.input.Load();
  const PrivacyParams params(args.epsilon, args.adjacency);
  const Graph released = SamplePrivateGraph(sensitive.graph, params, args.seed);

  std::ostringstream text;
  WriteGraph({released, sensitive.labels}, text);
  Emit(args.out_path, text.str(), out);

  const FlipProbability p = ComputeFlipProbability(params);
  err << fmt::format("p={:.17g} realized_edge_distance={}\n", p.keep,
                     EdgeDistance(sensitive.graph, released));
  return kExitOk;
}

struct SpectrumArgs {
  GraphInput input;
  std::string out_path;
};

int RunSpectrum(const SpectrumArgs& args, std::ostream& out) {
  const LabeledGraph g = args.input.Load();
  std::ostringstream text;
  WriteSpectrum(LaplacianSpectrum(g.graph), text);
  Emit(args.out_path, text.str(), out);
  return kExitOk;
}

struct ExperimentArgs {
  std::string config_path;
  std::string input;
  std::vector<double> epsilons;
  int adjacency = 1;
  int trials = 1000;
  std::uint64_t seed = 0;
  std::vector<std::string> mechanisms;
  std::string out_path;
  std::string summary_path;
  std::optional<int> expect_nodes;
  std::optional<std::int64_t> expect_edges;
  double baseline_sensitivity = 0.0;
  double baseline_lower = 0.0;
  double baseline_upper = 0.0;
  int threads = 0;
};

// File first, then every flag the user actually passed.
ExperimentConfig BuildConfig(const ExperimentArgs& args, const CLI::App& cmd) {
  ExperimentConfig config;
  if (!args.config_path.empty()) {
    std::ifstream in(args.config_path);
    if (!in) throw IoError("cannot open config " + args.config_path);
    nlohmann::json json;
    try {
      in >> json;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("config is not valid JSON: ") + e.what(), 0);
    }
    config.MergeJson(json);
  }
  auto given = [&](const char* flag) { return cmd.count(flag) > 0; };
  if (given("--input")) config.dataset_path = args.input;
  if (given("--epsilon")) config.epsilons = args.epsilons;
  if (given("--adjacency")) config.adjacency = args.adjacency;
  if (given("--trials")) config.trials = args.trials;
  if (given("--seed")) config.master_seed = args.seed;
  if (given("--mechanisms")) {
    config.mechanisms.clear();
    for (const auto& tag : args.mechanisms) {
      config.mechanisms.push_back(ParseMechanism(tag));
    }
  }
  if (given("--out")) config.output_path = args.out_path;
  if (given("--summary-out")) config.summary_path = args.summary_path;
  if (given("--expect-nodes")) config.expect_nodes = args.expect_nodes;
  if (given("--expect-edges")) config.expect_edges = args.expect_edges;
  if (given("--baseline-sensitivity")) {
    config.baseline.sensitivity = args.baseline_sensitivity;
  }
  if (given("--baseline-lower")) config.baseline.lower = args.baseline_lower;
  if (given("--baseline-upper")) config.baseline.upper = args.baseline_upper;
  if (given("--threads")) config.threads = args.threads;
  if (config.dataset_path.empty()) {
    throw DomainError("no dataset: pass --input or set \"dataset\" in --config");
  }
  return config;
}

int RunExperimentCommand(const ExperimentConfig& config, std::ostream& out) {
  config.Validate();
  const LabeledGraph g = ReadEdgeListFile(
      config.dataset_path, {config.expect_nodes, config.expect_edges});
  const ExperimentResult result = RunExperiment(g.graph, config);

  std::ostringstream detail;
  WriteResults(result.records, detail);
  WriteTextFile(config.output_path, detail.str());
  std::ostringstream summary;
  WriteSummary(result.summary, summary);
  WriteTextFile(config.ResolvedSummaryPath(), summary.str());

  out << fmt::format("graph: n={} |E|={}  trials={}  seed={}\n",
                     g.graph.num_nodes(), g.graph.num_edges(), config.trials,
                     config.master_seed);
  out << summary.str();
  if (config.trials < 2) {
    out << "note: mean_variance needs at least 2 trials and is reported as NA\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  VerifyOptions options;
  std::string out_path = "-";
};

int RunVerify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const VerificationReport report = RunVerification(args.options);
  Emit(args.out_path, report.ToJson().dump(2) + "\n", out);
  int failed = 0;
  for (const auto& c : report.checks) {
    if (!c.passed) {
      ++failed;
      err << fmt::format("FAIL {} eps={} A={} achieved={:.6g} threshold={:.6g}\n",
                         c.name, c.epsilon, c.adjacency, c.achieved,
                         c.threshold);
    }
  }
  err << fmt::format("{} of {} checks passed\n", report.checks.size() - failed,
                     report.checks.size());
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Differentially private graph synthesis and verification"};
  app.name("dpgraph");
  app.require_subcommand(1);

  PrivatizeArgs privatize;
  auto* privatize_cmd =
      app.add_subcommand("privatize", "Release a private copy of a graph");
  AddGraphInput(privatize_cmd, privatize.input);
  privatize_cmd->add_option("--epsilon", privatize.epsilon, "Privacy budget")
      ->required()
      ->check(CLI::NonNegativeNumber);
  privatize_cmd->add_option("--adjacency", privatize.adjacency,
                            "Adjacency parameter A")
      ->check(CLI::PositiveNumber);
  privatize_cmd->add_option("--seed", privatize.seed, "Sampler seed");
  privatize_cmd->add_option("--out", privatize.out_path,
                            "Output edge list ('-' for stdout)")
      ->required();

  SpectrumArgs spectrum;
  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "Write a graph's Laplacian spectrum");
  AddGraphInput(spectrum_cmd, spectrum.input);
  spectrum_cmd->add_option("--out", spectrum.out_path,
                           "Output CSV ('-' for stdout)")
      ->required();

  ExperimentArgs experiment;
  auto* experiment_cmd = app.add_subcommand(
      "experiment", "Spectral accuracy sweep over an epsilon grid");
  experiment_cmd->add_option("--config", experiment.config_path,
                             "Flat JSON config; flags override it")
      ->check(CLI::ExistingFile);
  experiment_cmd->add_option("input,--input", experiment.input, "Edge-list file");
  experiment_cmd->add_option("--epsilon", experiment.epsilons,
                             "Epsilon grid (comma separated)")
      ->delimiter(',');
  experiment_cmd->add_option("--adjacency", experiment.adjacency);
  experiment_cmd->add_option("--trials", experiment.trials, "Trials M per epsilon");
  experiment_cmd->add_option("--seed", experiment.seed, "Master seed");
  experiment_cmd->add_option("--mechanisms", experiment.mechanisms,
                             "modified-er,bounded-laplace")
      ->delimiter(',');
  experiment_cmd->add_option("--out", experiment.out_path, "Per-trial CSV");
  experiment_cmd->add_option("--summary-out", experiment.summary_path,
                             "Summary CSV");
  experiment_cmd->add_option("--expect-nodes", experiment.expect_nodes);
  experiment_cmd->add_option("--expect-edges", experiment.expect_edges);
  experiment_cmd->add_option("--baseline-sensitivity",
                             experiment.baseline_sensitivity);
  experiment_cmd->add_option("--baseline-lower", experiment.baseline_lower);
  experiment_cmd->add_option("--baseline-upper", experiment.baseline_upper);
  experiment_cmd->add_option("--threads", experiment.threads,
                             "Worker threads (0 = all cores)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Exhaustive privacy and equivalence checks on small graphs");
  verify_cmd->add_option("--nodes,-n", verify.options.n, "Node count")
      ->check(CLI::Range(1, 7));
  verify_cmd->add_option("--epsilon", verify.options.epsilons,
                         "Epsilon grid (comma separated)")
      ->delimiter(',');
  verify_cmd->add_option("--adjacency", verify.options.adjacencies,
                         "Adjacency grid (comma separated)")
      ->delimiter(',');
  verify_cmd->add_option("--seed", verify.options.seed);
  verify_cmd->add_option("--samples", verify.options.samples,
                         "Sampler draws per grid point (0 skips)");
  verify_cmd->add_option("--out", verify.out_path,
                         "JSON report ('-' for stdout)");
  verify_cmd->add_flag("--allow-large", verify.options.enumeration.allow_large,
                       "Permit n = 7");
  verify_cmd->add_option("--perturb-p", verify.options.keep_probability_offset)
      ->group("");

  std::vector<const char*> argv{"dpgraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (privatize_cmd->parsed()) return RunPrivatize(privatize, out, err);
    if (spectrum_cmd->parsed()) return RunSpectrum(spectrum, out);
    if (experiment_cmd->parsed()) {
      return RunExperimentCommand(BuildConfig(experiment, *experiment_cmd), out);
    }
    if (verify_cmd->parsed()) return RunVerify(verify, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace dpgraph::cli
