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


// Acceptance suite. Prints one PASS/FAIL/SKIP line per criterion and exits
// 0 when everything ran and passed, 1 on any failure, 77 when a group was
// skipped because its input is unavailable.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli.h"
#include "dpgraph/errors.h"
#include "dpgraph/experiment.h"
#include "dpgraph/io.h"
#include "dpgraph/mechanisms.h"
#include "dpgraph/oracle.h"
#include "dpgraph/spectra.h"
#include "test_graphs.h"

namespace dpgraph::acceptance {
namespace {

namespace fs = std::filesystem;

// Pinned tolerances.
constexpr double kIdentityRel = 1e-12;
constexpr double kRatioSlack = 1e-12;
constexpr double kAttainAbs = 1e-9;
constexpr double kProductRel = 1e-12;
constexpr double kTvMax = 0.01;
constexpr double kChiAlpha = 0.001;
constexpr double kUtilityMeanRel = 0.01;
constexpr double kErrAt2p5 = 1.713, kErrAt2p5Rel = 0.10;
constexpr double kErrAt6p68 = 0.0278, kErrAt6p68Rel = 0.15;
constexpr double kVarAt2p5 = 0.596, kVarAt2p5Rel = 0.15;
constexpr double kVarianceRatioMin = 10.0;

constexpr int kDatasetNodes = 168;
constexpr std::int64_t kDatasetEdges = 1656;
constexpr int kTrials = 1000;
constexpr std::uint64_t kMasterSeed = 686;

struct Tally {
  int passed = 0;
  int failed = 0;
  int skipped = 0;

  void Report(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "  " << detail << std::endl;
    ++(ok ? passed : failed);
  }
  void Skip(const std::string& name, const std::string& why) {
    std::cout << "SKIP " << name << "  " << why << std::endl;
    ++skipped;
  }
};

std::string Num(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

long double EnumeratedSum(const Graph& g, const PrivacyParams& params) {
  long double sum = 0;
  for (std::uint64_t code = 0; code < NumGraphs(g.num_nodes()); ++code) {
    sum += std::exp(static_cast<long double>(params.epsilon()) *
                    Utility(g, Graph::FromPairMask(g.num_nodes(), code)) /
                    params.adjacency());
  }
  return sum;
}

const std::vector<double> kExactEpsilons = {0.0, 0.5, 1.0, 2.5};

void NormalizationIdentity(Tally& tally) {
  double worst = 0;
  for (int n = 2; n <= 5; ++n) {
    for (double eps : kExactEpsilons) {
      for (int a : {1, 2}) {
        const PrivacyParams params(eps, a);
        const long double closed =
            std::pow(1.0L + std::exp(-static_cast<long double>(eps) / a),
                     static_cast<long double>(NumPairs(n)));
        const double library = NormalizationConstant(n, params);
        for (std::uint64_t code = 0; code < NumGraphs(n); ++code) {
          const long double sum = EnumeratedSum(Graph::FromPairMask(n, code), params);
          worst = std::max(worst, static_cast<double>(std::abs(sum - closed) / closed));
          worst = std::max(worst, static_cast<double>(std::abs(library - closed) / closed));
        }
      }
    }
  }
  tally.Report("normalization_identity", worst <= kIdentityRel,
               "n=2..5 eps={0,0.5,1,2.5} A={1,2} max_rel_err=" + Num(worst) +
                   " tol=" + Num(kIdentityRel));
}

void DpAuditCriterion(Tally& tally) {
  bool bound_ok = true, attained_ok = true;
  double worst_excess = 0, worst_gap = 0;
  for (int n : {3, 4}) {
    for (int a : {1, 2}) {
      for (double eps : {0.0, 1.0, 2.5}) {
        const PrivacyParams params(eps, a);
        const DpAudit audit = AuditDpRatio(n, params);
        const double bound = std::exp(eps);
        // Direct recomputation of the witness ratio from utilities.
        const double direct = std::exp(
            eps * (Utility(audit.witness_g, audit.witness_h) -
                   Utility(audit.witness_g_prime, audit.witness_h)) / a);
        worst_excess = std::max(worst_excess, audit.max_ratio / bound - 1);
        bound_ok = bound_ok && audit.max_ratio <= bound * (1 + kRatioSlack) &&
                   direct <= bound * (1 + kRatioSlack) &&
                   IsAdjacent(audit.witness_g, audit.witness_g_prime, a);
        const double gap = std::abs(audit.max_ratio_at_distance_a - bound);
        worst_gap = std::max(worst_gap, gap);
        attained_ok = attained_ok && gap <= kAttainAbs;
      }
    }
  }
  tally.Report("dp_ratio_bound", bound_ok,
               "n={3,4} A={1,2} eps={0,1,2.5} max(ratio/e^eps - 1)=" +
                   Num(worst_excess) + " slack=" + Num(kRatioSlack));
  tally.Report("dp_ratio_attained", attained_ok,
               "max |ratio_at_distance_A - e^eps|=" + Num(worst_gap) +
                   " tol=" + Num(kAttainAbs));
}

void ProductFormExact(Tally& tally) {
  double worst = 0;
  for (int n = 2; n <= 5; ++n) {
    for (double eps : kExactEpsilons) {
      for (int a : {1, 2}) {
        const PrivacyParams params(eps, a);
        const FlipProbability p = ComputeFlipProbability(params);
        const double c = NormalizationConstant(n, params);
        for (std::uint64_t gc = 0; gc < NumGraphs(n); ++gc) {
          const Graph g = Graph::FromPairMask(n, gc);
          for (std::uint64_t hc = 0; hc < NumGraphs(n); ++hc) {
            const Graph h = Graph::FromPairMask(n, hc);
            const double exp_form = std::exp(eps * Utility(g, h) / a) / c;
            const double product = EdgewiseOutputProbability(g, h, p);
            worst = std::max(worst, std::abs(product - exp_form) / exp_form);
          }
        }
      }
    }
  }
  tally.Report("product_form_exact", worst <= kProductRel,
               "n=2..5 all (g,h) max_rel_err=" + Num(worst) + " tol=" + Num(kProductRel));
}

void ProductFormSampled(Tally& tally) {
  const Graph g = testing::FourCycle();
  const PrivacyParams params(1.0, 1);
  const ExactDistribution exact = ComputeExactDistribution(g, params);
  const FlipProbability p = ComputeFlipProbability(params);
  Engine engine(DeriveSeed(kMasterSeed, {4, 1}));
  std::vector<std::int64_t> counts(NumGraphs(4), 0);
  const int draws = 1'000'000;
  for (int i = 0; i < draws; ++i) {
    ++counts[SamplePrivateGraph(g, p, engine).PairMask()];
  }
  const double tv = EmpiricalTvDistance(exact, counts);
  const ChiSquareResult chi = ChiSquareGoodnessOfFit(exact, counts);
  tally.Report("product_form_sampled_tv", tv < kTvMax,
               "n=4 eps=1 A=1 draws=1e6 tv=" + Num(tv) + " max=" + Num(kTvMax));
  tally.Report("product_form_sampled_chi_square", chi.p_value >= kChiAlpha,
               "stat=" + Num(chi.statistic) + " df=" +
                   std::to_string(chi.degrees_of_freedom) + " p=" +
                   Num(chi.p_value) + " alpha=" + Num(kChiAlpha));
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

bool RunCli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::Run(args, out, err);
  if (code != cli::kExitOk) std::cerr << err.str();
  return code == cli::kExitOk;
}

void Determinism(Tally& tally, const fs::path& input, const fs::path& workdir,
                 int trials, const std::string& name) {
  const fs::path a = workdir / (name + "_run_a.csv");
  const fs::path b = workdir / (name + "_run_b.csv");
  auto args = [&](const fs::path& out) {
    return std::vector<std::string>{"experiment", input.string(), "--trials",
                                    std::to_string(trials), "--seed",
                                    std::to_string(kMasterSeed), "--out",
                                    out.string()};
  };
  const bool ran = RunCli(args(a)) && RunCli(args(b));
  const std::string first = Slurp(a);
  const bool same = ran && !first.empty() && first == Slurp(b);
  tally.Report(name, same,
               input.filename().string() + " trials=" + std::to_string(trials) +
                   " bytes=" + std::to_string(first.size()));
}

void ExactGroup(Tally& tally, const fs::path& workdir) {
  NormalizationIdentity(tally);
  DpAuditCriterion(tally);
  ProductFormExact(tally);
  ProductFormSampled(tally);
  Determinism(tally, fs::path(DPGRAPH_TEST_DATA_DIR) / "connected30.edges",
              workdir, 50, "determinism");
}

const std::vector<std::string> kDatasetCriteria = {
    "dataset_shape", "utility_class_law", "reproduction_error_eps_2.505",
    "reproduction_error_eps_6.68", "reproduction_error_decreasing",
    "reproduction_variance_eps_2.505", "baseline_variance_ratio",
    "baseline_error_eps_2.505", "determinism_dataset"};

void DatasetGroup(Tally& tally, const fs::path& dataset, const fs::path& workdir) {
  if (dataset.empty() || !fs::exists(dataset)) {
    for (const auto& name : kDatasetCriteria) {
      tally.Skip(name, "dataset not found at '" + dataset.string() +
                           "' (set DPGRAPH_FACEBOOK_EDGES)");
    }
    return;
  }

  LabeledGraph g;
  try {
    g = ReadEdgeListFile(dataset, {kDatasetNodes, kDatasetEdges});
  } catch (const Error& e) {
    tally.Report("dataset_shape", false, e.what());
    return;
  }
  tally.Report("dataset_shape", true, "n=168 |E|=1656");

  {
    const PrivacyParams params(2.5, 1);
    const FlipProbability p = ComputeFlipProbability(params);
    const double expected = static_cast<double>(g.graph.num_pairs()) * p.flip;
    Engine engine(DeriveSeed(kMasterSeed, {168, 25}));
    UtilityClassHistogram hist(g.graph);
    for (int i = 0; i < 10000; ++i) hist.Add(SamplePrivateGraph(g.graph, p, engine));
    const double rel = std::abs(hist.Mean() - expected) / expected;
    tally.Report("utility_class_law", rel <= kUtilityMeanRel,
                 "eps=2.5 draws=1e4 mean=" + Num(hist.Mean()) + " expected=" +
                     Num(expected) + " rel=" + Num(rel));
  }

  ExperimentConfig config;
  config.trials = kTrials;
  config.master_seed = kMasterSeed;
  config.output_path = (workdir / "facebook686_results.csv").string();
  const ExperimentResult result = RunExperiment(g.graph, config);
  {
    std::ostringstream detail, summary;
    WriteResults(result.records, detail);
    WriteSummary(result.summary, summary);
    WriteTextFile(config.output_path, detail.str());
    WriteTextFile(config.ResolvedSummaryPath(), summary.str());
    std::cout << summary.str();
  }

  std::vector<const SummaryRow*> m2, bl;
  for (const auto& row : result.summary) {
    (row.mechanism == Mechanism::kModifiedEr ? m2 : bl).push_back(&row);
  }
  const std::size_t k2505 = 2, k668 = 7;
  const double err2505 = m2[k2505]->mean_of_mean_rel_err;
  const double err668 = m2[k668]->mean_of_mean_rel_err;
  tally.Report("reproduction_error_eps_2.505",
               std::abs(err2505 - kErrAt2p5) <= kErrAt2p5Rel * kErrAt2p5,
               "err=" + Num(err2505) + " target=" + Num(kErrAt2p5) + " +/-10%");
  tally.Report("reproduction_error_eps_6.68",
               std::abs(err668 - kErrAt6p68) <= kErrAt6p68Rel * kErrAt6p68,
               "err=" + Num(err668) + " target=" + Num(kErrAt6p68) + " +/-15%");
  bool decreasing = true;
  for (std::size_t i = 0; i + 1 < m2.size(); ++i) {
    decreasing = decreasing && m2[i + 1]->mean_of_mean_rel_err < m2[i]->mean_of_mean_rel_err;
  }
  tally.Report("reproduction_error_decreasing", decreasing, "8-point grid");
  const double var2505 = m2[k2505]->mean_variance.value_or(NAN);
  tally.Report("reproduction_variance_eps_2.505",
               std::abs(var2505 - kVarAt2p5) <= kVarAt2p5Rel * kVarAt2p5,
               "var=" + Num(var2505) + " target=" + Num(kVarAt2p5) + " +/-15%");

  double min_ratio = INFINITY;
  for (std::size_t i = 0; i < m2.size(); ++i) {
    min_ratio = std::min(min_ratio, bl[i]->mean_variance.value_or(NAN) /
                                        m2[i]->mean_variance.value_or(NAN));
  }
  tally.Report("baseline_variance_ratio", min_ratio >= kVarianceRatioMin,
               "min over grid of var_baseline/var_m2=" + Num(min_ratio) +
                   " min=" + Num(kVarianceRatioMin));
  const double bl2505 = bl[k2505]->mean_of_mean_rel_err;
  tally.Report("baseline_error_eps_2.505", err2505 < bl2505,
               "m2=" + Num(err2505) + " baseline=" + Num(bl2505) + " reduction=" +
                   Num(100 * (1 - err2505 / bl2505)) + "%");

  Determinism(tally, dataset, workdir, 20, "determinism_dataset");
}

int Main(int argc, char** argv) {
  CLI::App app{"dpgraph acceptance suite"};
  std::string group = "all";
  std::string dataset;
  std::string workdir = "acceptance_work";
  app.add_option("--group", group)->check(CLI::IsMember({"exact", "dataset", "all"}));
  app.add_option("--dataset", dataset, "Facebook ego network 686 edge list");
  app.add_option("--workdir", workdir);
  CLI11_PARSE(app, argc, argv);

  fs::create_directories(workdir);
  Tally tally;
  try {
    if (group != "dataset") ExactGroup(tally, workdir);
    if (group != "exact") DatasetGroup(tally, dataset, workdir);
  } catch (const std::exception& e) {
    std::cout << "FAIL aborted  " << e.what() << std::endl;
    ++tally.failed;
  }
  std::cout << tally.passed << " passed, " << tally.failed << " failed, "
            << tally.skipped << " skipped" << std::endl;
  if (tally.failed > 0) return 1;
  if (tally.skipped > 0) return 77;
  return 0;
}

}  // namespace
}  // namespace dpgraph::acceptance

int main(int argc, char** argv) { return dpgraph::acceptance::Main(argc, argv); }
