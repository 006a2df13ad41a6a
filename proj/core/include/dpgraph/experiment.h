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


#ifndef DPGRAPH_EXPERIMENT_H_
#define DPGRAPH_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dpgraph/bounded_laplace.h"
#include "dpgraph/graph.h"
#include "dpgraph/io.h"

namespace dpgraph {

// epsilon_l = 0.835 * l for l = 1..8.
std::vector<double> DefaultEpsilonGrid();

// Spectral accuracy sweep: for every mechanism and epsilon, release M private
// spectra of one sensitive graph and measure their error.
struct ExperimentConfig {
  std::string dataset_path;
  std::vector<double> epsilons = DefaultEpsilonGrid();
  int adjacency = 1;
  int trials = 1000;
  std::uint64_t master_seed = 686;
  std::vector<Mechanism> mechanisms = {Mechanism::kModifiedEr,
                                       Mechanism::kBoundedLaplace};
  BaselineSettings baseline;
  std::string output_path = "results.csv";
  // Defaults to output_path with "_summary" inserted before the extension.
  std::string summary_path;
  std::optional<int> expect_nodes;
  std::optional<std::int64_t> expect_edges;
  // Worker threads; 0 picks std::thread::hardware_concurrency().
  int threads = 0;

  // Throws DomainError unless trials >= 1, the grid is nonempty and every
  // epsilon is finite and > 0, and at least one mechanism is selected.
  void Validate() const;

  std::string ResolvedSummaryPath() const;

  // Overlays the fields present in a flat JSON object onto `*this`. Keys:
  // dataset, epsilons, adjacency, trials, seed, mechanisms,
  // baseline_sensitivity, baseline_lower, baseline_upper, out, summary_out,
  // expect_nodes, expect_edges, threads. Unknown keys are a DomainError.
  void MergeJson(const nlohmann::json& json);
};

// Seed of one trial. Depends only on its own coordinates, so adding
// mechanisms or grid points leaves every other trial's randomness unchanged.
std::uint64_t TrialSeed(std::uint64_t master_seed, Mechanism mechanism,
                        std::size_t epsilon_index, int trial);

struct ExperimentResult {
  // Sorted by (mechanism tag, epsilon, trial).
  std::vector<ExperimentRecord> records;
  std::vector<SummaryRow> summary;
};

// Runs every (mechanism, epsilon, trial) in a worker pool; the result does
// not depend on the thread count. Throws MetricError if the graph is
// disconnected, since the relative error is then undefined.
ExperimentResult RunExperiment(const Graph& g, const ExperimentConfig& config);

}  // namespace dpgraph

#endif  // DPGRAPH_EXPERIMENT_H_
