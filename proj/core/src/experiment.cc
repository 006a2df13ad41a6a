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


#include "dpgraph/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <mutex>
#include <thread>

#include "dpgraph/errors.h"
#include "dpgraph/mechanisms.h"
#include "dpgraph/random.h"
#include "dpgraph/spectra.h"

namespace dpgraph {
namespace {

struct Task {
  Mechanism mechanism;
  std::size_t epsilon_index;
  int trial;
};

int WorkerCount(int requested, std::size_t tasks) {
  int workers = requested > 0
                    ? requested
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(workers, 1);
  return static_cast<int>(std::min<std::size_t>(workers, tasks));
}

bool RecordOrder(const ExperimentRecord& a, const ExperimentRecord& b) {
  const auto ta = MechanismTag(a.mechanism);
  const auto tb = MechanismTag(b.mechanism);
  if (ta != tb) return ta < tb;
  if (a.epsilon != b.epsilon) return a.epsilon < b.epsilon;
  return a.trial < b.trial;
}

}  // namespace

std::vector<double> DefaultEpsilonGrid() {
  std::vector<double> grid;
  for (int l = 1; l <= 8; ++l) grid.push_back(0.835 * l);
  return grid;
}

void ExperimentConfig::Validate() const {
  if (trials < 1) throw DomainError("trials must be >= 1");
  if (epsilons.empty()) throw DomainError("epsilon grid is empty");
  for (double eps : epsilons) {
    if (!std::isfinite(eps) || eps <= 0) {
      throw DomainError("grid epsilons must be finite and > 0");
    }
  }
  if (mechanisms.empty()) throw DomainError("no mechanisms selected");
  if (adjacency < 1) throw DomainError("adjacency parameter must be >= 1");
}

std::string ExperimentConfig::ResolvedSummaryPath() const {
  if (!summary_path.empty()) return summary_path;
  std::filesystem::path p(output_path);
  const std::string ext = p.has_extension() ? p.extension().string() : ".csv";
  p.replace_filename(p.stem().string() + "_summary" + ext);
  return p.string();
}

void ExperimentConfig::MergeJson(const nlohmann::json& json) {
  if (!json.is_object()) throw DomainError("experiment config must be a JSON object");
  try {
    for (const auto& [key, value] : json.items()) {
      if (key == "dataset") {
        dataset_path = value.get<std::string>();
      } else if (key == "epsilons") {
        epsilons = value.get<std::vector<double>>();
      } else if (key == "adjacency") {
        adjacency = value.get<int>();
      } else if (key == "trials") {
        trials = value.get<int>();
      } else if (key == "seed") {
        master_seed = value.get<std::uint64_t>();
      } else if (key == "mechanisms") {
        mechanisms.clear();
        for (const auto& tag : value) {
          mechanisms.push_back(ParseMechanism(tag.get<std::string>()));
        }
      } else if (key == "baseline_sensitivity") {
        baseline.sensitivity = value.get<double>();
      } else if (key == "baseline_lower") {
        baseline.lower = value.get<double>();
      } else if (key == "baseline_upper") {
        baseline.upper = value.get<double>();
      } else if (key == "out") {
        output_path = value.get<std::string>();
      } else if (key == "summary_out") {
        summary_path = value.get<std::string>();
      } else if (key == "expect_nodes") {
        expect_nodes = value.get<int>();
      } else if (key == "expect_edges") {
        expect_edges = value.get<std::int64_t>();
      } else if (key == "threads") {
        threads = value.get<int>();
      } else {
        throw DomainError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad config value: ") + e.what());
  }
}

std::uint64_t TrialSeed(std::uint64_t master_seed, Mechanism mechanism,
                        std::size_t epsilon_index, int trial) {
  return DeriveSeed(master_seed, {HashTag(MechanismTag(mechanism)),
                                  static_cast<std::uint64_t>(epsilon_index),
                                  static_cast<std::uint64_t>(trial)});
}

ExperimentResult RunExperiment(const Graph& g, const ExperimentConfig& config) {
  config.Validate();
  const int n = g.num_nodes();
  if (n < 2) throw DomainError("experiment needs a graph with n >= 2");

  const Spectrum truth = LaplacianSpectrum(g);
  if (truth.values[1] < kZeroEigenvalueTolerance) {
    throw MetricError(
        "dataset graph is disconnected (lambda_2 = 0), so the mean relative "
        "spectral error is undefined; use MeanAbsoluteError instead");
  }

  std::vector<Task> tasks;
  for (Mechanism m : config.mechanisms) {
    for (std::size_t e = 0; e < config.epsilons.size(); ++e) {
      for (int t = 0; t < config.trials; ++t) tasks.push_back({m, e, t});
    }
  }

  std::vector<ExperimentRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        const Task& task = tasks[i];
        const double eps = config.epsilons[task.epsilon_index];
        const PrivacyParams params(eps, config.adjacency);
        const std::uint64_t seed = TrialSeed(
            config.master_seed, task.mechanism, task.epsilon_index, task.trial);
        Spectrum released;
        if (task.mechanism == Mechanism::kModifiedEr) {
          released = LaplacianSpectrum(SamplePrivateGraph(g, params, seed));
        } else {
          released = PrivatizeSpectrumBaseline(truth, params, seed,
                                               config.baseline);
        }
        ExperimentRecord& r = records[i];
        r.mechanism = task.mechanism;
        r.epsilon = eps;
        r.adjacency_a = config.adjacency;
        r.trial = task.trial;
        r.seed = seed;
        r.mean_rel_err = MeanRelativeError(truth, released);
        r.spectrum_digest = std::move(released.values);
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next = tasks.size();
    }
  };
  {
    std::vector<std::jthread> pool;
    const int workers = WorkerCount(config.threads, tasks.size());
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(records.begin(), records.end(), RecordOrder);

  ExperimentResult result;
  for (std::size_t begin = 0; begin < records.size();) {
    std::size_t end = begin;
    while (end < records.size() &&
           records[end].mechanism == records[begin].mechanism &&
           records[end].epsilon == records[begin].epsilon) {
      ++end;
    }
    SummaryRow row{records[begin].mechanism, records[begin].epsilon, 0.0, {}};
    std::vector<Spectrum> spectra;
    for (std::size_t i = begin; i < end; ++i) {
      row.mean_of_mean_rel_err += records[i].mean_rel_err;
      spectra.push_back({*records[i].spectrum_digest, Spectrum::Kind::kRaw});
    }
    row.mean_of_mean_rel_err /= static_cast<double>(end - begin);
    if (spectra.size() >= 2) row.mean_variance = MeanVariance(spectra, n);
    result.summary.push_back(row);
    begin = end;
  }
  result.records = std::move(records);
  return result;
}

}  // namespace dpgraph
