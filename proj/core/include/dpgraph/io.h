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


#ifndef DPGRAPH_IO_H_
#define DPGRAPH_IO_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dpgraph/graph.h"
#include "dpgraph/spectra.h"

namespace dpgraph {

// A graph plus the external identifier of each internal node:
// labels[i - 1] names node i.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;

  // Throws DomainError unless labels are unique and there is one per node.
  void Validate() const;
};

struct ParseOptions {
  // When set, ingestion fails unless the parsed graph has exactly this many
  // nodes / edges.
  std::optional<int> expect_nodes;
  std::optional<std::int64_t> expect_edges;
};

// Parses a SNAP-style edge list: one "u v" pair of nonnegative integer ids per
// line, '#' starts a comment line, blank lines are ignored. Self-loops are
// dropped, repeated and reversed pairs collapse, and ids are numbered 1..n in
// order of first appearance. Ids are canonicalized to decimal ("007" is "7").
//
// Throws ParseError (with the line number) on malformed lines and when no
// edges remain, and DomainError when an expectation in `options` is not met.
LabeledGraph ParseEdgeList(std::istream& in, const ParseOptions& options = {});
LabeledGraph ParseEdgeList(std::string_view text,
                           const ParseOptions& options = {});
LabeledGraph ReadEdgeListFile(const std::filesystem::path& path,
                              const ParseOptions& options = {});

// Writes a '#' header line followed by one "label_u label_v" line per edge in
// lexicographic order of internal ids.
void WriteGraph(const LabeledGraph& g, std::ostream& out);

// "index,eigenvalue" CSV, 1-based index.
void WriteSpectrum(const Spectrum& spectrum, std::ostream& out);

enum class Mechanism { kModifiedEr, kBoundedLaplace };

std::string_view MechanismTag(Mechanism m);
// Throws DomainError on an unknown tag.
Mechanism ParseMechanism(std::string_view tag);

// One trial of the spectral accuracy experiment.
struct ExperimentRecord {
  Mechanism mechanism = Mechanism::kModifiedEr;
  double epsilon = 0.0;
  int adjacency_a = 1;
  int trial = 0;
  std::uint64_t seed = 0;
  double mean_rel_err = 0.0;
  // Private eigenvalues of this trial; kept in memory, not serialized.
  std::optional<std::vector<double>> spectrum_digest;

  friend bool operator==(const ExperimentRecord&,
                         const ExperimentRecord&) = default;
};

// CSV with header mechanism,epsilon,adjacency_a,trial,seed,mean_rel_err.
// Rows are sorted by (mechanism tag, epsilon, trial); reals use 17
// significant digits so they parse back exactly. Throws IoError if the stream
// fails.
void WriteResults(std::span<const ExperimentRecord> records, std::ostream& out);

// Inverse of WriteResults. Throws ParseError on malformed rows.
std::vector<ExperimentRecord> ReadResults(std::istream& in);

// One (mechanism, epsilon) aggregate. mean_variance is absent when fewer than
// two trials were run.
struct SummaryRow {
  Mechanism mechanism = Mechanism::kModifiedEr;
  double epsilon = 0.0;
  double mean_of_mean_rel_err = 0.0;
  std::optional<double> mean_variance;
};

// CSV with header mechanism,epsilon,mean_of_mean_rel_err,mean_variance; an
// absent variance is written as NA.
void WriteSummary(std::span<const SummaryRow> rows, std::ostream& out);

// Writes `contents` to `path`, throwing IoError on failure.
void WriteTextFile(const std::filesystem::path& path, std::string_view contents);

// 17 significant digits ("%.17g"), which round-trips any double.
std::string FormatReal(double value);

}  // namespace dpgraph

#endif  // DPGRAPH_IO_H_
