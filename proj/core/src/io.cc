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


#include "dpgraph/io.h"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "dpgraph/errors.h"

namespace dpgraph {
namespace {

constexpr std::string_view kResultsHeader =
    "mechanism,epsilon,adjacency_a,trial,seed,mean_rel_err";
constexpr std::string_view kSummaryHeader =
    "mechanism,epsilon,mean_of_mean_rel_err,mean_variance";

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::uint64_t ParseNodeId(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("node id '" + std::string(token) +
                         "' is not a nonnegative integer",
                     line);
  }
  return value;
}

template <typename T>
T ParseField(std::string_view field, std::size_t line, const char* name) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(std::string("bad ") + name + " '" + std::string(field) + "'",
                     line);
  }
  return value;
}

// libstdc++ 11 has no floating-point from_chars.
double ParseRealField(std::string_view field, std::size_t line,
                      const char* name) {
  std::string copy(field);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(copy, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != copy.size()) {
    throw ParseError(std::string("bad ") + name + " '" + copy + "'", line);
  }
  return value;
}

void RequireGood(const std::ostream& out) {
  if (!out) throw IoError("failed to write output stream");
}

}  // namespace

void LabeledGraph::Validate() const {
  if (labels.size() != static_cast<std::size_t>(graph.num_nodes())) {
    throw DomainError("label table has " + std::to_string(labels.size()) +
                      " entries for " + std::to_string(graph.num_nodes()) +
                      " nodes");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw DomainError("duplicate node label '" + label + "'");
    }
  }
}

LabeledGraph ParseEdgeList(std::istream& in, const ParseOptions& options) {
  std::unordered_map<std::uint64_t, int> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](std::uint64_t id) {
    auto [it, inserted] = index.try_emplace(id, static_cast<int>(labels.size()) + 1);
    if (inserted) labels.push_back(std::to_string(id));
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = SplitWhitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw ParseError("expected two node ids, found " +
                           std::to_string(tokens.size()) + " tokens",
                       line_no);
    }
    const std::uint64_t a = ParseNodeId(tokens[0], line_no);
    const std::uint64_t b = ParseNodeId(tokens[1], line_no);
    if (a == b) continue;
    edges.push_back({intern(a), intern(b)});
  }
  if (in.bad()) throw IoError("failed to read edge list");
  if (labels.empty()) {
    throw ParseError("empty graph: input has no edges, so zero nodes", 0);
  }

  LabeledGraph out{Graph(static_cast<int>(labels.size()), edges),
                   std::move(labels)};
  if (options.expect_nodes && out.graph.num_nodes() != *options.expect_nodes) {
    throw DomainError("expected " + std::to_string(*options.expect_nodes) +
                      " nodes, parsed " +
                      std::to_string(out.graph.num_nodes()));
  }
  if (options.expect_edges && out.graph.num_edges() != *options.expect_edges) {
    throw DomainError("expected " + std::to_string(*options.expect_edges) +
                      " edges, parsed " +
                      std::to_string(out.graph.num_edges()));
  }
  return out;
}

LabeledGraph ParseEdgeList(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return ParseEdgeList(in, options);
}

LabeledGraph ReadEdgeListFile(const std::filesystem::path& path,
                              const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return ParseEdgeList(in, options);
}

void WriteGraph(const LabeledGraph& g, std::ostream& out) {
  g.Validate();
  out << "# nodes " << g.graph.num_nodes() << " edges " << g.graph.num_edges()
      << '\n';
  for (const Edge& e : g.graph.Edges()) {
    out << g.labels[e.u - 1] << ' ' << g.labels[e.v - 1] << '\n';
  }
  RequireGood(out);
}

void WriteSpectrum(const Spectrum& spectrum, std::ostream& out) {
  out << "index,eigenvalue\n";
  for (int i = 0; i < spectrum.size(); ++i) {
    out << (i + 1) << ',' << FormatReal(spectrum.values[i]) << '\n';
  }
  RequireGood(out);
}

std::string_view MechanismTag(Mechanism m) {
  switch (m) {
    case Mechanism::kModifiedEr:
      return "modified-er";
    case Mechanism::kBoundedLaplace:
      return "bounded-laplace";
  }
  return "unknown";
}

Mechanism ParseMechanism(std::string_view tag) {
  if (tag == "modified-er") return Mechanism::kModifiedEr;
  if (tag == "bounded-laplace") return Mechanism::kBoundedLaplace;
  throw DomainError("unknown mechanism '" + std::string(tag) +
                    "' (expected modified-er or bounded-laplace)");
}

void WriteResults(std::span<const ExperimentRecord> records, std::ostream& out) {
  std::vector<const ExperimentRecord*> sorted;
  sorted.reserve(records.size());
  for (const auto& r : records) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) {
    const auto ta = MechanismTag(a->mechanism);
    const auto tb = MechanismTag(b->mechanism);
    if (ta != tb) return ta < tb;
    if (a->epsilon != b->epsilon) return a->epsilon < b->epsilon;
    return a->trial < b->trial;
  });

  out << kResultsHeader << '\n';
  for (const auto* r : sorted) {
    out << MechanismTag(r->mechanism) << ',' << FormatReal(r->epsilon) << ','
        << r->adjacency_a << ',' << r->trial << ',' << r->seed << ','
        << FormatReal(r->mean_rel_err) << '\n';
  }
  RequireGood(out);
}

std::vector<ExperimentRecord> ReadResults(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kResultsHeader) {
    throw ParseError("missing results header", 1);
  }
  std::vector<ExperimentRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = SplitCommas(line);
    if (f.size() != 6) throw ParseError("expected 6 fields", line_no);
    ExperimentRecord r;
    try {
      r.mechanism = ParseMechanism(f[0]);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), line_no);
    }
    r.epsilon = ParseRealField(f[1], line_no, "epsilon");
    r.adjacency_a = ParseField<int>(f[2], line_no, "adjacency_a");
    r.trial = ParseField<int>(f[3], line_no, "trial");
    r.seed = ParseField<std::uint64_t>(f[4], line_no, "seed");
    r.mean_rel_err = ParseRealField(f[5], line_no, "mean_rel_err");
    records.push_back(std::move(r));
  }
  return records;
}

void WriteSummary(std::span<const SummaryRow> rows, std::ostream& out) {
  out << kSummaryHeader << '\n';
  for (const auto& row : rows) {
    out << MechanismTag(row.mechanism) << ',' << FormatReal(row.epsilon) << ','
        << FormatReal(row.mean_of_mean_rel_err) << ','
        << (row.mean_variance ? FormatReal(*row.mean_variance) : "NA") << '\n';
  }
  RequireGood(out);
}

void WriteTextFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

std::string FormatReal(double value) { return fmt::format("{:.17g}", value); }

}  // namespace dpgraph
