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


#ifndef DPGRAPH_SPECTRA_H_
#define DPGRAPH_SPECTRA_H_

#include <span>
#include <vector>

#include "dpgraph/graph.h"

namespace dpgraph {

// Laplacian eigenvalues, one per node.
//
// A kGraphDerived spectrum comes from an eigensolve: values are ascending,
// lambda_1 is ~0 and all values are >= 0. A kRaw spectrum is a privatized
// release whose i-th entry still corresponds to the i-th true eigenvalue, so
// it is neither re-sorted nor guaranteed nonnegative.
struct Spectrum {
  enum class Kind { kGraphDerived, kRaw };

  std::vector<double> values;
  Kind kind = Kind::kGraphDerived;

  int size() const { return static_cast<int>(values.size()); }
};

// Eigenvalues of Laplacian(g), ascending. Round-off negatives above -1e-9 are
// clamped to zero.
Spectrum LaplacianSpectrum(const Graph& g);

// Eigenvalues below this are treated as zero by the relative-error metric.
inline constexpr double kZeroEigenvalueTolerance = 1e-9;

// (1/(n-1)) * sum_{i=2..n} |(private_i - true_i) / true_i|.
// lambda_1 is excluded since it is 0 for every graph. Throws DomainError on
// length mismatch or n < 2, and MetricError if some true lambda_i (i >= 2) is
// below kZeroEigenvalueTolerance, i.e. the graph is disconnected; use
// MeanAbsoluteError for those.
double MeanRelativeError(const Spectrum& true_spectrum,
                         const Spectrum& private_spectrum);

// (1/(n-1)) * sum_{i=2..n} |private_i - true_i|.
double MeanAbsoluteError(const Spectrum& true_spectrum,
                         const Spectrum& private_spectrum);

// Mean over i = 2..n of the unbiased sample variance of entry i across
// `samples`. Throws DomainError with fewer than two samples or when a sample's
// length is not n.
double MeanVariance(std::span<const Spectrum> samples, int n);

}  // namespace dpgraph

#endif  // DPGRAPH_SPECTRA_H_
