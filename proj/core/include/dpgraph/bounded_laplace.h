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


#ifndef DPGRAPH_BOUNDED_LAPLACE_H_
#define DPGRAPH_BOUNDED_LAPLACE_H_

#include <cstdint>
#include <optional>

#include "dpgraph/graph.h"
#include "dpgraph/random.h"
#include "dpgraph/spectra.h"

namespace dpgraph {

// Parameters of one bounded Laplace release.
class BaselineParams {
 public:
  // Throws DomainError unless epsilon_bl > 0, sensitivity > 0 and
  // lower < upper. epsilon_bl may be +infinity (no noise).
  BaselineParams(double epsilon_bl, double sensitivity, double lower,
                 double upper);

  double epsilon_bl() const { return epsilon_bl_; }
  double sensitivity() const { return sensitivity_; }
  double lower() const { return lower_; }
  double upper() const { return upper_; }
  // Laplace scale b = sensitivity / epsilon_bl.
  double scale() const { return sensitivity_ / epsilon_bl_; }

 private:
  double epsilon_bl_;
  double sensitivity_;
  double lower_;
  double upper_;
};

// Comparator assumptions for privatizing a Laplacian spectrum. Unset fields
// take the defaults below, which can be overridden to re-calibrate.
struct BaselineSettings {
  // Per-eigenvalue global sensitivity. Default 2A: flipping one edge moves
  // every Laplacian eigenvalue by at most 2.
  std::optional<double> sensitivity;
  // Truncation domain. Default [0, n], the range of Laplacian eigenvalues.
  std::optional<double> lower;
  std::optional<double> upper;

  BaselineParams Resolve(double epsilon_bl, int n, int adjacency) const;
};

// Draws from the Laplace(value, scale) density truncated to [lower, upper]
// and renormalized, by resampling until the draw lands in the domain.
// Throws DomainError if value is outside [lower, upper].
double BoundedLaplaceSample(double value, const BaselineParams& baseline,
                            std::uint64_t seed);
double BoundedLaplaceSample(double value, const BaselineParams& baseline,
                            Engine& engine);

// Releases lambda_2..lambda_n, each with bounded Laplace noise at
// epsilon / (n - 1), so the whole release costs epsilon. lambda_1 is
// graph-independent and passes through. The result is a kRaw spectrum in the
// input's index order. Values within 1e-9 of the domain are snapped onto it;
// anything further out is a DomainError.
Spectrum PrivatizeSpectrumBaseline(const Spectrum& spectrum,
                                   const PrivacyParams& params,
                                   std::uint64_t seed,
                                   const BaselineSettings& settings = {});

}  // namespace dpgraph

#endif  // DPGRAPH_BOUNDED_LAPLACE_H_
