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


#include "dpgraph/spectra.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "dpgraph/errors.h"

namespace dpgraph {
namespace {

void RequireComparable(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) {
    throw DomainError("spectra have different lengths (" +
                      std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()) + ")");
  }
  if (a.size() < 2) throw DomainError("spectral error needs n >= 2");
}

}  // namespace

Spectrum LaplacianSpectrum(const Graph& g) {
  const int n = g.num_nodes();
  Spectrum out;
  if (n == 0) return out;

  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.Edges()) {
    lap(e.u - 1, e.v - 1) = -1.0;
    lap(e.v - 1, e.u - 1) = -1.0;
    lap(e.u - 1, e.u - 1) += 1.0;
    lap(e.v - 1, e.v - 1) += 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      lap, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("symmetric eigensolver failed to converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  out.values.assign(ev.data(), ev.data() + n);
  std::sort(out.values.begin(), out.values.end());
  for (double& v : out.values) {
    if (v < 0 && v > -kZeroEigenvalueTolerance) v = 0.0;
  }
  return out;
}

double MeanRelativeError(const Spectrum& true_spectrum,
                         const Spectrum& private_spectrum) {
  RequireComparable(true_spectrum, private_spectrum);
  const int n = true_spectrum.size();
  double total = 0.0;
  for (int i = 1; i < n; ++i) {
    const double lambda = true_spectrum.values[i];
    if (lambda < kZeroEigenvalueTolerance) {
      throw MetricError(
          "disconnected spectrum: true eigenvalue " + std::to_string(i + 1) +
          " is zero, relative error is undefined (use absolute error)");
    }
    total += std::abs((private_spectrum.values[i] - lambda) / lambda);
  }
  return total / (n - 1);
}

double MeanAbsoluteError(const Spectrum& true_spectrum,
                         const Spectrum& private_spectrum) {
  RequireComparable(true_spectrum, private_spectrum);
  const int n = true_spectrum.size();
  double total = 0.0;
  for (int i = 1; i < n; ++i) {
    total += std::abs(private_spectrum.values[i] - true_spectrum.values[i]);
  }
  return total / (n - 1);
}

double MeanVariance(std::span<const Spectrum> samples, int n) {
  if (samples.size() < 2) {
    throw DomainError("variance needs at least two samples");
  }
  if (n < 2) throw DomainError("variance over lambda_2..lambda_n needs n >= 2");
  for (const Spectrum& s : samples) {
    if (s.size() != n) {
      throw DomainError("sample spectrum has length " +
                        std::to_string(s.size()) + ", expected " +
                        std::to_string(n));
    }
  }
  const double count = static_cast<double>(samples.size());
  double total = 0.0;
  for (int i = 1; i < n; ++i) {
    // Two-pass: mean first, then squared deviations.
    double mean = 0.0;
    for (const Spectrum& s : samples) mean += s.values[i];
    mean /= count;
    double ss = 0.0;
    for (const Spectrum& s : samples) {
      const double d = s.values[i] - mean;
      ss += d * d;
    }
    total += ss / (count - 1.0);
  }
  return total / (n - 1);
}

}  // namespace dpgraph
