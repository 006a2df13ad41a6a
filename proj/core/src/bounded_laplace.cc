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


#include "dpgraph/bounded_laplace.h"

#include <cmath>
#include <string>

#include "dpgraph/errors.h"
#include "dpgraph/mechanisms.h"

namespace dpgraph {
namespace {

constexpr double kRoundOff = 1e-9;

}  // namespace

BaselineParams::BaselineParams(double epsilon_bl, double sensitivity,
                               double lower, double upper)
    : epsilon_bl_(epsilon_bl),
      sensitivity_(sensitivity),
      lower_(lower),
      upper_(upper) {
  if (!(epsilon_bl > 0)) throw DomainError("epsilon_bl must be > 0");
  if (!(sensitivity > 0) || std::isinf(sensitivity)) {
    throw DomainError("sensitivity must be positive and finite");
  }
  if (!(lower < upper)) throw DomainError("bounded domain needs lower < upper");
}

BaselineParams BaselineSettings::Resolve(double epsilon_bl, int n,
                                         int adjacency) const {
  return BaselineParams(epsilon_bl, sensitivity.value_or(2.0 * adjacency),
                        lower.value_or(0.0),
                        upper.value_or(static_cast<double>(n)));
}

double BoundedLaplaceSample(double value, const BaselineParams& baseline,
                            std::uint64_t seed) {
  Engine engine(seed);
  return BoundedLaplaceSample(value, baseline, engine);
}

double BoundedLaplaceSample(double value, const BaselineParams& baseline,
                            Engine& engine) {
  if (!(value >= baseline.lower() && value <= baseline.upper())) {
    throw DomainError("value " + std::to_string(value) + " outside [" +
                      std::to_string(baseline.lower()) + ", " +
                      std::to_string(baseline.upper()) + "]");
  }
  const double b = baseline.scale();
  if (b == 0.0) return value;
  // The centre lies inside the domain, so each draw is accepted with
  // probability at least (1 - exp(-(upper - lower) / b)) / 2.
  for (;;) {
    const double u = UniformOpen01(engine) - 0.5;
    const double draw =
        value - b * std::copysign(1.0, u) * std::log1p(-2.0 * std::abs(u));
    if (draw >= baseline.lower() && draw <= baseline.upper()) return draw;
  }
}

Spectrum PrivatizeSpectrumBaseline(const Spectrum& spectrum,
                                   const PrivacyParams& params,
                                   std::uint64_t seed,
                                   const BaselineSettings& settings) {
  const int n = spectrum.size();
  const double epsilon_bl = PerQueryEpsilon(params.epsilon(), n);
  const BaselineParams baseline =
      settings.Resolve(epsilon_bl, n, params.adjacency());

  Spectrum out{spectrum.values, Spectrum::Kind::kRaw};
  Engine engine(seed);
  for (int i = 1; i < n; ++i) {
    double value = spectrum.values[i];
    // Eigensolver round-off can push lambda_n of a complete graph just past n.
    if (value > baseline.upper() && value - baseline.upper() < kRoundOff) {
      value = baseline.upper();
    } else if (value < baseline.lower() && baseline.lower() - value < kRoundOff) {
      value = baseline.lower();
    }
    out.values[i] = BoundedLaplaceSample(value, baseline, engine);
  }
  return out;
}

}  // namespace dpgraph
