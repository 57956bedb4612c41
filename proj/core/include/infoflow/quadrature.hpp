// SPDX-License-Identifier: Apache-2.0
//
// infoflow: information flows in LTI feedback loops over Gaussian channels
// Copyright (C) 2026 The infoflow authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <vector>

namespace infoflow {

/// Composite fixed-order Gauss-Legendre rule over [-1/2, 1/2].
struct QuadratureSpec {
  std::size_t panels = 64;
  std::size_t nodes = 16;      // per panel
  double tolerance = 1e-9;     // absolute, nats

  /// Throws Error unless panels >= 1, nodes >= 2 and tolerance > 0.
  void check() const;
  friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(std::size_t n);

/// Composite rule with `panels` equal panels on [a, b]. Summation runs in fixed
/// node order, so results are bitwise reproducible.
template <class F>
double composite_gauss_legendre(F&& f, double a, double b, std::size_t panels,
                                const GaussLegendreRule& rule) {
  const double h = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + h * static_cast<double>(p);
    const double mid = lo + 0.5 * h;
    double panel = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      panel += rule.weights[k] * f(mid + 0.5 * h * rule.nodes[k]);
    }
    total += 0.5 * h * panel;
  }
  return total;
}

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |Q(2P) - Q(P)|
};

/// Integrates f over [-1/2, 1/2] with `spec.panels` panels and estimates the
/// error against a run with twice as many panels. The finer value is returned.
template <class F>
QuadratureResult integrate_unit_interval(F&& f, const QuadratureSpec& spec) {
  spec.check();
  const auto rule = gauss_legendre(spec.nodes);
  const double coarse = composite_gauss_legendre(f, -0.5, 0.5, spec.panels, rule);
  const double fine = composite_gauss_legendre(f, -0.5, 0.5, 2 * spec.panels, rule);
  return {fine, std::abs(fine - coarse)};
}

}  // namespace infoflow
