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

#include "infoflow/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "infoflow/error.hpp"

namespace infoflow {

void QuadratureSpec::check() const {
  if (panels < 1) throw Error("quadrature needs at least one panel");
  if (nodes < 2) throw Error("quadrature needs at least two nodes per panel");
  if (!(tolerance > 0.0)) throw Error("quadrature tolerance must be positive");
}

GaussLegendreRule gauss_legendre(std::size_t n) {
  if (n < 1) throw Error("Gauss-Legendre rule needs n >= 1");
  GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
  const double dn = static_cast<double>(n);
  const std::size_t half = (n + 1) / 2;

  for (std::size_t i = 1; i <= half; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) - 0.25) / (dn + 0.5));
    double pp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        const double dj = static_cast<double>(j);
        p1 = ((2.0 * dj - 1.0) * z * p2 - (dj - 1.0) * p3) / dj;
      }
      pp = dn * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15) break;
    }
    rule.nodes[i - 1] = -z;
    rule.nodes[n - i] = z;
    rule.weights[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[n - i] = rule.weights[i - 1];
  }
  return rule;
}

}  // namespace infoflow
