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

#include "infoflow/spectral.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "infoflow/error.hpp"

namespace infoflow {

namespace {

constexpr double kPsdFloor = 1e-300;
constexpr double kNearCircle = 1e-6;

void require_reliable(const QuadratureResult& r, const QuadratureSpec& quad) {
  if (!std::isfinite(r.value) || r.error_estimate > quad.tolerance) {
    std::ostringstream os;
    os << "quadrature unreliable (error estimate " << r.error_estimate << " > tolerance "
       << quad.tolerance << ")";
    throw Error(os.str());
  }
}

}  // namespace

SpectralDensity SpectralDensity::white(std::string name, double variance) {
  return SpectralDensity(std::move(name), [variance](double) { return variance; });
}

double entropy_rate_from_psd(const SpectralDensity& psd, const QuadratureSpec& quad) {
  const double log_2pie = std::log(2.0 * std::numbers::pi * std::numbers::e);
  auto integrand = [&](double theta) {
    const double s = psd(theta);
    if (!(s > kPsdFloor)) {
      std::ostringstream os;
      os.precision(17);
      os << "log-singularity at node theta=" << theta << " (" << psd.name() << " = " << s << ")";
      throw Error(os.str());
    }
    return 0.5 * (log_2pie + std::log(s));
  };
  const auto r = integrate_unit_interval(integrand, quad);
  require_reliable(r, quad);
  return r.value;
}

double psd_variance(const SpectralDensity& psd, const QuadratureSpec& quad) {
  const auto r = integrate_unit_interval([&](double theta) { return psd(theta); }, quad);
  require_reliable(r, quad);
  return r.value;
}

double output_psd(const FeedbackLoop& loop, double theta) {
  return std::norm(sensitivity(loop.plant, theta)) * (loop.sigma_v2 + loop.sigma_w2);
}

SpectralDensity output_psd(const FeedbackLoop& loop) {
  return SpectralDensity("S_e", [loop](double theta) { return output_psd(loop, theta); });
}

double log_sensitivity_integral(const TransferFunction& g, const QuadratureSpec& quad) {
  for (auto r : poly_roots(closed_loop_char_poly(g))) {
    if (std::abs(std::abs(r) - 1.0) < kNearCircle)
      throw Error("quadrature unreliable (closed-loop pole near unit circle)");
  }
  for (auto r : poly_roots(g.den)) {
    if (std::abs(std::abs(r) - 1.0) < kNearCircle)
      throw Error("quadrature unreliable (open-loop pole near unit circle)");
  }
  const auto r = integrate_unit_interval(
      [&](double theta) { return std::log(std::abs(sensitivity(g, theta))); }, quad);
  require_reliable(r, quad);
  return r.value;
}

double bode_integral_poles(const TransferFunction& g) {
  double total = 0.0;
  for (auto p : poly_roots(g.den)) {
    const double mag = std::abs(p);
    if (std::abs(mag - 1.0) < kStabilityMargin) throw Error("marginal open-loop pole");
    if (mag > 1.0) total += std::log(mag);
  }
  return total;
}

void write_psd_csv(std::ostream& os, const SpectralDensity& psd, std::span<const double> thetas) {
  const auto old = os.precision(17);
  os << "theta,density\n";
  for (double t : thetas) os << t << ',' << psd(t) << '\n';
  os.precision(old);
}

}  // namespace infoflow
