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

#include <functional>
#include <iosfwd>
#include <span>
#include <string>

#include "infoflow/lti.hpp"
#include "infoflow/quadrature.hpp"

namespace infoflow {

/// Power spectral density of a stationary signal on theta in [-1/2, 1/2]
/// (cycles/sample); integrates to the signal variance.
class SpectralDensity {
 public:
  SpectralDensity(std::string name, std::function<double(double)> eval)
      : name_(std::move(name)), eval_(std::move(eval)) {}

  static SpectralDensity white(std::string name, double variance);

  double operator()(double theta) const { return eval_(theta); }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  std::function<double(double)> eval_;
};

/// Entropy rate 1/2 * int ln(2 pi e psd(theta)) dtheta, in nats per sample.
/// Throws Error("log-singularity at node theta=...") for a nonpositive sample.
double entropy_rate_from_psd(const SpectralDensity& psd, const QuadratureSpec& quad = {});

/// int psd(theta) dtheta, the stationary variance.
double psd_variance(const SpectralDensity& psd, const QuadratureSpec& quad = {});

/// |S(e^{j2 pi theta})|^2 (sigma_v2 + sigma_w2), the density of e.
double output_psd(const FeedbackLoop& loop, double theta);
SpectralDensity output_psd(const FeedbackLoop& loop);

/// int ln|S(e^{j2 pi theta})| dtheta by quadrature. Rejects loops with open- or
/// closed-loop poles within 1e-6 of the unit circle ("quadrature unreliable").
double log_sensitivity_integral(const TransferFunction& g, const QuadratureSpec& quad = {});

/// Sum of ln|p| over open-loop poles outside the unit circle (Bode integral).
double bode_integral_poles(const TransferFunction& g);

/// Writes "theta,density" rows for the given grid.
void write_psd_csv(std::ostream& os, const SpectralDensity& psd, std::span<const double> thetas);

}  // namespace infoflow
