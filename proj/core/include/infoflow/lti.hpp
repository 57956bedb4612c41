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

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "infoflow/polynomial.hpp"

namespace infoflow {

/// Stability margin on root magnitudes for open- and closed-loop poles.
inline constexpr double kStabilityMargin = 1e-8;
/// Two roots closer than this count as a pole-zero cancellation.
inline constexpr double kCancellationTol = 1e-9;

/**
 * Rational discrete-time system G = B/A in powers of z^-1.
 *
 * A valid plant has A[0] = 1 and B[0] = 0 (strictly proper, g0 = 0), and no
 * root shared by A and B. The constructor does not enforce these; use
 * validate_plant() or validate_loop().
 */
struct TransferFunction {
  Polynomial num{};      // B
  Polynomial den{1.0};   // A

  static TransferFunction zero() { return {}; }
  friend bool operator==(const TransferFunction&, const TransferFunction&) = default;
};

/**
 * Full problem instance: plant S1 closed over the two AWGN channels.
 *
 * Loop equations (time index i >= 1):
 *   e_i = x_i + w_i + v_i,   y_i = x_i + w_i,
 *   A(z^-1) x = B(z^-1) e + theta x0,
 * so the message x0 drives the plant's difference equation through the finite
 * injection response theta = (theta_1, theta_2, ...). For A = 1 this reduces to
 * x = G e + theta x0.
 */
struct FeedbackLoop {
  TransferFunction plant{};
  double sigma_w2 = 1.0;
  double sigma_v2 = 1.0;
  double sigma_02 = 1.0;
  std::vector<double> theta{1.0};

  friend bool operator==(const FeedbackLoop&, const FeedbackLoop&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Checks the TransferFunction invariants plus open- and closed-loop pole margins.
ValidationReport validate_plant(const TransferFunction& g);

/// Reports every violated FeedbackLoop invariant; empty when valid.
ValidationReport validate_loop(const FeedbackLoop& loop);

/// Throws InvalidLoop carrying the full report when validate_loop() fails.
void require_valid(const FeedbackLoop& loop);

/// G(e^{j2 pi theta}) = B(e^{-j2 pi theta}) / A(e^{-j2 pi theta}).
std::complex<double> freq_response(const TransferFunction& g, double theta);

/// Sensitivity S = 1/(1 - G) = A/(A - B) at e^{j2 pi theta}.
std::complex<double> sensitivity(const TransferFunction& g, double theta);

/// A - B, whose z-roots are the closed-loop poles.
Polynomial closed_loop_char_poly(const TransferFunction& g);

/// g_1 ... g_n; g_0 = 0 for a strictly proper plant and is not returned.
std::vector<double> impulse_response(const TransferFunction& g, std::size_t n);

/// Largest root magnitude of p (0 for a constant polynomial).
double spectral_radius(const Polynomial& p);

}  // namespace infoflow
