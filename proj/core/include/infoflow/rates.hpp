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

#include "infoflow/lti.hpp"
#include "infoflow/quadrature.hpp"

namespace infoflow {

/**
 * Asymptotic per-sample information flows, in nats/sample.
 *
 * r_total is the term sum r_x + r_cond. r_total_psd is the same limit
 * recomputed independently as the entropy-rate difference of S_e and S_v, and
 * conservation_residual = r_total_psd - (r_x + r_cond).
 */
struct RateReport {
  double r_total = 0.0;
  double r_x = 0.0;
  double r_cond = 0.0;
  double r_total_psd = 0.0;
  double conservation_residual = 0.0;
  double snr_term = 0.0;       // 1/2 ln(1 + sigma_w2/sigma_v2)
  double log_sens_term = 0.0;  // int ln|S|
};

RateReport closed_form_rates(const FeedbackLoop& loop, const QuadratureSpec& quad = {});

/// r_total_psd - (r_x + r_cond).
double conservation_residual(const RateReport& report);

}  // namespace infoflow
