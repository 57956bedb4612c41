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

#include "infoflow/rates.hpp"

#include <cmath>

#include "infoflow/spectral.hpp"

namespace infoflow {

RateReport closed_form_rates(const FeedbackLoop& loop, const QuadratureSpec& quad) {
  require_valid(loop);
  RateReport r;
  r.log_sens_term = log_sensitivity_integral(loop.plant, quad);
  r.snr_term = 0.5 * std::log1p(loop.sigma_w2 / loop.sigma_v2);
  r.r_x = r.log_sens_term;
  r.r_cond = r.snr_term;
  r.r_total = r.r_x + r.r_cond;
  r.r_total_psd = entropy_rate_from_psd(output_psd(loop), quad) -
                  entropy_rate_from_psd(SpectralDensity::white("S_v", loop.sigma_v2), quad);
  r.conservation_residual = conservation_residual(r);
  return r;
}

double conservation_residual(const RateReport& report) {
  return report.r_total_psd - (report.r_x + report.r_cond);
}

}  // namespace infoflow
