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

#include "infoflow/json.hpp"

#include <vector>

namespace infoflow {

void to_json(nlohmann::json& j, const Polynomial& p) {
  j = std::vector<double>(p.coeffs().begin(), p.coeffs().end());
}

void to_json(nlohmann::json& j, const TransferFunction& g) {
  j = nlohmann::json{{"num", g.num}, {"den", g.den}};
}

void to_json(nlohmann::json& j, const FeedbackLoop& loop) {
  j = nlohmann::json{
      {"plant", loop.plant},
      {"noise", {{"sigma_w2", loop.sigma_w2}, {"sigma_v2", loop.sigma_v2}}},
      {"message", {{"sigma_02", loop.sigma_02}, {"theta", loop.theta}}},
  };
}

void to_json(nlohmann::json& j, const QuadratureSpec& q) {
  j = nlohmann::json{{"panels", q.panels}, {"nodes", q.nodes}, {"tolerance", q.tolerance}};
}

void to_json(nlohmann::json& j, const RateReport& r) {
  j = nlohmann::json{
      {"r_total", r.r_total},
      {"r_x", r.r_x},
      {"r_cond", r.r_cond},
      {"conservation_residual", r.conservation_residual},
      {"snr_term", r.snr_term},
      {"log_sens_term", r.log_sens_term},
      {"r_total_psd", r.r_total_psd},
  };
}

void to_json(nlohmann::json& j, const FiniteInfoReport& r) {
  j = nlohmann::json{
      {"n", r.n},
      {"i_total", r.i_total},
      {"i_x", r.i_x},
      {"i_cond", r.i_cond},
      {"residual", r.residual},
      {"per_sample",
       {{"i_total", r.per_sample(r.i_total)},
        {"i_x", r.per_sample(r.i_x)},
        {"i_cond", r.per_sample(r.i_cond)}}},
  };
  if (r.oracle_disagreement) {
    j["definition"] = {{"i_total", *r.def_total},
                       {"i_x", *r.def_x},
                       {"i_cond", *r.def_cond},
                       {"max_disagreement", *r.oracle_disagreement}};
  }
}

}  // namespace infoflow
