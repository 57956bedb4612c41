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

#include <nlohmann/json.hpp>

#include "infoflow/gaussian_net.hpp"
#include "infoflow/lti.hpp"
#include "infoflow/quadrature.hpp"
#include "infoflow/rates.hpp"

// JSON encodings of the public report and model types. Field names are part of
// the versioned report schema.
namespace infoflow {

inline constexpr int kReportSchemaVersion = 1;

void to_json(nlohmann::json& j, const Polynomial& p);
void to_json(nlohmann::json& j, const TransferFunction& g);
void to_json(nlohmann::json& j, const FeedbackLoop& loop);
void to_json(nlohmann::json& j, const QuadratureSpec& q);
void to_json(nlohmann::json& j, const RateReport& r);
void to_json(nlohmann::json& j, const FiniteInfoReport& r);

}  // namespace infoflow
