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
#include <cstdint>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "infoflow/error.hpp"
#include "infoflow/lti.hpp"
#include "infoflow/quadrature.hpp"

namespace infoflow::cli {

/// Malformed configuration file (bad JSON, unknown key, wrong type).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/**
 * Parsed loop configuration file.
 *
 *   {
 *     "plant":   {"num": [0, -1.5], "den": [1, -2]},
 *     "noise":   {"sigma_w2": 1, "sigma_v2": 1},
 *     "message": {"sigma_02": 1, "theta": [1]},
 *     "quadrature": {"panels": 64, "nodes": 16, "tolerance": 1e-9},
 *     "horizon": 64, "trials": 1000, "seed": 42
 *   }
 *
 * "plant" and "noise" are required; everything else has the defaults shown.
 */
struct LoopConfig {
  FeedbackLoop loop;
  QuadratureSpec quad;
  std::size_t horizon = 64;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;

  friend bool operator==(const LoopConfig&, const LoopConfig&) = default;
};

LoopConfig parse_config(const nlohmann::json& j);
LoopConfig load_config(const std::filesystem::path& path);

/// Canonical JSON form; parse_config(echo_config(c)) == c.
nlohmann::json echo_config(const LoopConfig& config);

}  // namespace infoflow::cli
