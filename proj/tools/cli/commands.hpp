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

#include <iosfwd>
#include <string>
#include <vector>

namespace infoflow::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitInvalid = 2 };

/// Verification thresholds for `verify`.
inline constexpr double kResidualThreshold = 1e-8;
inline constexpr double kOracleThreshold = 1e-7;
/// Maximum RMS relative periodogram error accepted by `simulate`.
inline constexpr double kPsdRmsThreshold = 0.05;

/**
 * Runs the infoflow command line. `args` excludes the program name.
 *
 * Subcommands: analyze, finite, verify, sweep, simulate. Human-readable
 * output goes to `out`, diagnostics to `err`.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infoflow::cli
