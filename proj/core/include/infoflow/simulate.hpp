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
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "infoflow/gaussian_net.hpp"
#include "infoflow/lti.hpp"
#include "infoflow/spectral.hpp"

namespace infoflow {

struct SimulationConfig {
  FeedbackLoop loop;
  std::size_t n = 1024;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
};

/// Identifier recorded in every batch's metadata.
inline constexpr const char* kGeneratorId = "mt19937_64/splitmix64-substreams/std::normal_distribution";

/**
 * trials x n realizations of the loop signals, one row per trial. The drawn
 * basis (x0, w, v) is kept so trajectories can be checked against the linear
 * maps. Identical (config, seed) yields bitwise-identical batches.
 */
struct TrajectoryBatch {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string generator;

  Eigen::MatrixXd e, x, y, w, v;
  Eigen::VectorXd x0;

  Eigen::MatrixXd signal(SignalRole role) const;
  /// (x0, w_1..w_n, v_1..v_n) of one trial, matching NoiseBasis column order.
  Eigen::VectorXd basis_draw(std::size_t trial) const;
};

TrajectoryBatch simulate_loop(const SimulationConfig& config);

/// Sample autocovariances for lags 0..max_lag over the stationary tail (last
/// n/2 samples), pooled over trials and positions. Requires max_lag < n/2.
std::vector<double> empirical_covariance(const TrajectoryBatch& batch, SignalRole role,
                                         std::size_t max_lag);

/// Averaged periodogram sampled on the FFT grid of the tail, theta ascending in [-1/2, 1/2).
struct SampledPsd {
  std::string name;
  std::vector<double> theta;
  std::vector<double> density;

  /// Piecewise-linear interpolation on the periodic grid.
  SpectralDensity as_density() const;
};

/// Requires n a power of two >= 256 and trials >= 100.
SampledPsd periodogram_psd(const TrajectoryBatch& batch, SignalRole role);

/// sqrt(mean(((estimate - reference)/reference)^2)) over the sampled grid.
double rms_relative_error(const SampledPsd& estimate, const SpectralDensity& reference);

void write_batch_csv(std::ostream& os, const TrajectoryBatch& batch, SignalRole role);
void write_periodogram_csv(std::ostream& os, const SampledPsd& estimate,
                           const SpectralDensity& reference);
void write_covariance_csv(std::ostream& os, const std::vector<double>& lags);

}  // namespace infoflow
