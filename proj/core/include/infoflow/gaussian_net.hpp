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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include <Eigen/Core>

#include "infoflow/lti.hpp"

namespace infoflow {

enum class SignalRole { x, e, y, v, w_plus_v };

inline constexpr std::array<SignalRole, 5> kAllRoles{SignalRole::x, SignalRole::e, SignalRole::y,
                                                     SignalRole::v, SignalRole::w_plus_v};

std::string_view to_string(SignalRole role);
std::optional<SignalRole> parse_role(std::string_view name);

/**
 * Independent Gaussian sources (x0, w_1..w_n, v_1..v_n) with diagonal
 * covariance. Column 0 is x0, columns 1..n are w, columns n+1..2n are v.
 */
class NoiseBasis {
 public:
  NoiseBasis(std::size_t n, double sigma_02, double sigma_w2, double sigma_v2);
  static NoiseBasis from_loop(const FeedbackLoop& loop, std::size_t n);

  std::size_t horizon() const { return n_; }
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(1 + 2 * n_); }
  double sigma_02() const { return sigma_02_; }
  double sigma_w2() const { return sigma_w2_; }
  double sigma_v2() const { return sigma_v2_; }

  static constexpr Eigen::Index message_column() { return 0; }
  Eigen::Index w_column(std::size_t i) const { return static_cast<Eigen::Index>(1 + i); }
  Eigen::Index v_column(std::size_t i) const { return static_cast<Eigen::Index>(1 + n_ + i); }

  Eigen::VectorXd variances() const;

  /// Same basis with the message variance zeroed. Conditioning a linear
  /// Gaussian model on x0 leaves covariances that do not depend on its value.
  NoiseBasis conditioned_on_message() const;

 private:
  std::size_t n_;
  double sigma_02_, sigma_w2_, sigma_v2_;
};

/// signal = coeffs * (x0, w_1..w_n, v_1..v_n); row i is time i+1.
struct LinearSignalMap {
  SignalRole role;
  Eigen::MatrixXd coeffs;

  std::size_t horizon() const { return static_cast<std::size_t>(coeffs.rows()); }
};

struct SignalMaps {
  std::optional<LinearSignalMap> x, e, y, v, w_plus_v;

  const LinearSignalMap& get(SignalRole role) const;
};

struct MapOptions {
  // Entries per dense map; 2^26 doubles = 512 MiB, i.e. n <= 5792.
  std::size_t max_entries_per_map = std::size_t{1} << 26;
};

/**
 * Exact linear maps of the loop signals over the noise basis, built by the
 * forward recursion x_i = -sum a_k x_{i-k} + sum b_k e_{i-k} + theta_i x0,
 * e_i = x_i + w_i + v_i. Well posed because b_0 = 0.
 *
 * Throws Error("horizon too large for dense maps") past the memory budget.
 */
SignalMaps build_signal_maps(const FeedbackLoop& loop, std::size_t n,
                             std::span<const SignalRole> roles = kAllRoles,
                             const MapOptions& options = {});

using CovarianceMatrix = Eigen::MatrixXd;

/// M D M^T for the basis diagonal D.
CovarianceMatrix covariance(const LinearSignalMap& map, const NoiseBasis& basis);
/// Covariance of the row-stacked maps.
CovarianceMatrix covariance(std::span<const LinearSignalMap* const> maps, const NoiseBasis& basis);

/// 1/2 ln((2 pi e)^k det sigma) via Cholesky. Throws
/// Error("degenerate covariance") unless every pivot exceeds 1e-10 * max diag.
double gaussian_entropy(const CovarianceMatrix& sigma);

/// Natural log-determinant via Cholesky, same degeneracy rule.
double log_det_spd(const CovarianceMatrix& sigma);

/// ln det(M D M^T) computed from the factor M D^{1/2} by Householder LQ,
/// without forming the covariance. Zero columns are dropped and equal w/v
/// column pairs merged; for causal maps the factor is a staircase whose zeros
/// stay exact, so unit-diagonal transforms with unstable inverses cost no
/// accuracy. Same degeneracy rule as log_det_spd.
double log_det_gram(const LinearSignalMap& map, const NoiseBasis& basis);

/// Entropy of the signal produced by `map` from the basis, via log_det_gram.
double gaussian_entropy(const LinearSignalMap& map, const NoiseBasis& basis);

/// I(y^n -> e^n) = h(e^n) - h(v^n).
double directed_info_total(const FeedbackLoop& loop, std::size_t n);
/// I(x^n -> e^n) = h(e^n) - h(w^n + v^n).
double directed_info_from_x(const FeedbackLoop& loop, std::size_t n);
/// I(y^n -> e^n | x0) = h(w^n + v^n) - h(v^n).
double directed_info_cond(const FeedbackLoop& loop, std::size_t n);

struct DefinitionOptions {
  std::size_t max_horizon = 64;
};

/**
 * Directed information from its definition, sum_i I(source^i; sink_i | sink^{i-1}).
 *
 * Each term is 1/2 ln(Var(sink_i | sink^{i-1}) / Var(sink_i | source^i, sink^{i-1})),
 * with conditional variances read off Householder LQ factors of the whitened
 * rows, stacked in time order. This equals the four-log-determinant form
 * whenever the joint blocks are nonsingular and stays defined when the source
 * is partly a function of the sink's past (as x^i is of e^{i-1}); such source
 * rows are skipped.
 */
double directed_info_definition(const LinearSignalMap& source, const LinearSignalMap& sink,
                                const NoiseBasis& basis, bool condition_on_message,
                                const DefinitionOptions& options = {});

struct FiniteInfoReport {
  std::size_t n = 0;
  double i_total = 0.0;
  double i_x = 0.0;
  double i_cond = 0.0;
  double residual = 0.0;  // i_total - i_x - i_cond

  // Definition-based values; present when n <= the oracle limit.
  std::optional<double> def_total, def_x, def_cond;
  std::optional<double> oracle_disagreement;  // max |identity - definition|

  double per_sample(double v) const { return v / static_cast<double>(n); }
};

struct FiniteOptions {
  std::size_t oracle_limit = 64;
  MapOptions maps{};
};

FiniteInfoReport finite_report(const FeedbackLoop& loop, std::size_t n,
                               const FiniteOptions& options = {});

}  // namespace infoflow
