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

#include "infoflow/gaussian_net.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Householder>

#include "infoflow/error.hpp"

namespace infoflow {

namespace {

constexpr double kPivotFloor = 1e-10;
// Relative residual below which a conditioning vector adds no new direction.
constexpr double kRankTolerance = 1e-8;

bool wants(std::span<const SignalRole> roles, SignalRole r) {
  return std::find(roles.begin(), roles.end(), r) != roles.end();
}

using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Rows of the given maps, interleaved in time (row i of every map before row
// i+1 of any), times D^{1/2}. Columns are ordered x0, w_0, v_0, w_1, v_1, ... so
// causal rows form a staircase; zero columns are dropped and w/v pairs that
// agree in every map are merged into one column with the summed variance.
RowMajorMatrix whitened_factor(std::span<const LinearSignalMap* const> maps, const NoiseBasis& basis) {
  std::vector<std::pair<Eigen::Index, double>> cols;
  const auto used = [&](Eigen::Index c) {
    return std::any_of(maps.begin(), maps.end(), [&](const LinearSignalMap* m) { return !m->coeffs.col(c).isZero(0.0); });
  };
  const auto keep = [&](Eigen::Index c, double var) {
    if (var > 0.0 && used(c)) cols.emplace_back(c, std::sqrt(var));
  };
  keep(NoiseBasis::message_column(), basis.sigma_02());
  for (std::size_t k = 0; k < basis.horizon(); ++k) {
    const Eigen::Index wc = basis.w_column(k), vc = basis.v_column(k);
    const bool same = std::all_of(maps.begin(), maps.end(),
                                  [&](const LinearSignalMap* m) { return m->coeffs.col(wc) == m->coeffs.col(vc); });
    if (same && basis.sigma_w2() > 0.0 && basis.sigma_v2() > 0.0) {
      keep(wc, basis.sigma_w2() + basis.sigma_v2());
    } else {
      keep(wc, basis.sigma_w2());
      keep(vc, basis.sigma_v2());
    }
  }

  const Eigen::Index rows = maps.front()->coeffs.rows();
  const auto stride = static_cast<Eigen::Index>(maps.size());
  RowMajorMatrix f(rows * stride, static_cast<Eigen::Index>(cols.size()));
  for (Eigen::Index j = 0; j < f.cols(); ++j) {
    const auto [c, scale] = cols[static_cast<std::size_t>(j)];
    for (Eigen::Index m = 0; m < stride; ++m)
      f.col(j)(Eigen::seqN(m, rows, stride)) = maps[static_cast<std::size_t>(m)]->coeffs.col(c) * scale;
  }
  return f;
}

// Householder LQ of f, row by row. Entry r of the result is the squared norm
// of row r orthogonal to all earlier rows, i.e. the conditional variance of
// that signal sample given the samples stacked above it. A row marked
// skippable whose relative residual is below kRankTolerance adds no direction
// and gets 0. Zeros to the right of each row's reach are never touched.
std::vector<double> staircase_pivots(RowMajorMatrix& f, const std::vector<bool>& skippable = {}) {
  const Eigen::Index rows = f.rows(), width = f.cols();
  std::vector<double> pivots(static_cast<std::size_t>(rows), 0.0);
  Eigen::VectorXd workspace(rows);
  Eigen::Index next = 0, reach = -1;
  for (Eigen::Index r = 0; r < rows; ++r) {
    Eigen::Index last = width - 1;
    while (last > reach && f(r, last) == 0.0) --last;
    reach = std::max(reach, last);
    if (reach < next) continue;

    const Eigen::Index len = reach - next + 1;
    auto seg = f.row(r).segment(next, len);
    const auto ur = static_cast<std::size_t>(r);
    if (!skippable.empty() && skippable[ur] &&
        !(seg.norm() > kRankTolerance * f.row(r).norm()))
      continue;
    double tau = 0.0, beta = 0.0;
    Eigen::VectorXd essential(len - 1);
    seg.makeHouseholder(essential, tau, beta);
    pivots[ur] = beta * beta;
    if (r + 1 < rows && len > 1)
      f.block(r + 1, next, rows - r - 1, len).applyHouseholderOnTheRight(essential, tau, workspace.data());
    ++next;
  }
  return pivots;
}

// Each column of `block` has at most one nonzero entry.
bool is_column_sparse(const Eigen::Ref<const Eigen::MatrixXd>& block) {
  for (Eigen::Index j = 0; j < block.cols(); ++j) {
    Eigen::Index nnz = 0;
    for (Eigen::Index i = 0; i < block.rows(); ++i) {
      if (block(i, j) != 0.0 && ++nnz > 1) return false;
    }
  }
  return true;
}

void accumulate(Eigen::MatrixXd& sigma, const Eigen::Ref<const Eigen::MatrixXd>& block,
                double variance) {
  if (variance == 0.0 || block.cols() == 0 || block.isZero(0.0)) return;
  if (is_column_sparse(block)) {
    for (Eigen::Index j = 0; j < block.cols(); ++j) {
      for (Eigen::Index i = 0; i < block.rows(); ++i) {
        const double m = block(i, j);
        if (m != 0.0) sigma(i, i) += variance * m * m;
      }
    }
    return;
  }
  sigma.selfadjointView<Eigen::Lower>().rankUpdate(block, variance);
}

}  // namespace

std::string_view to_string(SignalRole role) {
  switch (role) {
    case SignalRole::x: return "x";
    case SignalRole::e: return "e";
    case SignalRole::y: return "y";
    case SignalRole::v: return "v";
    case SignalRole::w_plus_v: return "w_plus_v";
  }
  return "?";
}

std::optional<SignalRole> parse_role(std::string_view name) {
  for (auto r : kAllRoles) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

NoiseBasis::NoiseBasis(std::size_t n, double sigma_02, double sigma_w2, double sigma_v2)
    : n_(n), sigma_02_(sigma_02), sigma_w2_(sigma_w2), sigma_v2_(sigma_v2) {
  if (n == 0) throw Error("noise basis horizon must be >= 1");
  if (!(sigma_02 >= 0.0 && sigma_w2 >= 0.0 && sigma_v2 >= 0.0))
    throw Error("noise basis variances must be nonnegative");
}

NoiseBasis NoiseBasis::from_loop(const FeedbackLoop& loop, std::size_t n) {
  return NoiseBasis(n, loop.sigma_02, loop.sigma_w2, loop.sigma_v2);
}

Eigen::VectorXd NoiseBasis::variances() const {
  Eigen::VectorXd d(dimension());
  d(0) = sigma_02_;
  d.segment(1, static_cast<Eigen::Index>(n_)).setConstant(sigma_w2_);
  d.tail(static_cast<Eigen::Index>(n_)).setConstant(sigma_v2_);
  return d;
}

NoiseBasis NoiseBasis::conditioned_on_message() const {
  return NoiseBasis(n_, 0.0, sigma_w2_, sigma_v2_);
}

const LinearSignalMap& SignalMaps::get(SignalRole role) const {
  const std::optional<LinearSignalMap>* slot = nullptr;
  switch (role) {
    case SignalRole::x: slot = &x; break;
    case SignalRole::e: slot = &e; break;
    case SignalRole::y: slot = &y; break;
    case SignalRole::v: slot = &v; break;
    case SignalRole::w_plus_v: slot = &w_plus_v; break;
  }
  if (slot == nullptr || !slot->has_value())
    throw Error("signal map '" + std::string(to_string(role)) + "' was not built");
  return **slot;
}

SignalMaps build_signal_maps(const FeedbackLoop& loop, std::size_t n,
                             std::span<const SignalRole> roles, const MapOptions& options) {
  require_valid(loop);
  if (n == 0) throw Error("horizon must be >= 1");
  const std::size_t dim = 1 + 2 * n;
  if (n > options.max_entries_per_map / dim) throw Error("horizon too large for dense maps");

  const NoiseBasis basis = NoiseBasis::from_loop(loop, n);
  const auto rows = static_cast<Eigen::Index>(n);
  const auto cols = static_cast<Eigen::Index>(dim);
  const auto& a = loop.plant.den;
  const auto& b = loop.plant.num;
  const std::size_t depth = std::max(a.degree(), b.degree());

  SignalMaps maps;
  const bool need_x = wants(roles, SignalRole::x);
  const bool need_e = wants(roles, SignalRole::e);
  const bool need_y = wants(roles, SignalRole::y);
  if (need_x) maps.x = LinearSignalMap{SignalRole::x, Eigen::MatrixXd::Zero(rows, cols)};
  if (need_e) maps.e = LinearSignalMap{SignalRole::e, Eigen::MatrixXd::Zero(rows, cols)};
  if (need_y) maps.y = LinearSignalMap{SignalRole::y, Eigen::MatrixXd::Zero(rows, cols)};

  if (need_x || need_e || need_y) {
    // Ring buffers of the last `depth` rows of x and e.
    const std::size_t ring = depth + 1;
    Eigen::MatrixXd xs = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(ring), cols);
    Eigen::MatrixXd es = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(ring), cols);
    Eigen::RowVectorXd xrow(cols);

    for (std::size_t i = 0; i < n; ++i) {
      xrow.setZero();
      if (i < loop.theta.size()) xrow(NoiseBasis::message_column()) = loop.theta[i];
      for (std::size_t k = 1; k <= depth && k <= i; ++k) {
        const auto slot = static_cast<Eigen::Index>((i - k) % ring);
        if (a[k] != 0.0) xrow.noalias() -= a[k] * xs.row(slot);
        if (b[k] != 0.0) xrow.noalias() += b[k] * es.row(slot);
      }
      const auto cur = static_cast<Eigen::Index>(i % ring);
      xs.row(cur) = xrow;
      es.row(cur) = xrow;
      es(cur, basis.w_column(i)) += 1.0;
      es(cur, basis.v_column(i)) += 1.0;

      const auto r = static_cast<Eigen::Index>(i);
      if (need_x) maps.x->coeffs.row(r) = xrow;
      if (need_e) maps.e->coeffs.row(r) = es.row(cur);
      if (need_y) {
        maps.y->coeffs.row(r) = xrow;
        maps.y->coeffs(r, basis.w_column(i)) += 1.0;
      }
    }
  }

  if (wants(roles, SignalRole::v)) {
    maps.v = LinearSignalMap{SignalRole::v, Eigen::MatrixXd::Zero(rows, cols)};
    for (std::size_t i = 0; i < n; ++i) maps.v->coeffs(static_cast<Eigen::Index>(i), basis.v_column(i)) = 1.0;
  }
  if (wants(roles, SignalRole::w_plus_v)) {
    maps.w_plus_v = LinearSignalMap{SignalRole::w_plus_v, Eigen::MatrixXd::Zero(rows, cols)};
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = static_cast<Eigen::Index>(i);
      maps.w_plus_v->coeffs(r, basis.w_column(i)) = 1.0;
      maps.w_plus_v->coeffs(r, basis.v_column(i)) = 1.0;
    }
  }
  return maps;
}

CovarianceMatrix covariance(std::span<const LinearSignalMap* const> maps, const NoiseBasis& basis) {
  Eigen::Index total = 0;
  for (const auto* m : maps) {
    if (m->coeffs.cols() != basis.dimension())
      throw Error("dimension mismatch between signal map and noise basis");
    total += m->coeffs.rows();
  }

  const Eigen::MatrixXd* stacked = nullptr;
  Eigen::MatrixXd storage;
  if (maps.size() == 1) {
    stacked = &maps[0]->coeffs;
  } else {
    storage.resize(total, basis.dimension());
    Eigen::Index r = 0;
    for (const auto* m : maps) {
      storage.middleRows(r, m->coeffs.rows()) = m->coeffs;
      r += m->coeffs.rows();
    }
    stacked = &storage;
  }
  const Eigen::MatrixXd& m = *stacked;
  const auto n = static_cast<Eigen::Index>(basis.horizon());

  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(total, total);
  accumulate(sigma, m.col(NoiseBasis::message_column()), basis.sigma_02());
  const auto w_block = m.middleCols(1, n);
  const auto v_block = m.middleCols(1 + n, n);
  // Signals driven by w + v carry identical w and v blocks; one update covers both.
  if (w_block == v_block) {
    accumulate(sigma, w_block, basis.sigma_w2() + basis.sigma_v2());
  } else {
    accumulate(sigma, w_block, basis.sigma_w2());
    accumulate(sigma, v_block, basis.sigma_v2());
  }
  sigma.triangularView<Eigen::StrictlyUpper>() = sigma.transpose();
  return sigma;
}

CovarianceMatrix covariance(const LinearSignalMap& map, const NoiseBasis& basis) {
  const LinearSignalMap* one[] = {&map};
  return covariance(std::span<const LinearSignalMap* const>(one), basis);
}

double log_det_spd(const CovarianceMatrix& sigma) {
  if (sigma.rows() != sigma.cols() || sigma.rows() == 0)
    throw Error("degenerate covariance (not a nonempty square matrix)");
  const double max_diag = sigma.diagonal().maxCoeff();
  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success || !(max_diag > 0.0)) throw Error("degenerate covariance");
  const auto l = llt.matrixLLT().diagonal();
  double logdet = 0.0;
  for (Eigen::Index k = 0; k < l.size(); ++k) {
    const double pivot = l(k) * l(k);
    if (!(pivot > kPivotFloor * max_diag)) throw Error("degenerate covariance");
    logdet += std::log(pivot);
  }
  return logdet;
}

double gaussian_entropy(const CovarianceMatrix& sigma) {
  const double k = static_cast<double>(sigma.rows());
  return 0.5 * (k * std::log(2.0 * std::numbers::pi * std::numbers::e) + log_det_spd(sigma));
}

double log_det_gram(const LinearSignalMap& map, const NoiseBasis& basis) {
  if (map.coeffs.cols() != basis.dimension())
    throw Error("dimension mismatch: map has " + std::to_string(map.coeffs.cols()) + " columns, basis " +
                std::to_string(basis.dimension()));
  if (map.coeffs.rows() == 0) throw Error("degenerate covariance (not a nonempty square matrix)");
  const LinearSignalMap* one[] = {&map};
  auto f = whitened_factor(one, basis);
  const double max_diag = f.rows() > 0 && f.cols() > 0 ? f.rowwise().squaredNorm().maxCoeff() : 0.0;
  if (!(max_diag > 0.0)) throw Error("degenerate covariance");
  double logdet = 0.0;
  for (double pivot : staircase_pivots(f)) {
    if (!(pivot > kPivotFloor * max_diag)) throw Error("degenerate covariance");
    logdet += std::log(pivot);
  }
  return logdet;
}

double gaussian_entropy(const LinearSignalMap& map, const NoiseBasis& basis) {
  const double k = static_cast<double>(map.coeffs.rows());
  return 0.5 * (k * std::log(2.0 * std::numbers::pi * std::numbers::e) + log_det_gram(map, basis));
}

namespace {

struct Entropies {
  double e, v, w_plus_v;
};

Entropies block_entropies(const SignalMaps& maps, const NoiseBasis& basis) {
  return {gaussian_entropy(maps.get(SignalRole::e), basis), gaussian_entropy(maps.get(SignalRole::v), basis),
          gaussian_entropy(maps.get(SignalRole::w_plus_v), basis)};
}

constexpr std::array<SignalRole, 3> kEntropyRoles{SignalRole::e, SignalRole::v, SignalRole::w_plus_v};

}  // namespace

double directed_info_total(const FeedbackLoop& loop, std::size_t n) {
  constexpr std::array roles{SignalRole::e, SignalRole::v};
  const auto maps = build_signal_maps(loop, n, roles);
  const auto basis = NoiseBasis::from_loop(loop, n);
  return gaussian_entropy(*maps.e, basis) - gaussian_entropy(*maps.v, basis);
}

double directed_info_from_x(const FeedbackLoop& loop, std::size_t n) {
  constexpr std::array roles{SignalRole::e, SignalRole::w_plus_v};
  const auto maps = build_signal_maps(loop, n, roles);
  const auto basis = NoiseBasis::from_loop(loop, n);
  return gaussian_entropy(*maps.e, basis) - gaussian_entropy(*maps.w_plus_v, basis);
}

double directed_info_cond(const FeedbackLoop& loop, std::size_t n) {
  constexpr std::array roles{SignalRole::v, SignalRole::w_plus_v};
  const auto maps = build_signal_maps(loop, n, roles);
  const auto basis = NoiseBasis::from_loop(loop, n);
  return gaussian_entropy(*maps.w_plus_v, basis) - gaussian_entropy(*maps.v, basis);
}

double directed_info_definition(const LinearSignalMap& source, const LinearSignalMap& sink,
                                const NoiseBasis& basis, bool condition_on_message,
                                const DefinitionOptions& options) {
  const std::size_t n = sink.horizon();
  if (source.horizon() != n || basis.horizon() != n ||
      source.coeffs.cols() != basis.dimension() || sink.coeffs.cols() != basis.dimension())
    throw Error("dimension mismatch between signal maps and noise basis");
  if (n > options.max_horizon) throw Error("horizon exceeds definition-oracle limit");

  const NoiseBasis effective = condition_on_message ? basis.conditioned_on_message() : basis;
  const LinearSignalMap* sink_only[] = {&sink};
  const LinearSignalMap* joint[] = {&source, &sink};  // source_i stacked above sink_i
  auto past_f = whitened_factor(sink_only, effective);
  auto joint_f = whitened_factor(joint, effective);
  std::vector<bool> skippable(2 * n);
  for (std::size_t i = 0; i < n; ++i) skippable[2 * i] = true;
  const Eigen::VectorXd sink_var = past_f.rowwise().squaredNorm();  // diag of the sink covariance
  const auto var_past = staircase_pivots(past_f);
  const auto var_joint = staircase_pivots(joint_f, skippable);

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double scale = sink_var.size() > 0 ? sink_var(static_cast<Eigen::Index>(i)) : 0.0;
    if (!(var_joint[2 * i + 1] > kPivotFloor * scale) || !(var_past[i] > kPivotFloor * scale))
      throw Error("degenerate covariance (definition oracle)");
    total += 0.5 * std::log(var_past[i] / var_joint[2 * i + 1]);
  }
  return total;
}

FiniteInfoReport finite_report(const FeedbackLoop& loop, std::size_t n, const FiniteOptions& options) {
  const bool with_oracle = n <= options.oracle_limit;
  const auto maps = with_oracle ? build_signal_maps(loop, n, kAllRoles, options.maps)
                                : build_signal_maps(loop, n, kEntropyRoles, options.maps);
  const auto basis = NoiseBasis::from_loop(loop, n);
  const auto h = block_entropies(maps, basis);

  FiniteInfoReport r;
  r.n = n;
  r.i_total = h.e - h.v;
  r.i_x = h.e - h.w_plus_v;
  r.i_cond = h.w_plus_v - h.v;
  r.residual = r.i_total - r.i_x - r.i_cond;

  if (with_oracle) {
    const DefinitionOptions def{options.oracle_limit};
    r.def_total = directed_info_definition(*maps.y, *maps.e, basis, false, def);
    r.def_x = directed_info_definition(*maps.x, *maps.e, basis, false, def);
    r.def_cond = directed_info_definition(*maps.y, *maps.e, basis, true, def);
    r.oracle_disagreement = std::max({std::abs(r.i_total - *r.def_total),
                                      std::abs(r.i_x - *r.def_x),
                                      std::abs(r.i_cond - *r.def_cond)});
  }
  return r;
}

}  // namespace infoflow
