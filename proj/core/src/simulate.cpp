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

#include "infoflow/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>
#include <random>

#include <fftw3.h>

#include "infoflow/error.hpp"

namespace infoflow {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial)));
}

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

// RAII wrappers for the FFTW plan and buffers.
struct FftwPlan {
  std::size_t m;
  double* in;
  fftw_complex* out;
  fftw_plan plan;

  explicit FftwPlan(std::size_t len)
      : m(len),
        in(fftw_alloc_real(len)),
        out(fftw_alloc_complex(len / 2 + 1)),
        plan(fftw_plan_dft_r2c_1d(static_cast<int>(len), in, out, FFTW_ESTIMATE)) {}
  ~FftwPlan() {
    fftw_destroy_plan(plan);
    fftw_free(in);
    fftw_free(out);
  }
  FftwPlan(const FftwPlan&) = delete;
  FftwPlan& operator=(const FftwPlan&) = delete;
};

}  // namespace

Eigen::MatrixXd TrajectoryBatch::signal(SignalRole role) const {
  switch (role) {
    case SignalRole::x: return x;
    case SignalRole::e: return e;
    case SignalRole::y: return y;
    case SignalRole::v: return v;
    case SignalRole::w_plus_v: return w + v;
  }
  throw Error("unknown signal role");
}

Eigen::VectorXd TrajectoryBatch::basis_draw(std::size_t trial) const {
  const auto t = static_cast<Eigen::Index>(trial);
  const auto len = static_cast<Eigen::Index>(n);
  Eigen::VectorXd b(1 + 2 * len);
  b(0) = x0(t);
  b.segment(1, len) = w.row(t).transpose();
  b.tail(len) = v.row(t).transpose();
  return b;
}

TrajectoryBatch simulate_loop(const SimulationConfig& config) {
  require_valid(config.loop);
  if (config.n == 0 || config.trials == 0) throw Error("simulation needs n >= 1 and trials >= 1");

  const auto& loop = config.loop;
  const auto& a = loop.plant.den;
  const auto& b = loop.plant.num;
  const std::size_t n = config.n;
  const auto rows = static_cast<Eigen::Index>(config.trials);
  const auto cols = static_cast<Eigen::Index>(n);

  TrajectoryBatch batch;
  batch.n = n;
  batch.trials = config.trials;
  batch.seed = config.seed;
  batch.generator = kGeneratorId;
  batch.e.resize(rows, cols);
  batch.x.resize(rows, cols);
  batch.y.resize(rows, cols);
  batch.w.resize(rows, cols);
  batch.v.resize(rows, cols);
  batch.x0.resize(rows);

  const double sd0 = std::sqrt(loop.sigma_02);
  const double sdw = std::sqrt(loop.sigma_w2);
  const double sdv = std::sqrt(loop.sigma_v2);
  std::vector<double> xs(n), es(n);

  for (Eigen::Index t = 0; t < rows; ++t) {
    std::mt19937_64 gen(trial_seed(config.seed, static_cast<std::size_t>(t)));
    std::normal_distribution<double> normal(0.0, 1.0);
    const double x0 = sd0 * normal(gen);
    batch.x0(t) = x0;
    for (Eigen::Index i = 0; i < cols; ++i) {
      batch.w(t, i) = sdw * normal(gen);
      batch.v(t, i) = sdv * normal(gen);
    }

    for (std::size_t i = 0; i < n; ++i) {
      double xi = i < loop.theta.size() ? loop.theta[i] * x0 : 0.0;
      for (std::size_t k = 1; k <= i && k <= a.degree(); ++k) xi -= a[k] * xs[i - k];
      for (std::size_t k = 1; k <= i && k <= b.degree(); ++k) xi += b[k] * es[i - k];
      const auto c = static_cast<Eigen::Index>(i);
      xs[i] = xi;
      es[i] = xi + batch.w(t, c) + batch.v(t, c);
      batch.x(t, c) = xi;
      batch.e(t, c) = es[i];
      batch.y(t, c) = xi + batch.w(t, c);
    }
  }
  return batch;
}

std::vector<double> empirical_covariance(const TrajectoryBatch& batch, SignalRole role,
                                         std::size_t max_lag) {
  const std::size_t tail = batch.n / 2;
  if (max_lag >= tail) throw Error("insufficient tail");
  const Eigen::MatrixXd s = batch.signal(role).rightCols(static_cast<Eigen::Index>(tail));
  const double mean = s.mean();

  std::vector<double> out(max_lag + 1);
  for (std::size_t lag = 0; lag <= max_lag; ++lag) {
    const auto len = static_cast<Eigen::Index>(tail - lag);
    const auto lead = s.leftCols(len).array() - mean;
    const auto lagged = s.middleCols(static_cast<Eigen::Index>(lag), len).array() - mean;
    const double count = static_cast<double>(s.rows() * len);
    out[lag] = (lead * lagged).sum() / (count - 1.0);
  }
  return out;
}

SpectralDensity SampledPsd::as_density() const {
  auto th = theta;
  auto d = density;
  return SpectralDensity(name, [th, d](double t) {
    const std::size_t m = th.size();
    const double step = 1.0 / static_cast<double>(m);
    double u = (t - th.front()) / step;
    u -= std::floor(u / static_cast<double>(m)) * static_cast<double>(m);
    const auto k = static_cast<std::size_t>(std::floor(u)) % m;
    const double frac = u - std::floor(u);
    return (1.0 - frac) * d[k] + frac * d[(k + 1) % m];
  });
}

SampledPsd periodogram_psd(const TrajectoryBatch& batch, SignalRole role) {
  if (!is_power_of_two(batch.n) || batch.n < 256)
    throw Error("periodogram needs n a power of two >= 256");
  if (batch.trials < 100) throw Error("periodogram needs at least 100 trials");

  const std::size_t m = batch.n / 2;
  const Eigen::MatrixXd s = batch.signal(role);
  const auto tail_start = static_cast<Eigen::Index>(batch.n - m);

  FftwPlan fft(m);
  std::vector<double> acc(m / 2 + 1, 0.0);
  for (Eigen::Index t = 0; t < s.rows(); ++t) {
    for (std::size_t i = 0; i < m; ++i) fft.in[i] = s(t, tail_start + static_cast<Eigen::Index>(i));
    fftw_execute(fft.plan);
    for (std::size_t k = 0; k <= m / 2; ++k) {
      acc[k] += fft.out[k][0] * fft.out[k][0] + fft.out[k][1] * fft.out[k][1];
    }
  }
  const double norm = 1.0 / (static_cast<double>(m) * static_cast<double>(s.rows()));

  SampledPsd psd;
  psd.name = "periodogram_" + std::string(to_string(role));
  psd.theta.resize(m);
  psd.density.resize(m);
  // grid k = -m/2 .. m/2-1; a real signal's periodogram is even in k
  for (std::size_t j = 0; j < m; ++j) {
    const auto k = static_cast<long>(j) - static_cast<long>(m / 2);
    psd.theta[j] = static_cast<double>(k) / static_cast<double>(m);
    psd.density[j] = acc[static_cast<std::size_t>(std::labs(k))] * norm;
  }
  return psd;
}

double rms_relative_error(const SampledPsd& estimate, const SpectralDensity& reference) {
  double sum = 0.0;
  for (std::size_t j = 0; j < estimate.theta.size(); ++j) {
    const double ref = reference(estimate.theta[j]);
    const double rel = (estimate.density[j] - ref) / ref;
    sum += rel * rel;
  }
  return std::sqrt(sum / static_cast<double>(estimate.theta.size()));
}

void write_batch_csv(std::ostream& os, const TrajectoryBatch& batch, SignalRole role) {
  const auto s = batch.signal(role);
  const auto old = os.precision(17);
  os << "# signal=" << to_string(role) << " seed=" << batch.seed << " generator=" << batch.generator
     << '\n';
  os << "trial";
  for (std::size_t i = 1; i <= batch.n; ++i) os << ",t" << i;
  os << '\n';
  for (Eigen::Index t = 0; t < s.rows(); ++t) {
    os << t;
    for (Eigen::Index i = 0; i < s.cols(); ++i) os << ',' << s(t, i);
    os << '\n';
  }
  os.precision(old);
}

void write_periodogram_csv(std::ostream& os, const SampledPsd& estimate,
                           const SpectralDensity& reference) {
  const auto old = os.precision(17);
  os << "theta,periodogram,analytic\n";
  for (std::size_t j = 0; j < estimate.theta.size(); ++j) {
    os << estimate.theta[j] << ',' << estimate.density[j] << ',' << reference(estimate.theta[j])
       << '\n';
  }
  os.precision(old);
}

void write_covariance_csv(std::ostream& os, const std::vector<double>& lags) {
  const auto old = os.precision(17);
  os << "lag,covariance\n";
  for (std::size_t k = 0; k < lags.size(); ++k) os << k << ',' << lags[k] << '\n';
  os.precision(old);
}

}  // namespace infoflow
