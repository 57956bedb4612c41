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

#include <cmath>

#include "doctest.h"
#include "infoflow/error.hpp"
#include "infoflow/gaussian_net.hpp"
#include "infoflow/spectral.hpp"
#include "support/oracles.hpp"

using namespace infoflow;
using namespace infoflow::testing;

namespace {

Eigen::MatrixXd rows(std::initializer_list<std::initializer_list<double>> r) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(r.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : r) {
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Closed form for this loop model: e = T (w+v) + T q x0 with T unit lower
// triangular Toeplitz and q = theta/A, so by the matrix determinant lemma
// I(x^n -> e^n) = 1/2 ln(1 + sigma_02 |q|^2 / (sigma_w2 + sigma_v2)).
double rank_one_i_x(const FeedbackLoop& loop, std::size_t n) {
  const auto q = long_division(loop.theta, {loop.plant.den.coeffs().begin(), loop.plant.den.coeffs().end()}, n);
  double q2 = 0.0;
  for (double v : q) q2 += v * v;
  return 0.5 * std::log1p(loop.sigma_02 * q2 / (loop.sigma_w2 + loop.sigma_v2));
}

}  // namespace

TEST_CASE("NoiseBasis layout") {
  const NoiseBasis b(3, 2.0, 0.5, 0.25);
  CHECK(b.dimension() == 7);
  CHECK(b.w_column(0) == 1);
  CHECK(b.v_column(2) == 6);
  const Eigen::VectorXd d = b.variances();
  CHECK(d(0) == 2.0);
  CHECK(d(3) == 0.5);
  CHECK(d(6) == 0.25);
  CHECK(b.conditioned_on_message().variances()(0) == 0.0);
  CHECK_THROWS_AS(NoiseBasis(0, 1, 1, 1), Error);
}

TEST_CASE("build_signal_maps examples") {
  SUBCASE("open loop, n = 2") {
    auto loop = scalar_loop();
    loop.theta = {1.0, 0.0};
    const auto maps = build_signal_maps(loop, 2);
    CHECK(maps.x->coeffs == rows({{1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}));
    CHECK(maps.e->coeffs == rows({{1, 1, 0, 1, 0}, {0, 0, 1, 0, 1}}));
    CHECK(maps.y->coeffs == rows({{1, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}));
    CHECK(maps.v->coeffs == rows({{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
    CHECK(maps.w_plus_v->coeffs == rows({{0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}}));
  }
  SUBCASE("G = 0.5 z^-1, n = 2") {
    FeedbackLoop loop;
    loop.plant = {Polynomial{0.0, 0.5}, Polynomial{1.0}};
    loop.theta = {1.0, 0.0};
    const auto maps = build_signal_maps(loop, 2);
    CHECK(maps.x->coeffs.row(1) == rows({{0.5, 0.5, 0, 0.5, 0}}));
  }
  SUBCASE("system B, n = 3: w/v columns follow S, x0 column follows theta/(A-B)") {
    const auto loop = system_b();
    const std::size_t n = 3;
    const auto maps = build_signal_maps(loop, n);
    const auto s = long_division({1.0, -2.0}, {1.0, -0.5}, n);
    const auto m = long_division({1.0}, {1.0, -0.5}, n);
    const NoiseBasis basis = NoiseBasis::from_loop(loop, n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = static_cast<Eigen::Index>(i);
      CHECK(maps.e->coeffs(r, 0) == doctest::Approx(m[i]));
      for (std::size_t j = 0; j <= i; ++j) {
        CHECK(maps.e->coeffs(r, basis.w_column(j)) == doctest::Approx(s[i - j]));
        CHECK(maps.e->coeffs(r, basis.v_column(j)) == doctest::Approx(s[i - j]));
      }
    }
  }
  SUBCASE("budget") {
    CHECK_THROWS_WITH_AS(build_signal_maps(system_b(), 100, kAllRoles, MapOptions{1000}),
                         "horizon too large for dense maps", Error);
  }
}

TEST_CASE("signal map invariants") {
  RandomLoops gen(11);
  for (int t = 0; t < 10; ++t) {
    const auto loop = gen.next();
    const std::size_t n = 12;
    const auto maps = build_signal_maps(loop, n);
    const NoiseBasis basis = NoiseBasis::from_loop(loop, n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = static_cast<Eigen::Index>(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (j > i) {
          CHECK(maps.e->coeffs(r, basis.w_column(j)) == 0.0);
          CHECK(maps.e->coeffs(r, basis.v_column(j)) == 0.0);
        }
        if (j >= i) {
          CHECK(maps.x->coeffs(r, basis.w_column(j)) == 0.0);
          CHECK(maps.x->coeffs(r, basis.v_column(j)) == 0.0);
        }
      }
    }
    const Eigen::MatrixXd rebuilt = maps.x->coeffs + maps.w_plus_v->coeffs;
    CHECK(rebuilt == maps.e->coeffs);
    CHECK((maps.x->coeffs + maps.w_plus_v->coeffs - maps.v->coeffs) == maps.y->coeffs);
  }
}

TEST_CASE("covariance examples") {
  auto loop = scalar_loop();
  const auto maps3 = build_signal_maps(loop, 3);
  CHECK(covariance(*maps3.v, NoiseBasis::from_loop(loop, 3)).isApprox(Eigen::MatrixXd::Identity(3, 3)));

  const auto maps2 = build_signal_maps(loop, 2);
  CHECK(covariance(*maps2.w_plus_v, NoiseBasis::from_loop(loop, 2)).isApprox(2.0 * Eigen::MatrixXd::Identity(2, 2)));

  const auto maps1 = build_signal_maps(loop, 1);
  CHECK(covariance(*maps1.e, NoiseBasis::from_loop(loop, 1))(0, 0) == doctest::Approx(3.0));

  // dense route agrees with M D M^T and stacking keeps cross terms
  const auto loop_b = system_b();
  const auto mb = build_signal_maps(loop_b, 6);
  const NoiseBasis basis = NoiseBasis::from_loop(loop_b, 6);
  const Eigen::MatrixXd direct = mb.e->coeffs * basis.variances().asDiagonal() * mb.e->coeffs.transpose();
  CHECK((covariance(*mb.e, basis) - direct).cwiseAbs().maxCoeff() <= 1e-12);
  const LinearSignalMap* pair[] = {&*mb.x, &*mb.e};
  const auto joint = covariance(std::span<const LinearSignalMap* const>(pair), basis);
  CHECK(joint.rows() == 12);
  const Eigen::MatrixXd cross = mb.x->coeffs * basis.variances().asDiagonal() * mb.e->coeffs.transpose();
  CHECK((joint.topRightCorner(6, 6) - cross).cwiseAbs().maxCoeff() <= 1e-12);

  CHECK_THROWS_AS(covariance(*mb.e, NoiseBasis(5, 1, 1, 1)), Error);
}

TEST_CASE("gaussian_entropy") {
  CHECK(gaussian_entropy(Eigen::MatrixXd::Identity(1, 1)) == doctest::Approx(1.418939).epsilon(1e-6));
  CHECK(gaussian_entropy(Eigen::MatrixXd::Constant(1, 1, 3.0)) == doctest::Approx(1.968245).epsilon(1e-6));
  CHECK(std::abs(gaussian_entropy(2.0 * Eigen::MatrixXd::Identity(2, 2)) - (2 * half_ln_2pie() + ln2())) <= 1e-14);

  const auto loop = system_b();
  const auto maps = build_signal_maps(loop, 20);
  const auto sigma = covariance(*maps.e, NoiseBasis::from_loop(loop, 20));
  CHECK(std::abs(gaussian_entropy(sigma) - lu_entropy(sigma)) <= 1e-10);

  Eigen::MatrixXd singular(2, 2);
  singular << 1, 1, 1, 1;
  CHECK_THROWS_WITH_AS(gaussian_entropy(singular), "degenerate covariance", Error);
}

TEST_CASE("entropy-difference identities: examples") {
  const auto one = scalar_loop();
  CHECK(std::abs(directed_info_total(one, 1) - 0.5 * std::log(3.0)) <= 1e-14);
  CHECK(std::abs(directed_info_from_x(one, 1) - 0.5 * std::log(1.5)) <= 1e-14);
  CHECK(std::abs(directed_info_cond(one, 1) - 0.5 * ln2()) <= 1e-14);

  auto silent = scalar_loop();
  silent.theta = {0.0};
  CHECK(std::abs(directed_info_total(silent, 1) - 0.5 * ln2()) <= 1e-14);

  auto big = scalar_loop(4.0);
  CHECK(std::abs(directed_info_from_x(big, 1) - 0.5 * std::log(3.0)) <= 1e-14);

  CHECK(std::abs(directed_info_cond(one, 4) - 2.0 * ln2()) <= 1e-12);
  auto w3 = scalar_loop();
  w3.sigma_w2 = 3.0;
  CHECK(std::abs(directed_info_cond(w3, 2) - std::log(4.0)) <= 1e-12);

  RandomLoops gen(3);
  for (int t = 0; t < 8; ++t) {
    auto loop = gen.next();
    loop.theta = {};
    CHECK(std::abs(directed_info_from_x(loop, 64)) <= 1e-10);
    auto quiet = loop;
    quiet.sigma_w2 = 0.0;
    CHECK(std::abs(directed_info_total(quiet, 48)) <= 1e-10);
    CHECK(directed_info_cond(quiet, 17) == 0.0);
  }
}

TEST_CASE("i_x matches the rank-one closed form") {
  RandomLoops gen(8);
  for (int t = 0; t < 10; ++t) {
    const auto loop = gen.next();
    for (std::size_t n : {1u, 5u, 40u}) {
      CHECK(std::abs(directed_info_from_x(loop, n) - rank_one_i_x(loop, n)) <= 1e-9);
    }
  }
  CHECK(std::abs(directed_info_from_x(system_b(), 60) - rank_one_i_x(system_b(), 60)) <= 1e-9);
}

TEST_CASE("directed_info_definition") {
  const auto loop = scalar_loop();
  const auto maps = build_signal_maps(loop, 1);
  const auto basis = NoiseBasis::from_loop(loop, 1);
  CHECK(std::abs(directed_info_definition(*maps.y, *maps.e, basis, false) - 0.5 * std::log(3.0)) <= 1e-14);
  CHECK(std::abs(directed_info_definition(*maps.x, *maps.e, basis, false) - 0.5 * std::log(1.5)) <= 1e-14);
  CHECK(std::abs(directed_info_definition(*maps.y, *maps.e, basis, true) - 0.5 * ln2()) <= 1e-14);

  const auto big = build_signal_maps(loop, 70);
  CHECK_THROWS_AS(directed_info_definition(*big.y, *big.e, NoiseBasis::from_loop(loop, 70), false), Error);
  CHECK_THROWS_AS(directed_info_definition(*big.y, *maps.e, basis, false), Error);
}

TEST_CASE("definition oracle matches the four-log-det formula where blocks are nonsingular") {
  // y^i and e^{i-1} are jointly nondegenerate when sigma_w2 > 0, so the
  // textbook determinant form applies directly.
  RandomLoops gen(21);
  for (int t = 0; t < 6; ++t) {
    const auto loop = gen.next();
    const std::size_t n = 8;
    const auto maps = build_signal_maps(loop, n);
    const auto basis = NoiseBasis::from_loop(loop, n);
    const LinearSignalMap* stack[] = {&*maps.y, &*maps.e};
    const auto joint = covariance(std::span<const LinearSignalMap* const>(stack), basis);
    double expected = 0.0;
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i) {
      std::vector<Eigen::Index> x, z;
      for (Eigen::Index k = 0; k <= i; ++k) x.push_back(k);
      for (Eigen::Index k = 0; k < i; ++k) z.push_back(static_cast<Eigen::Index>(n) + k);
      expected += cmi_log_det(joint, x, {static_cast<Eigen::Index>(n) + i}, z);
    }
    CHECK(std::abs(directed_info_definition(*maps.y, *maps.e, basis, false) - expected) <= 1e-9);
  }
}

TEST_CASE("finite_report") {
  SUBCASE("scalar case") {
    const auto r = finite_report(scalar_loop(), 1);
    CHECK(std::abs(r.i_total - 0.5 * std::log(3.0)) <= 1e-14);
    CHECK(std::abs(r.i_x - 0.5 * std::log(1.5)) <= 1e-14);
    CHECK(std::abs(r.i_cond - 0.5 * ln2()) <= 1e-14);
    CHECK(std::abs(r.residual) <= 1e-15);
    REQUIRE(r.oracle_disagreement);
    CHECK(*r.oracle_disagreement <= 1e-14);
  }
  SUBCASE("system B, n = 64") {
    const auto r = finite_report(system_b(), 64);
    CHECK(std::abs(r.residual) <= 1e-8);
    REQUIRE(r.oracle_disagreement);
    CHECK(*r.oracle_disagreement <= 1e-7);
  }
  SUBCASE("no channel noise on C1") {
    auto loop = system_b();
    loop.sigma_w2 = 0.0;
    const auto r = finite_report(loop, 16);
    CHECK(r.i_cond == 0.0);
    CHECK(r.i_total == r.i_x);
  }
  SUBCASE("oracle skipped above the limit") {
    FiniteOptions opts;
    opts.oracle_limit = 8;
    CHECK_FALSE(finite_report(system_b(), 9, opts).oracle_disagreement.has_value());
  }
}

TEST_CASE("finite-horizon invariants over randomized loops") {
  RandomLoops gen(404);
  for (int t = 0; t < 8; ++t) {
    const auto loop = gen.next();
    for (std::size_t n : {3u, 24u}) {
      const auto r = finite_report(loop, n);
      CHECK(std::abs(r.residual) <= 1e-8);
      CHECK(*r.oracle_disagreement <= 1e-7);
      CHECK(r.i_total >= -1e-8);
      CHECK(r.i_x >= -1e-8);
      CHECK(r.i_cond >= -1e-8);
      CHECK(std::abs(r.per_sample(r.i_cond) - 0.5 * std::log1p(loop.sigma_w2 / loop.sigma_v2)) <= 1e-12);
    }
  }
}

TEST_CASE("late diagonal of Sigma_e approaches the stationary variance") {
  RandomLoops gen(1234);
  for (const auto& loop : {system_b(), gen.next(), gen.next()}) {
    const std::size_t n = 1024;
    constexpr std::array roles{SignalRole::e};
    const auto maps = build_signal_maps(loop, n, roles);
    const auto sigma = covariance(*maps.e, NoiseBasis::from_loop(loop, n));
    const double stationary = psd_variance(output_psd(loop));
    CHECK(std::abs(sigma(1023, 1023) - stationary) <= 0.01 * stationary);
  }
}

TEST_CASE("square-root log-determinant") {
  RandomLoops gen(99);
  for (int t = 0; t < 6; ++t) {
    const auto loop = gen.next();
    const std::size_t n = 16;
    const auto maps = build_signal_maps(loop, n);
    const auto basis = NoiseBasis::from_loop(loop, n);
    for (SignalRole role : {SignalRole::e, SignalRole::y, SignalRole::v, SignalRole::w_plus_v}) {
      const auto& map = maps.get(role);
      CHECK(std::abs(log_det_gram(map, basis) - lu_log_det(covariance(map, basis))) <= 1e-8);
    }
  }

  // e = S (w + v) is a unit-diagonal transform; S^-1 grows like the unstable
  // pole, which defeats a Cholesky of the formed covariance but not the factor.
  auto silent = system_b();
  silent.theta = {};
  const std::size_t n = 256;
  constexpr std::array roles{SignalRole::e, SignalRole::w_plus_v};
  const auto maps = build_signal_maps(silent, n, roles);
  const auto basis = NoiseBasis::from_loop(silent, n);
  CHECK(std::abs(gaussian_entropy(*maps.e, basis) - gaussian_entropy(*maps.w_plus_v, basis)) <= 1e-10);

  auto open = scalar_loop();
  open.theta = {1.0, 0.0};
  const auto xmap = build_signal_maps(open, 2);
  CHECK_THROWS_WITH_AS(log_det_gram(*xmap.x, NoiseBasis::from_loop(open, 2)), "degenerate covariance", Error);
  CHECK_THROWS_AS(log_det_gram(*xmap.x, NoiseBasis(3, 1, 1, 1)), Error);
}
