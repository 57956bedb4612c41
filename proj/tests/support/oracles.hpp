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

// Test-only reference computations. Nothing here calls into the code path it
// is used to check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "infoflow/lti.hpp"

namespace infoflow::testing {

inline double ln2() { return std::log(2.0); }
inline double half_ln_2pie() { return 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e); }

/// System B: G = -1.5 z^-1 / (1 - 2 z^-1); S = (1 - 2z^-1)/(1 - 0.5z^-1), |S| = 2.
inline FeedbackLoop system_b() {
  FeedbackLoop loop;
  loop.plant = {Polynomial{0.0, -1.5}, Polynomial{1.0, -2.0}};
  return loop;
}

/// Open-loop poles {1.25, 1.6}, closed-loop poles {0.5, 0.4}.
inline FeedbackLoop two_unstable_poles() {
  FeedbackLoop loop;
  loop.plant = {Polynomial{0.0, -1.95, 1.8}, Polynomial{1.0, -2.85, 2.0}};
  return loop;
}

inline FeedbackLoop scalar_loop(double sigma_02 = 1.0) {
  FeedbackLoop loop;  // G = 0, theta = (1)
  loop.sigma_02 = sigma_02;
  return loop;
}

/// Roots of c0 x^2 + c1 x + c2 by the quadratic formula.
inline std::vector<std::complex<double>> quadratic_roots(double c0, double c1, double c2) {
  const std::complex<double> disc = std::sqrt(std::complex<double>(c1 * c1 - 4.0 * c0 * c2));
  return {(-c1 - disc) / (2.0 * c0), (-c1 + disc) / (2.0 * c0)};
}

/// Power series of num/den by schoolbook long division, written out directly.
inline std::vector<double> long_division(const std::vector<double>& num, const std::vector<double>& den,
                                         std::size_t count) {
  std::vector<double> rem(count + den.size(), 0.0);
  for (std::size_t k = 0; k < num.size() && k < rem.size(); ++k) rem[k] = num[k];
  std::vector<double> q(count, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    q[i] = rem[i] / den[0];
    for (std::size_t k = 0; k < den.size(); ++k) rem[i + k] -= q[i] * den[k];
  }
  return q;
}

/// ln det by full-pivot LU (independent of the Cholesky route).
inline double lu_log_det(const Eigen::MatrixXd& m) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  double s = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) s += std::log(std::abs(lu.matrixLU()(i, i)));
  return s;
}

inline double lu_entropy(const Eigen::MatrixXd& sigma) {
  return static_cast<double>(sigma.rows()) * half_ln_2pie() + 0.5 * lu_log_det(sigma);
}

/// Sub-covariance of the given index set.
inline Eigen::MatrixXd pick(const Eigen::MatrixXd& sigma, const std::vector<Eigen::Index>& idx) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = sigma(idx[a], idx[b]);
  return out;
}

inline double lu_log_det_or_zero(const Eigen::MatrixXd& m) { return m.rows() == 0 ? 0.0 : lu_log_det(m); }

/// I(X;Y|Z) = 1/2 [ln|S_XZ| + ln|S_YZ| - ln|S_Z| - ln|S_XYZ|] for index sets into a joint covariance.
inline double cmi_log_det(const Eigen::MatrixXd& joint, const std::vector<Eigen::Index>& x,
                          const std::vector<Eigen::Index>& y, const std::vector<Eigen::Index>& z) {
  auto cat = [](std::vector<Eigen::Index> a, const std::vector<Eigen::Index>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  return 0.5 * (lu_log_det_or_zero(pick(joint, cat(x, z))) + lu_log_det_or_zero(pick(joint, cat(y, z))) -
                lu_log_det_or_zero(pick(joint, z)) - lu_log_det_or_zero(pick(joint, cat(cat(x, y), z))));
}

inline Polynomial poly_from_roots(const std::vector<double>& real_roots,
                                  const std::vector<std::complex<double>>& upper_pairs) {
  Polynomial p{1.0};
  for (double r : real_roots) p = p * Polynomial{1.0, -r};
  for (auto z : upper_pairs) p = p * Polynomial{1.0, -2.0 * z.real(), std::norm(z)};
  return p;
}

/**
 * Randomized closed-loop-stable plants of degree <= 3 with at most one real
 * unstable open-loop pole, closed-loop poles of radius <= 0.8, and variances
 * in [0.5, 2]. Built as B = A - C from chosen open-loop (A) and closed-loop (C)
 * pole sets, so B[0] = 0 by construction.
 */
class RandomLoops {
 public:
  explicit RandomLoops(std::uint64_t seed) : gen_(seed) {}

  FeedbackLoop next(bool allow_unstable = true) {
    for (;;) {
      const int degree = 1 + static_cast<int>(uniform(0.0, 3.0));
      const bool unstable = allow_unstable && uniform(0.0, 1.0) < 0.5;
      const Polynomial a = random_poly(degree, unstable ? uniform(1.2, 2.5) * sign() : 0.0, 0.1, 0.9);
      const Polynomial c = random_poly(degree, 0.0, 0.0, 0.8);
      FeedbackLoop loop;
      loop.plant = {a - c, a};
      loop.sigma_w2 = uniform(0.5, 2.0);
      loop.sigma_v2 = uniform(0.5, 2.0);
      loop.sigma_02 = uniform(0.5, 2.0);
      if (!loop.plant.num.is_zero() && validate_loop(loop).ok()) return loop;
    }
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

 private:
  double sign() { return uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0; }

  // `degree` roots; the first is `forced` when nonzero, the rest have radius in [rmin, rmax].
  Polynomial random_poly(int degree, double forced, double rmin, double rmax) {
    std::vector<double> reals;
    std::vector<std::complex<double>> pairs;
    int left = degree;
    if (forced != 0.0) {
      reals.push_back(forced);
      --left;
    }
    while (left > 0) {
      const double r = uniform(rmin, rmax);
      if (left >= 2 && uniform(0.0, 1.0) < 0.5) {
        pairs.push_back(std::polar(r, uniform(0.2, 2.9)));
        left -= 2;
      } else {
        reals.push_back(r * sign());
        --left;
      }
    }
    return poly_from_roots(reals, pairs);
  }

  std::mt19937_64 gen_;
};

}  // namespace infoflow::testing
