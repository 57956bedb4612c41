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

#include "infoflow/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "infoflow/error.hpp"

namespace infoflow {

namespace {

// Drops trailing coefficients with |c| <= tol. Always leaves at least one entry.
std::vector<double> trimmed(std::vector<double> c, double tol) {
  while (c.size() > 1 && std::abs(c.back()) <= tol) c.pop_back();
  if (c.empty()) c.push_back(0.0);
  if (c.size() == 1 && std::abs(c[0]) <= tol) c[0] = 0.0;
  return c;
}

double max_abs(std::span<const double> c) {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

// Cancellation noise from a sum/difference is bounded by a few ulps of the
// largest operand coefficient.
double cancellation_tol(const Polynomial& a, const Polynomial& b) {
  return 4.0 * std::numeric_limits<double>::epsilon() *
         std::max(max_abs(a.coeffs()), max_abs(b.coeffs()));
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(trimmed(std::move(coeffs), 0.0)) {}

std::complex<double> Polynomial::eval_zinv(std::complex<double> zinv) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * zinv + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.degree(), b.degree()) + 1);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
  return Polynomial(trimmed(std::move(c), cancellation_tol(a, b)));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.degree(), b.degree()) + 1);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
  return Polynomial(trimmed(std::move(c), cancellation_tol(a, b)));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial{};
  std::vector<double> c(a.degree() + b.degree() + 1, 0.0);
  for (std::size_t i = 0; i <= a.degree(); ++i)
    for (std::size_t j = 0; j <= b.degree(); ++j) c[i + j] += a[i] * b[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& p) {
  std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
  for (double& v : c) v *= s;
  return Polynomial(std::move(c));
}

Polynomial from_roots(std::span<const double> roots) {
  Polynomial p{1.0};
  for (double r : roots) p = p * Polynomial{1.0, -r};
  return p;
}

std::vector<std::complex<double>> poly_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error("degenerate polynomial");

  const auto c = p.coeffs();
  std::size_t lead = 0;
  while (c[lead] == 0.0) ++lead;
  const std::size_t m = c.size() - 1 - lead;  // degree in z
  if (m == 0) return {};

  // z^m + a_1 z^{m-1} + ... + a_m with a_k = c[lead+k]/c[lead]
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m),
                                                    static_cast<Eigen::Index>(m));
  for (std::size_t k = 0; k < m; ++k) companion(0, static_cast<Eigen::Index>(k)) = -c[lead + 1 + k] / c[lead];
  for (std::size_t k = 1; k < m; ++k)
    companion(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k - 1)) = 1.0;

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw Error("root finding failed to converge");

  auto eval = [&](std::complex<double> z, std::complex<double>& deriv) {
    std::complex<double> val = 0.0;
    deriv = 0.0;
    for (std::size_t k = lead; k < c.size(); ++k) {
      deriv = deriv * z + val;
      val = val * z + c[k];
    }
    return val;
  };

  std::vector<std::complex<double>> roots;
  roots.reserve(m);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    std::complex<double> z = solver.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      std::complex<double> d;
      const auto f = eval(z, d);
      if (std::abs(d) == 0.0) break;
      const auto step = f / d;
      const auto cand = z - step;
      std::complex<double> dc;
      // accept only improving steps; near multiple roots Newton can wander
      if (std::abs(eval(cand, dc)) > std::abs(f)) break;
      z = cand;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    // real polynomial: snap numerically-real roots onto the axis
    if (std::abs(z.imag()) <= 1e-14 * std::max(1.0, std::abs(z))) z = {z.real(), 0.0};
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

std::vector<double> series_coefficients(const Polynomial& num, const Polynomial& den,
                                        std::size_t count) {
  if (den[0] == 0.0) throw Error("series expansion requires a nonzero constant denominator term");
  std::vector<double> out(count, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    double acc = num[i];
    const std::size_t kmax = std::min(i, den.degree());
    for (std::size_t k = 1; k <= kmax; ++k) acc -= den[k] * out[i - k];
    out[i] = acc / den[0];
  }
  return out;
}

}  // namespace infoflow
