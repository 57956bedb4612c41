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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace infoflow {

/**
 * Real polynomial in the delay operator, c0 + c1 z^-1 + ... + cd z^-d.
 *
 * Coefficients are stored in ascending powers of z^-1 and trimmed so that the
 * trailing coefficient is nonzero. The zero polynomial is stored as {0}.
 */
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  explicit Polynomial(std::vector<double> coeffs);
  Polynomial(std::initializer_list<double> coeffs)
      : Polynomial(std::vector<double>(coeffs)) {}

  std::span<const double> coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

  /// Coefficient of z^-k; zero beyond the degree.
  double operator[](std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : 0.0;
  }

  /// Evaluates sum_k c_k * zinv^k.
  std::complex<double> eval_zinv(std::complex<double> zinv) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<double> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(double s, const Polynomial& p);

/// Builds prod_k (1 - r_k z^-1) from real roots r_k (in z).
Polynomial from_roots(std::span<const double> roots);

/**
 * Roots in z of z^d p(z^-1), i.e. the finite roots of c0 z^d + ... + cd.
 *
 * Leading zero coefficients (c0 = 0, ...) correspond to roots at infinity and
 * are not returned. Computed as companion-matrix eigenvalues followed by a
 * Newton polish on the original coefficients.
 *
 * Throws Error("degenerate polynomial") for the zero polynomial.
 */
std::vector<std::complex<double>> poly_roots(const Polynomial& p);

/// First `count` coefficients of the power series num/den in z^-1 (den[0] != 0).
std::vector<double> series_coefficients(const Polynomial& num, const Polynomial& den,
                                        std::size_t count);

}  // namespace infoflow
