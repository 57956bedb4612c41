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

#include "infoflow/lti.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "infoflow/error.hpp"

namespace infoflow {

namespace {

constexpr double kUnitCircleTol = 1e-12;

std::complex<double> unit_zinv(double theta) {
  return std::polar(1.0, -2.0 * std::numbers::pi * theta);
}

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

std::string fmt_root(std::complex<double> r) {
  std::ostringstream os;
  os.precision(6);
  os << r.real();
  if (r.imag() != 0.0) os << (r.imag() < 0 ? "-" : "+") << std::abs(r.imag()) << "j";
  return os.str();
}

}  // namespace

std::string ValidationReport::to_string() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

double spectral_radius(const Polynomial& p) {
  double r = 0.0;
  for (auto z : poly_roots(p)) r = std::max(r, std::abs(z));
  return r;
}

ValidationReport validate_plant(const TransferFunction& g) {
  ValidationReport report;
  auto& out = report.violations;

  if (!all_finite(g.num.coeffs()) || !all_finite(g.den.coeffs())) {
    out.emplace_back("non-finite plant coefficient");
    return report;
  }
  if (g.den.is_zero()) {
    out.emplace_back("plant denominator is identically zero");
    return report;
  }
  if (g.den[0] != 1.0) out.emplace_back("plant denominator constant coefficient must be 1");
  if (g.num[0] != 0.0)
    out.emplace_back("plant not strictly proper (numerator constant coefficient must be 0)");

  const auto poles = poly_roots(g.den);
  for (auto p : poles) {
    if (std::abs(std::abs(p) - 1.0) <= kStabilityMargin) {
      out.push_back("open-loop pole on unit circle at " + fmt_root(p));
    }
  }
  if (!g.num.is_zero()) {
    const auto zeros = poly_roots(g.num);
    for (auto p : poles) {
      for (auto z : zeros) {
        if (std::abs(p - z) <= kCancellationTol) {
          out.push_back("pole-zero cancellation at " + fmt_root(p));
        }
      }
    }
  }

  // The remaining checks need a well-formed loop polynomial.
  if (g.den[0] != 0.0 && g.num[0] == 0.0) {
    const auto cl = closed_loop_char_poly(g);
    for (auto r : poly_roots(cl)) {
      if (std::abs(r) >= 1.0 - kStabilityMargin) {
        out.push_back("closed loop unstable (pole " + fmt_root(r) + ", |p| = " +
                      std::to_string(std::abs(r)) + ")");
      }
    }
  }
  return report;
}

ValidationReport validate_loop(const FeedbackLoop& loop) {
  ValidationReport report = validate_plant(loop.plant);
  auto& out = report.violations;
  if (!(loop.sigma_v2 > 0.0)) out.emplace_back("noiseless channel C2: sigma_v2 must be > 0");
  if (!(loop.sigma_w2 >= 0.0)) out.emplace_back("sigma_w2 must be >= 0");
  if (!(loop.sigma_02 > 0.0)) out.emplace_back("sigma_02 must be > 0");
  if (!std::isfinite(loop.sigma_w2) || !std::isfinite(loop.sigma_v2) ||
      !std::isfinite(loop.sigma_02))
    out.emplace_back("non-finite noise variance");
  if (!all_finite(loop.theta)) out.emplace_back("non-finite message injection coefficient");
  return report;
}

void require_valid(const FeedbackLoop& loop) {
  const auto report = validate_loop(loop);
  if (!report.ok()) throw InvalidLoop(report.to_string());
}

std::complex<double> freq_response(const TransferFunction& g, double theta) {
  const auto zinv = unit_zinv(theta);
  const auto a = g.den.eval_zinv(zinv);
  if (std::abs(a) < kUnitCircleTol) throw Error("open-loop pole on unit circle");
  return g.num.eval_zinv(zinv) / a;
}

std::complex<double> sensitivity(const TransferFunction& g, double theta) {
  const auto zinv = unit_zinv(theta);
  const auto cl = closed_loop_char_poly(g).eval_zinv(zinv);
  if (std::abs(cl) < kUnitCircleTol) throw Error("closed-loop pole on unit circle");
  return g.den.eval_zinv(zinv) / cl;
}

Polynomial closed_loop_char_poly(const TransferFunction& g) {
  auto p = g.den - g.num;
  if (p.is_zero()) throw Error("degenerate loop (G == 1)");
  return p;
}

std::vector<double> impulse_response(const TransferFunction& g, std::size_t n) {
  if (n == 0) throw Error("impulse response horizon must be >= 1");
  auto c = series_coefficients(g.num, g.den, n + 1);
  c.erase(c.begin());
  return c;
}

}  // namespace infoflow
