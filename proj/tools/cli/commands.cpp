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

#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli/config.hpp"
#include "infoflow/gaussian_net.hpp"
#include "infoflow/json.hpp"
#include "infoflow/rates.hpp"
#include "infoflow/simulate.hpp"
#include "infoflow/spectral.hpp"

namespace infoflow::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxCovarianceLag = 32;

const char* kHelpFooter = R"(Config: JSON file with keys plant{num,den}, noise{sigma_w2,sigma_v2},
message{sigma_02,theta}, quadrature{panels,nodes,tolerance}, horizon, trials, seed.
Coefficient arrays are ascending powers of z^-1; loop: e = x + w + v, A x = B e + theta x0.

Exit codes: 0 success/PASS, 1 FAIL (thresholds exceeded or degenerate computation),
2 invalid input (bad config, unstable loop, usage error).

CSV outputs:
  sweep:            n,i_total_per_n,i_x_per_n,i_cond_per_n,residual
                    (last row n=inf holds the closed-form rates and their residual)
  periodogram_e:    theta,periodogram,analytic
  covariance_e:     lag,covariance
  batch_<signal>:   trial,t1..tn  (--export-batch; signals e, x, y)
All information values are in nats.)";

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json run_report(const std::string& command, const LoopConfig& config) {
  return json{{"schema_version", kReportSchemaVersion},
              {"tool", "infoflow"},
              {"version", INFOFLOW_VERSION},
              {"command", command},
              {"timestamp", utc_timestamp()},
              {"config", echo_config(config)},
              {"results", json::object()}};
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void row(std::ostream& out, const std::string& label, const std::string& value) {
  out << "  " << std::left << std::setw(44) << label << value << '\n';
}

void emit_json(const json& report, const std::string& path, std::ostream& out) {
  if (path.empty()) return;
  if (path == "-") {
    out << report.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write JSON report to '" + path + "'");
  f << report.dump(2) << '\n';
}

// Loads and validates; invalid input is reported and mapped to exit code 2.
struct Loaded {
  LoopConfig config;
  bool ok = false;
};

Loaded load_valid(const std::string& path, std::ostream& err) {
  Loaded l;
  l.config = load_config(path);
  const auto report = validate_loop(l.config.loop);
  if (!report.ok()) {
    err << "invalid loop: " << report.to_string() << '\n';
    return l;
  }
  l.ok = true;
  return l;
}

int cmd_analyze(const std::string& path, const std::string& json_path, std::ostream& out,
                std::ostream& err) {
  const auto l = load_valid(path, err);
  if (!l.ok) return kExitInvalid;
  const auto& c = l.config;

  const auto rates = closed_form_rates(c.loop, c.quad);
  const double bode = bode_integral_poles(c.loop.plant);

  auto report = run_report("analyze", c);
  report["results"]["rates"] = rates;
  report["results"]["bode_poles"] = bode;
  report["results"]["bode_difference"] = rates.log_sens_term - bode;

  if (json_path != "-") {
    out << "closed-form information rates (nats/sample)\n";
    row(out, "r_x     = int ln|S| dtheta", fixed6(rates.r_x));
    row(out, "r_cond  = 1/2 ln(1 + sigma_w2/sigma_v2)", fixed6(rates.r_cond));
    row(out, "r_total = r_x + r_cond", fixed6(rates.r_total));
    row(out, "r_total via PSD entropy-rate difference", fixed6(rates.r_total_psd));
    row(out, "conservation residual", sci(rates.conservation_residual));
    row(out, "Bode: sum ln|unstable open-loop poles|", fixed6(bode));
    row(out, "Bode: |int ln|S| - sum ln|p||", sci(std::abs(rates.log_sens_term - bode)));
  }
  emit_json(report, json_path, out);
  return kExitOk;
}

void print_finite(std::ostream& out, const FiniteInfoReport& r) {
  out << "finite-horizon directed information, n = " << r.n << " (nats)\n";
  row(out, "I(y^n -> e^n)      = h(e^n) - h(v^n)", fixed6(r.i_total));
  row(out, "I(x^n -> e^n)      = h(e^n) - h(w^n+v^n)", fixed6(r.i_x));
  row(out, "I(y^n -> e^n | x0) = h(w^n+v^n) - h(v^n)", fixed6(r.i_cond));
  row(out, "per sample: I(y->e)/n", fixed6(r.per_sample(r.i_total)));
  row(out, "per sample: I(x->e)/n", fixed6(r.per_sample(r.i_x)));
  row(out, "per sample: I(y->e|x0)/n", fixed6(r.per_sample(r.i_cond)));
  row(out, "conservation residual", sci(r.residual));
  if (r.oracle_disagreement) {
    row(out, "definition: I(y^n -> e^n)", fixed6(*r.def_total));
    row(out, "definition: I(x^n -> e^n)", fixed6(*r.def_x));
    row(out, "definition: I(y^n -> e^n | x0)", fixed6(*r.def_cond));
    row(out, "max |identity - definition|", sci(*r.oracle_disagreement));
  }
}

int cmd_finite(const std::string& path, std::size_t n_opt, const std::string& json_path,
               bool verify, std::ostream& out, std::ostream& err) {
  const auto l = load_valid(path, err);
  if (!l.ok) return kExitInvalid;
  const auto& c = l.config;
  const std::size_t n = n_opt > 0 ? n_opt : c.horizon;
  if (n == 0) {
    err << "usage error: horizon n must be >= 1\n";
    return kExitInvalid;
  }

  const auto r = finite_report(c.loop, n);
  auto report = run_report(verify ? "verify" : "finite", c);
  report["results"]["finite"] = r;

  int code = kExitOk;
  if (verify) {
    const bool residual_ok = std::abs(r.residual) <= kResidualThreshold;
    const bool oracle_ok = !r.oracle_disagreement || *r.oracle_disagreement <= kOracleThreshold;
    code = residual_ok && oracle_ok ? kExitOk : kExitFail;
    report["results"]["thresholds"] = {{"residual", kResidualThreshold}, {"oracle", kOracleThreshold}};
    report["results"]["status"] = code == kExitOk ? "PASS" : "FAIL";
  }
  if (json_path != "-") {
    print_finite(out, r);
    if (verify) {
      if (!r.oracle_disagreement) out << "  (definition oracle skipped: n above oracle limit)\n";
      out << (code == kExitOk ? "PASS" : "FAIL") << ": |residual| <= " << sci(kResidualThreshold)
          << ", oracle disagreement <= " << sci(kOracleThreshold) << '\n';
    }
  }
  emit_json(report, json_path, out);
  return code;
}

int cmd_sweep(const std::string& path, const std::vector<std::size_t>& ns, const std::string& csv_path,
              std::ostream& out, std::ostream& err) {
  if (ns.empty() || ns.front() == 0 || !std::is_sorted(ns.begin(), ns.end()) ||
      std::adjacent_find(ns.begin(), ns.end()) != ns.end()) {
    err << "usage error: --n must be a strictly ascending list of horizons >= 1\n";
    return kExitInvalid;
  }
  const auto l = load_valid(path, err);
  if (!l.ok) return kExitInvalid;
  const auto& c = l.config;

  std::ofstream file;
  std::ostream* sink = &out;
  if (!csv_path.empty() && csv_path != "-") {
    file.open(csv_path);
    if (!file) throw Error("cannot write CSV to '" + csv_path + "'");
    sink = &file;
  }
  auto& os = *sink;
  const auto old = os.precision(17);
  os << "n,i_total_per_n,i_x_per_n,i_cond_per_n,residual\n";
  FiniteOptions opts;
  opts.oracle_limit = 0;
  for (std::size_t n : ns) {
    const auto r = finite_report(c.loop, n, opts);
    os << n << ',' << r.per_sample(r.i_total) << ',' << r.per_sample(r.i_x) << ','
       << r.per_sample(r.i_cond) << ',' << r.residual << '\n';
  }
  const auto rates = closed_form_rates(c.loop, c.quad);
  os << "inf," << rates.r_total << ',' << rates.r_x << ',' << rates.r_cond << ','
     << rates.conservation_residual << '\n';
  os.precision(old);
  return kExitOk;
}

int cmd_simulate(const std::string& path, const std::string& out_dir, bool export_batch,
                 const std::string& json_path, std::ostream& out, std::ostream& err) {
  const auto l = load_valid(path, err);
  if (!l.ok) return kExitInvalid;
  const auto& c = l.config;
  if (c.horizon < 2 || c.trials < 1) {
    err << "usage error: simulate needs horizon >= 2 and trials >= 1\n";
    return kExitInvalid;
  }

  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);

  const auto batch = simulate_loop({c.loop, c.horizon, c.trials, c.seed});
  const auto analytic = output_psd(c.loop);
  const double stationary_var = psd_variance(analytic, c.quad);

  const std::size_t max_lag = std::min(kMaxCovarianceLag, c.horizon / 2 - 1);
  const auto cov = empirical_covariance(batch, SignalRole::e, max_lag);
  {
    std::ofstream f(dir / "covariance_e.csv");
    write_covariance_csv(f, cov);
  }
  if (export_batch) {
    for (auto role : {SignalRole::e, SignalRole::x, SignalRole::y}) {
      std::ofstream f(dir / ("batch_" + std::string(to_string(role)) + ".csv"));
      write_batch_csv(f, batch, role);
    }
  }

  auto report = run_report("simulate", c);
  auto& res = report["results"];
  res["generator"] = batch.generator;
  res["covariance_lag0"] = cov[0];
  res["stationary_variance"] = stationary_var;
  res["covariance_lag0_relative_error"] = std::abs(cov[0] - stationary_var) / stationary_var;

  const bool n_ok = c.horizon >= 256 && (c.horizon & (c.horizon - 1)) == 0;
  int code = kExitOk;
  std::string status = "COVARIANCE-ONLY";
  double rms = 0.0;
  if (c.trials >= 100 && n_ok) {
    const auto psd = periodogram_psd(batch, SignalRole::e);
    rms = rms_relative_error(psd, analytic);
    std::ofstream f(dir / "periodogram_e.csv");
    write_periodogram_csv(f, psd, analytic);
    code = rms <= kPsdRmsThreshold ? kExitOk : kExitFail;
    status = code == kExitOk ? "PASS" : "FAIL";
    res["periodogram_rms_relative_error"] = rms;
    res["threshold"] = kPsdRmsThreshold;
  }
  res["status"] = status;

  if (json_path != "-") {
    out << "simulation: " << c.trials << " trials x " << c.horizon << " samples, seed " << c.seed
        << '\n';
    row(out, "lag-0 covariance of e (stationary tail)", fixed6(cov[0]));
    row(out, "int S_e dtheta", fixed6(stationary_var));
    if (status == "COVARIANCE-ONLY") {
      out << "  periodogram comparison skipped (needs trials >= 100 and horizon a power of two >= 256)\n";
    } else {
      row(out, "periodogram RMS relative error", fixed6(rms));
    }
    out << status << '\n';
  }
  emit_json(report, json_path, out);
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"infoflow: directed-information flows in LTI feedback loops over AWGN channels"};
  app.footer(kHelpFooter);
  app.set_version_flag("--version", INFOFLOW_VERSION);
  app.require_subcommand(1);

  std::string config_path, json_path, csv_path, out_dir = ".";
  std::size_t n = 0;
  std::vector<std::size_t> ns;
  bool export_batch = false;

  auto* analyze = app.add_subcommand("analyze", "closed-form rates and Bode cross-check");
  auto* finite = app.add_subcommand("finite", "exact finite-horizon directed informations");
  auto* verify = app.add_subcommand("verify", "conservation and definition-oracle check (exit 0 iff PASS)");
  auto* sweep = app.add_subcommand("sweep", "per-sample values over a list of horizons, as CSV");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo periodogram/covariance check");

  for (auto* sub : {analyze, finite, verify, sweep, simulate}) {
    sub->add_option("config", config_path, "loop configuration (JSON)")->required()->check(CLI::ExistingFile);
  }
  for (auto* sub : {analyze, finite, verify, simulate}) {
    sub->add_option("--json", json_path, "write the JSON run report to a file ('-' for stdout)");
  }
  for (auto* sub : {finite, verify}) {
    sub->add_option("-n,--horizon", n, "horizon (defaults to the config's horizon)")->check(CLI::PositiveNumber);
  }
  sweep->add_option("--n", ns, "comma-separated ascending horizons")->required()->delimiter(',');
  sweep->add_option("--csv", csv_path, "write CSV to a file instead of stdout");
  simulate->add_option("--out-dir", out_dir, "directory for CSV artifacts");
  simulate->add_flag("--export-batch", export_batch, "also write per-signal trajectory CSVs");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*analyze) return cmd_analyze(config_path, json_path, out, err);
    if (*finite) return cmd_finite(config_path, n, json_path, false, out, err);
    if (*verify) return cmd_finite(config_path, n, json_path, true, out, err);
    if (*sweep) return cmd_sweep(config_path, ns, csv_path, out, err);
    if (*simulate) return cmd_simulate(config_path, out_dir, export_batch, json_path, out, err);
  } catch (const ConfigError& e) {
    err << "invalid config: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InvalidLoop& e) {
    err << "invalid loop: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitInvalid;
}

}  // namespace infoflow::cli
