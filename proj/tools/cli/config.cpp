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

#include "cli/config.hpp"

#include <fstream>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "infoflow/json.hpp"

namespace infoflow::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::string_view where,
                    std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ConfigError(std::string(where) + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
  }
}

const json& require(const json& obj, const char* key, std::string_view where) {
  if (!obj.contains(key))
    throw ConfigError(std::string(where) + ": missing required key '" + key + "'");
  return obj.at(key);
}

double number(const json& v, std::string_view what) {
  if (!v.is_number()) throw ConfigError(std::string(what) + ": expected a number");
  return v.get<double>();
}

std::size_t count(const json& v, std::string_view what) {
  if (!v.is_number_unsigned()) throw ConfigError(std::string(what) + ": expected a nonnegative integer");
  return v.get<std::size_t>();
}

std::vector<double> numbers(const json& v, std::string_view what) {
  if (!v.is_array()) throw ConfigError(std::string(what) + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) out.push_back(number(x, what));
  return out;
}

}  // namespace

LoopConfig parse_config(const json& j) {
  reject_unknown(j, "config", {"plant", "noise", "message", "quadrature", "horizon", "trials", "seed"});
  LoopConfig c;

  const auto& plant = require(j, "plant", "config");
  reject_unknown(plant, "plant", {"num", "den"});
  const auto num = numbers(require(plant, "num", "plant"), "plant.num");
  const auto den = numbers(require(plant, "den", "plant"), "plant.den");
  if (num.empty() || den.empty()) throw ConfigError("plant: coefficient arrays must be nonempty");
  c.loop.plant = {Polynomial(num), Polynomial(den)};

  const auto& noise = require(j, "noise", "config");
  reject_unknown(noise, "noise", {"sigma_w2", "sigma_v2"});
  c.loop.sigma_w2 = number(require(noise, "sigma_w2", "noise"), "noise.sigma_w2");
  c.loop.sigma_v2 = number(require(noise, "sigma_v2", "noise"), "noise.sigma_v2");

  if (j.contains("message")) {
    const auto& msg = j.at("message");
    reject_unknown(msg, "message", {"sigma_02", "theta"});
    if (msg.contains("sigma_02")) c.loop.sigma_02 = number(msg.at("sigma_02"), "message.sigma_02");
    if (msg.contains("theta")) c.loop.theta = numbers(msg.at("theta"), "message.theta");
  }
  if (j.contains("quadrature")) {
    const auto& q = j.at("quadrature");
    reject_unknown(q, "quadrature", {"panels", "nodes", "tolerance"});
    if (q.contains("panels")) c.quad.panels = count(q.at("panels"), "quadrature.panels");
    if (q.contains("nodes")) c.quad.nodes = count(q.at("nodes"), "quadrature.nodes");
    if (q.contains("tolerance")) c.quad.tolerance = number(q.at("tolerance"), "quadrature.tolerance");
    try {
      c.quad.check();
    } catch (const Error& e) {
      throw ConfigError(std::string("quadrature: ") + e.what());
    }
  }
  if (j.contains("horizon")) c.horizon = count(j.at("horizon"), "horizon");
  if (j.contains("trials")) c.trials = count(j.at("trials"), "trials");
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw ConfigError("seed: expected a nonnegative integer");
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  return c;
}

LoopConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

json echo_config(const LoopConfig& c) {
  json j = c.loop;
  j["quadrature"] = c.quad;
  j["horizon"] = c.horizon;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  return j;
}

}  // namespace infoflow::cli
