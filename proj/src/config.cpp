// Copyright 2026 The GANS Scheduler Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gans/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "gans/errors.hpp"

namespace gans {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename Int>
Int to_int(const std::string& key, std::string_view value) {
  Int out{};
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("'" + key + "': expected an integer, got '" +
                      std::string(value) + "'");
  }
  return out;
}

double to_double(const std::string& key, std::string_view value) {
  const std::string text(value);
  char* end = nullptr;
  const double out = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() ||
      !std::isfinite(out)) {
    throw ConfigError("'" + key + "': expected a number, got '" + text + "'");
  }
  return out;
}

bool to_bool(const std::string& key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("'" + key + "': expected true or false, got '" +
                    std::string(value) + "'");
}

using Setter =
    std::function<void(SolverConfig&, const std::string&, std::string_view)>;

template <typename Int>
Setter int_field(Int SolverConfig::*field) {
  return [field](SolverConfig& c, const std::string& k, std::string_view v) {
    c.*field = to_int<Int>(k, v);
  };
}

Setter double_field(double SolverConfig::*field) {
  return [field](SolverConfig& c, const std::string& k, std::string_view v) {
    c.*field = to_double(k, v);
  };
}

Setter bool_field(bool SolverConfig::*field) {
  return [field](SolverConfig& c, const std::string& k, std::string_view v) {
    c.*field = to_bool(k, v);
  };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"lambda",
       [](SolverConfig& c, const std::string& k, std::string_view v) {
         if (v == "unlimited") {
           c.lambda.reset();
         } else {
           c.lambda = to_int<std::int64_t>(k, v);
         }
       }},
      {"time_limit",
       [](SolverConfig& c, const std::string& k, std::string_view v) {
         if (v == "none") {
           c.time_limit.reset();
         } else {
           c.time_limit = to_double(k, v);
         }
       }},
      {"weight_mode",
       [](SolverConfig& c, const std::string&, std::string_view v) {
         c.weight_mode = weight_mode_from_string(std::string(v));
       }},
      {"seed", int_field(&SolverConfig::seed)},
      {"sigma1", double_field(&SolverConfig::sigma1)},
      {"sigma2", double_field(&SolverConfig::sigma2)},
      {"population_capacity", int_field(&SolverConfig::population_capacity)},
      {"min_population", int_field(&SolverConfig::min_population)},
      {"max_population", int_field(&SolverConfig::max_population)},
      {"uniqueness", bool_field(&SolverConfig::uniqueness)},
      {"parent_probability", double_field(&SolverConfig::parent_probability)},
      {"parents_size", int_field(&SolverConfig::parents_size)},
      {"offspring_count", int_field(&SolverConfig::offspring_count)},
      {"elite_count", int_field(&SolverConfig::elite_count)},
      {"mutation_iterations", int_field(&SolverConfig::mutation_iterations)},
      {"replace_fraction", double_field(&SolverConfig::replace_fraction)},
      {"enable_crossover", bool_field(&SolverConfig::enable_crossover)},
      {"dense_threshold", double_field(&SolverConfig::dense_threshold)},
      {"stagnation_trigger", int_field(&SolverConfig::stagnation_trigger)},
      {"ns_steps_per_burst", int_field(&SolverConfig::ns_steps_per_burst)},
      {"block_size", int_field(&SolverConfig::block_size)},
      {"lambda_ns", int_field(&SolverConfig::lambda_ns)},
      {"tabu_capacity", int_field(&SolverConfig::tabu_capacity)},
      {"grasp_constructions", int_field(&SolverConfig::grasp_constructions)},
      {"grasp_rcl_fraction", double_field(&SolverConfig::grasp_rcl_fraction)},
      {"adaptive", bool_field(&SolverConfig::adaptive)},
      {"p_reset_changes", int_field(&SolverConfig::p_reset_changes)},
  };
  return table;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

void check_config(const SolverConfig& c) {
  require(!c.lambda || *c.lambda >= 0, "lambda must be non-negative");
  require(!c.time_limit || *c.time_limit > 0.0, "time_limit must be positive");
  require(0.0 < c.sigma1 && c.sigma1 < c.sigma2,
          "sigma thresholds must satisfy 0 < sigma1 < sigma2");
  require(c.min_population >= 1 && c.min_population <= c.max_population,
          "population bounds must satisfy 1 <= min_population <= "
          "max_population");
  require(c.population_capacity == 0 ||
              (c.population_capacity >= 1 && c.population_capacity <= 100000),
          "population_capacity must be 0 (automatic) or positive");
  require(0.0 < c.parent_probability && c.parent_probability <= 1.0,
          "parent_probability must lie in (0, 1]");
  require(c.parents_size == -1 || c.parents_size >= 1,
          "parents_size must be -1 (automatic) or positive");
  require(c.offspring_count == -1 || c.offspring_count >= 1,
          "offspring_count must be -1 (automatic) or positive");
  require(c.elite_count == -1 || c.elite_count >= 0,
          "elite_count must be -1 (automatic) or non-negative");
  require(c.mutation_iterations >= 0, "mutation_iterations must be >= 0");
  require(0.0 <= c.replace_fraction && c.replace_fraction <= 1.0,
          "replace_fraction must lie in [0, 1]");
  require(c.dense_threshold > 0.0, "dense_threshold must be positive");
  require(c.stagnation_trigger == -1 || c.stagnation_trigger >= 1,
          "stagnation_trigger must be -1 (subset default) or positive");
  require(c.ns_steps_per_burst >= -1,
          "ns_steps_per_burst must be -1 (subset default) or >= 0");
  require(c.block_size >= 1, "block_size must be positive");
  require(c.lambda_ns >= 0, "lambda_ns must be non-negative");
  require(c.tabu_capacity >= 0, "tabu_capacity must be non-negative");
  require(c.grasp_constructions >= 1, "grasp_constructions must be positive");
  require(0.0 < c.grasp_rcl_fraction && c.grasp_rcl_fraction <= 1.0,
          "grasp_rcl_fraction must lie in (0, 1]");
  require(c.p_reset_changes >= 1, "p_reset_changes must be positive");
}

SolverConfig parse_config(std::string_view text, SolverConfig base) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
    }
    it->second(base, key, value);
  }
  check_config(base);
  return base;
}

SolverConfig load_config(const std::string& path, SolverConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_config(text.str(), std::move(base));
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace gans
