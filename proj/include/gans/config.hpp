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

#ifndef GANS_CONFIG_HPP_
#define GANS_CONFIG_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "gans/ranking.hpp"

namespace gans {

// Solver parameters. A value of -1 (or 0 for the population capacity)
// selects the automatic or subset-dependent default.
struct SolverConfig {
  std::optional<std::int64_t> lambda = 50000;  // nullopt: no schedule limit
  std::optional<double> time_limit;            // seconds of wall clock
  std::uint64_t seed = 1;

  double sigma1 = 0.2;
  double sigma2 = 0.6;

  int population_capacity = 0;  // 0: derived from network complexity
  int min_population = 40;
  int max_population = 150;
  bool uniqueness = true;
  double parent_probability = 0.25;
  int parents_size = -1;     // capacity / 2
  int offspring_count = -1;  // capacity / 2
  int elite_count = -1;      // capacity / 4
  int mutation_iterations = 1;
  double replace_fraction = 0.2;  // share replaced on stagnation
  bool enable_crossover = true;

  double dense_threshold = 0.75;
  WeightMode weight_mode = WeightMode::kRandom;

  int stagnation_trigger = -1;  // generations without a record update
  int ns_steps_per_burst = -1;  // schedules per burst, 0 disables NS
  int block_size = 5;
  int lambda_ns = 4;  // N_A tries per move
  int tabu_capacity = 50;
  int grasp_constructions = 8;
  double grasp_rcl_fraction = 0.5;

  bool adaptive = true;
  int p_reset_changes = 5;  // P changes without a record before a reset
};

// Throws ConfigError when a field is out of range.
void check_config(const SolverConfig& config);

// `key = value` lines; `#` starts a comment. Keys are the field names above;
// `lambda = unlimited` removes the schedule limit. Unknown keys and
// malformed values throw ConfigError.
SolverConfig parse_config(std::string_view text, SolverConfig base = {});
SolverConfig load_config(const std::string& path, SolverConfig base = {});

}  // namespace gans

#endif  // GANS_CONFIG_HPP_
