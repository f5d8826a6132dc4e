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

// The hybrid controller: genetic generations with neighborhood-search bursts
// whenever the record stagnates, plus self-tuning of the main parameters.

#ifndef GANS_SOLVER_HPP_
#define GANS_SOLVER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gans/config.hpp"
#include "gans/genetic.hpp"
#include "gans/instance.hpp"

namespace gans {

// sigma = (ub - cp) / cp. Subset 1 below sigma1, 3 above sigma2, 2 between
// (both ends inclusive).
int classify_subset(int ub, int cp, double sigma1, double sigma2);

struct SubsetMix {
  int stagnation_trigger;
  int ns_steps_per_burst;
};

SubsetMix subset_mix(int subset);

// Initial capacity from the network complexity (arcs per activity): 60 at
// 1.5, 10 more for every additional 0.3, clamped to [lo, hi].
int auto_population_capacity(const ProjectInstance& inst, int lo, int hi);

struct AdaptState {
  double dense_threshold = 0.75;
  double parent_probability = 0.25;
  int block_size = 5;
  int population_capacity = 60;
  int p_changes = 0;  // block-size changes since the last record update
};

// What happened since the previous checkpoint.
struct AdaptSignals {
  int b_attempts = 0;
  int b_nonempty = 0;
  double mean_gene_count = 0.0;  // dense genes per parent
  int offspring = 0;
  int duplicate_offspring = 0;
  int replacements_requested = 0;
  int uniqueness_failures = 0;
  bool record_improved = false;
};

struct AdaptLimits {
  int max_block_size = 1;
  int min_population = 40;
  int max_population = 150;
  int p_reset_changes = 5;
};

struct AdaptOutcome {
  AdaptState state;
  bool redraw_weights = false;
  std::vector<std::string> log;
};

// Self-tuning rules:
//  - P grows by one when at least half of the N_B attempts produced a
//    neighbor and shrinks by one (not below 1) otherwise;
//  - after `p_reset_changes` changes of P without a record update, P is
//    reset to 1 and the resource weights are redrawn;
//  - R drops by 0.05 when parents carry more than 8 dense genes on average
//    and rises by 0.05 below 2, within [0.05, 1.5];
//  - the parent probability drops by 0.05 when more than 30% of the
//    offspring duplicate a member and rises by 0.05 otherwise, within
//    [0.1, 0.5];
//  - the population shrinks by 5 when replenishing needed more rejected
//    duplicates than replacements, and grows by 5 when it needed none.
AdaptOutcome adapt_parameters(const AdaptState& state,
                              const AdaptSignals& signals,
                              const AdaptLimits& limits);

enum class StopReason { kBudget, kTimeLimit, kLowerBound, kNoSearch };

std::string to_string(StopReason reason);

struct TracePoint {
  std::int64_t schedules = 0;
  int makespan = 0;
};

struct RunStats {
  std::int64_t schedules_generated = 0;
  std::vector<TracePoint> trace;  // record updates, makespans decreasing
  int subset = 0;
  int critical_path = 0;
  int relaxed_makespan = 0;
  int lower_bound = 0;
  int initial_makespan = 0;
  int generations = 0;
  int ns_bursts = 0;
  std::vector<std::string> parameter_log;
  StopReason stop = StopReason::kBudget;
};

struct SolveResult {
  Individual best;
  RunStats stats;
};

// Runs the hybrid search until the schedule budget or time limit is spent or
// the record meets the lower bound max(critical path, relaxed makespan).
// Deterministic for a fixed config when no time limit is set.
SolveResult solve(const ProjectInstance& inst, const SolverConfig& config);

}  // namespace gans

#endif  // GANS_SOLVER_HPP_
