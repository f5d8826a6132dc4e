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

// Resource scarcity ranking from the cumulative-resource relaxation.
//
// In the relaxation a resource only has to satisfy its capacity on every
// prefix [0, t) in aggregate. Consumption up to any t is nonincreasing in
// every start time, so for a given makespan T the latest-start schedule is
// cumulatively feasible iff any schedule of length T is, and feasibility is
// monotone in T. The optimal relaxed makespan is therefore found exactly by
// bisection over T with a latest-start check.

#ifndef GANS_RANKING_HPP_
#define GANS_RANKING_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gans/instance.hpp"
#include "gans/rng.hpp"

namespace gans {

struct CumulativeRelaxation {
  Schedule schedule;  // latest-start schedule of length `makespan`
  int makespan = 0;
  // Unused cumulative balance per resource: T * R_k - sum_j r_jk * p_j.
  std::vector<std::int64_t> residues;
};

CumulativeRelaxation solve_cumulative_relaxation(const ProjectInstance& inst);

// True when every prefix [0, t), t = 1..horizon, consumes at most t * R_k of
// each resource.
bool satisfies_cumulative(const ProjectInstance& inst, const Schedule& sched);

// Resources by ascending relative residue R^_k / (T * R_k), most scarce
// first; ties keep the smaller index.
std::vector<int> rank_resources(std::span<const std::int64_t> residues,
                                std::span<const int> capacities,
                                int relaxed_makespan);

enum class WeightMode {
  kSteep,         // (1, 0.8, 0.6, 0.4)
  kMild,          // (1, 0.9, 0.8, 0.7)
  kUniform,       // (1, 1, 1, 1)
  kResidueRatio,  // 2 - R^_k / R^_last along the rank
  kRandom,        // one of the above with equal probability
};

std::string to_string(WeightMode mode);
WeightMode weight_mode_from_string(const std::string& name);

struct ResourceWeights {
  std::vector<double> values;  // indexed by resource
  WeightMode mode = WeightMode::kUniform;
};

// Weights assigned in rank order. The fixed vectors are truncated to the
// resource count and unavailable beyond four resources (ConfigError); in
// random mode only the eligible modes are drawn.
ResourceWeights assign_weights(std::span<const int> rank,
                               std::span<const std::int64_t> residues,
                               WeightMode mode, Rng& rng);

struct RankingResult {
  CumulativeRelaxation relaxation;
  std::vector<int> rank;
  ResourceWeights weights;
};

RankingResult rank_and_weigh(const ProjectInstance& inst, WeightMode mode,
                             Rng& rng);

}  // namespace gans

#endif  // GANS_RANKING_HPP_
