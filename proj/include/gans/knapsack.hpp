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

// Multi-dimensional 0/1 knapsack over an eligible set: pick activities to
// start together maximizing sum_j sum_k w_k r_jk / R_k subject to the
// remaining capacity of every resource.

#ifndef GANS_KNAPSACK_HPP_
#define GANS_KNAPSACK_HPP_

#include <span>
#include <vector>

#include "gans/rng.hpp"

namespace gans {

struct KnapsackInput {
  std::span<const int> demands;     // row-major [item][resource]
  std::span<const int> remaining;   // capacity left per resource
  std::span<const int> capacities;  // full capacity R_k (normalizer)
  std::span<const double> weights;  // resource weights w_k

  int item_count() const {
    return remaining.empty()
               ? 0
               : static_cast<int>(demands.size() / remaining.size());
  }
  int resource_count() const { return static_cast<int>(remaining.size()); }
  std::span<const int> demand(int item) const {
    return demands.subspan(static_cast<std::size_t>(item) * remaining.size(),
                           remaining.size());
  }
};

struct KnapsackSolution {
  std::vector<int> items;  // ascending item indices
  double value = 0.0;
};

struct GraspParams {
  int constructions = 8;
  double rcl_fraction = 0.5;  // restricted candidate list: top share by ratio
};

double item_value(const KnapsackInput& input, int item);
bool is_feasible_selection(const KnapsackInput& input,
                           std::span<const int> items);

// Deterministic greedy by value per normalized demand.
KnapsackSolution greedy_knapsack(const KnapsackInput& input);

// GRASP: the greedy construction followed by randomized constructions drawn
// from the restricted candidate list, each improved by add / swap moves. The
// best solution is returned, so it is never worse than greedy_knapsack().
KnapsackSolution grasp_knapsack(const KnapsackInput& input, Rng& rng,
                                const GraspParams& params = {});

}  // namespace gans

#endif  // GANS_KNAPSACK_HPP_
