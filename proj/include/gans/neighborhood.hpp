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

// Block-based neighborhood search with a tabu memory on start-time sums.

#ifndef GANS_NEIGHBORHOOD_HPP_
#define GANS_NEIGHBORHOOD_HPP_

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gans/budget.hpp"
#include "gans/genetic.hpp"
#include "gans/instance.hpp"
#include "gans/knapsack.hpp"
#include "gans/rng.hpp"

namespace gans {

struct TimeWindow {
  int est = 0;  // earliest start
  int lft = 0;  // latest finish
};

struct Block {
  int core = 0;
  std::vector<int> members;         // ascending ids, contains `core`
  std::vector<TimeWindow> windows;  // parallel to `members`

  bool contains(int activity) const;
};

// Collects `size` non-dummy activities around `core`: candidates are visited
// in a random order and admitted when s_core - p_i - b <= s_i <= s_core +
// p_core + b, widening b by one after each pass. `size` is clamped to the
// number of non-dummy activities. Windows are left empty.
Block create_block(const ProjectInstance& inst, const Schedule& sched,
                   int core, int size, Rng& rng);

// EST = latest finish of a predecessor outside the block (0 if none),
// LFT = earliest start of a successor outside the block (makespan if none).
std::vector<TimeWindow> compute_windows(const ProjectInstance& inst,
                                        const Schedule& sched,
                                        std::span<const int> members);

inline std::int64_t tabu_status(const Schedule& sched) {
  return start_time_sum(sched);
}

// Bounded FIFO of tabu statuses with exact membership.
class TabuList {
 public:
  explicit TabuList(int capacity) : capacity_(capacity) {}

  int capacity() const { return capacity_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool contains(std::int64_t status) const { return counts_.count(status); }
  void push(std::int64_t status);

 private:
  int capacity_;
  std::deque<std::int64_t> entries_;
  std::unordered_map<std::int64_t, int> counts_;
};

// v_j = sum_k w_k r_jk / R_k.
double activity_weight(const ProjectInstance& inst, int activity,
                       std::span<const double> weights);

struct NeighborResult {
  std::optional<Individual> neighbor;  // empty: no admissible neighbor
  bool improved = false;               // strictly shorter than the input
  int schedules_generated = 0;
};

// N_A: with the block's resources released, up to `tries` times members are
// re-placed inside their windows in a random priority order biased towards
// larger v_j, followed by a global left shift. Returns the first strictly
// shorter schedule, otherwise the best candidate whose status is not tabu.
// `block.windows` must be filled. Each try is decoded again serially from
// its start order, so the neighbor's schedule is the decoding of its list;
// a try costs two schedules.
NeighborResult neighborhood_a_move(const ProjectInstance& inst,
                                   const Schedule& sched, const Block& block,
                                   std::span<const double> weights, int tries,
                                   const TabuList& tabu, Rng& rng);

// N_B: no neighbor when the block holds an immediate predecessor of its core.
// Otherwise the activities listed before the block are decoded serially and
// the block, together with its not yet scheduled ancestors, is added by
// parallel decoding where every decision solves the eligible-set knapsack.
// The rebuilt part keeps its new start order, the rest its list order.
NeighborResult neighborhood_b_move(const ProjectInstance& inst,
                                   const ActivityList& list,
                                   const Schedule& sched, const Block& block,
                                   std::span<const double> weights, Rng& rng,
                                   const GraspParams& grasp = {});

struct NsParams {
  std::int64_t schedule_limit = 1000;  // decodes charged to this burst
  int block_size = 5;
  int tries = 4;  // N_A attempts per move
  int tabu_capacity = 50;
  GraspParams grasp;
};

struct NsStats {
  std::int64_t schedules_generated = 0;
  int iterations = 0;
  int moves = 0;
  int improvements = 0;
  int b_attempts = 0;
  int b_nonempty = 0;
};

struct NsResult {
  Individual best;
  NsStats stats;
};

// Tabu search from `start`: each iteration draws N_A or N_B with equal
// probability around a uniformly drawn core, moves to the neighbor unless
// its status is tabu, and records it. Every iteration costs at least one
// schedule against both the burst limit and `budget`.
NsResult ns_run(const ProjectInstance& inst, const Individual& start,
                std::span<const double> weights, const NsParams& params,
                Rng& rng, Budget& budget);

}  // namespace gans

#endif  // GANS_NEIGHBORHOOD_HPP_
