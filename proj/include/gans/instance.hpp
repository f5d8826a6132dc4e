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

// Core data model for the single-mode resource-constrained project
// scheduling problem: activities 0..n+1 (0 and n+1 are dummies), precedence
// arcs, renewable resource capacities and integral start-time schedules.

#ifndef GANS_INSTANCE_HPP_
#define GANS_INSTANCE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gans/rng.hpp"

namespace gans {

struct Activity {
  int duration = 0;
  std::vector<int> demand;  // one entry per resource
};

using Arc = std::pair<int, int>;

// Immutable after construction. Construction only checks what is needed to
// build the adjacency (arc endpoints in range, demand vector lengths);
// semantic invariants are reported by validate_instance().
class ProjectInstance {
 public:
  ProjectInstance(std::vector<Activity> activities, std::vector<Arc> arcs,
                  std::vector<int> capacities,
                  std::optional<int> horizon = std::nullopt);

  // Number of activities including both dummies (n + 2).
  int size() const { return static_cast<int>(durations_.size()); }
  // Number of non-dummy activities (n).
  int real_count() const { return size() - 2; }
  int sink() const { return size() - 1; }
  int resource_count() const { return static_cast<int>(capacities_.size()); }

  int duration(int j) const { return durations_[j]; }
  std::span<const int> durations() const { return durations_; }
  int demand(int j, int k) const { return demands_[j * resource_count() + k]; }
  std::span<const int> demands(int j) const {
    return {demands_.data() + static_cast<std::size_t>(j) * resource_count(),
            static_cast<std::size_t>(resource_count())};
  }
  int capacity(int k) const { return capacities_[k]; }
  std::span<const int> capacities() const { return capacities_; }

  std::span<const int> successors(int j) const {
    return {succ_.data() + succ_offset_[j],
            static_cast<std::size_t>(succ_offset_[j + 1] - succ_offset_[j])};
  }
  std::span<const int> predecessors(int j) const {
    return {pred_.data() + pred_offset_[j],
            static_cast<std::size_t>(pred_offset_[j + 1] - pred_offset_[j])};
  }
  // Sorted, duplicate-free.
  const std::vector<Arc>& arcs() const { return arcs_; }

  int horizon() const { return horizon_; }
  int total_duration() const { return total_duration_; }

  // A fixed topological order of all activities; empty when the precedence
  // graph has a cycle.
  std::span<const int> topological_order() const { return topo_order_; }
  // Position of each activity in topological_order().
  std::span<const int> topological_rank() const { return topo_rank_; }
  bool is_acyclic() const {
    return static_cast<int>(topo_order_.size()) == size();
  }

  std::vector<Activity> activities() const;

  bool operator==(const ProjectInstance& other) const;

 private:
  std::vector<int> durations_;
  std::vector<int> demands_;  // row-major [activity][resource]
  std::vector<int> capacities_;
  std::vector<Arc> arcs_;
  std::vector<int> succ_offset_, succ_;
  std::vector<int> pred_offset_, pred_;
  std::vector<int> topo_order_, topo_rank_;
  int horizon_ = 0;
  int total_duration_ = 0;
};

struct Schedule {
  std::vector<int> starts;
  int makespan = 0;

  int size() const { return static_cast<int>(starts.size()); }
  bool operator==(const Schedule&) const = default;
};

// Builds a schedule from start times, computing the makespan as the latest
// completion time.
Schedule make_schedule(const ProjectInstance& inst, std::vector<int> starts);

// A permutation of 0..n+1 used as a chromosome. Precedence feasibility is
// checked by is_precedence_feasible(); operators keep it as an invariant.
struct ActivityList {
  std::vector<int> order;

  int size() const { return static_cast<int>(order.size()); }
  int operator[](int position) const { return order[position]; }
  bool operator==(const ActivityList&) const = default;
};

bool is_precedence_feasible(const ProjectInstance& inst,
                            const ActivityList& list);

enum class ViolationKind {
  kEmptyProject,
  kNonPositiveCapacity,
  kNegativeValue,
  kDummyNotEmpty,
  kDemandExceedsCapacity,
  kCycle,
  kMissingDummyPath,
  kHorizonTooShort,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

// Returns the first violated instance invariant, or nullopt when the
// instance is well formed.
std::optional<Violation> validate_instance(const ProjectInstance& inst);

// Precedence (end-to-start) and per-unit-interval renewable resource
// constraints, plus non-negative starts and consistent makespan.
bool is_feasible(const ProjectInstance& inst, const Schedule& sched);

// Length of the longest duration-weighted path from 0 to n+1.
int critical_path_lower_bound(const ProjectInstance& inst);

// Earliest start times ignoring resources.
std::vector<int> earliest_starts(const ProjectInstance& inst);

// Random topological order: repeatedly picks uniformly among the activities
// whose predecessors have all been placed.
ActivityList random_feasible_list(const ProjectInstance& inst, Rng& rng);

// Sum of the start times of the non-dummy activities.
std::int64_t start_time_sum(const Schedule& sched);

}  // namespace gans

#endif  // GANS_INSTANCE_HPP_
