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

#include "gans/instance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gans {

namespace {

void build_csr(int size, const std::vector<Arc>& arcs, bool forward,
               std::vector<int>& offset, std::vector<int>& targets) {
  offset.assign(size + 1, 0);
  for (const auto& [from, to] : arcs) ++offset[(forward ? from : to) + 1];
  std::partial_sum(offset.begin(), offset.end(), offset.begin());
  targets.assign(arcs.size(), 0);
  std::vector<int> fill(offset.begin(), offset.end() - 1);
  for (const auto& [from, to] : arcs) {
    const int key = forward ? from : to;
    targets[fill[key]++] = forward ? to : from;
  }
}

std::vector<bool> reachable(const ProjectInstance& inst, int root,
                            bool forward) {
  std::vector<bool> seen(inst.size(), false);
  std::vector<int> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const int w : forward ? inst.successors(v) : inst.predecessors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

ProjectInstance::ProjectInstance(std::vector<Activity> activities,
                                 std::vector<Arc> arcs,
                                 std::vector<int> capacities,
                                 std::optional<int> horizon)
    : capacities_(std::move(capacities)), arcs_(std::move(arcs)) {
  const int n = static_cast<int>(activities.size());
  const int k = resource_count();
  durations_.reserve(n);
  demands_.reserve(static_cast<std::size_t>(n) * k);
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(activities[j].demand.size()) != k) {
      throw std::invalid_argument("activity " + std::to_string(j) +
                                  " has " +
                                  std::to_string(activities[j].demand.size()) +
                                  " demands, expected " + std::to_string(k));
    }
    durations_.push_back(activities[j].duration);
    demands_.insert(demands_.end(), activities[j].demand.begin(),
                    activities[j].demand.end());
  }
  for (const auto& [from, to] : arcs_) {
    if (from < 0 || from >= n || to < 0 || to >= n) {
      throw std::invalid_argument("arc (" + std::to_string(from) + "," +
                                  std::to_string(to) + ") out of range");
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  build_csr(n, arcs_, true, succ_offset_, succ_);
  build_csr(n, arcs_, false, pred_offset_, pred_);

  total_duration_ = 0;
  for (const int p : durations_) total_duration_ += std::max(p, 0);
  horizon_ = horizon.value_or(total_duration_);

  // Kahn's algorithm with smallest-id-first extraction.
  std::vector<int> indegree(n, 0);
  for (const auto& arc : arcs_) ++indegree[arc.second];
  std::vector<int> ready;
  for (int j = n - 1; j >= 0; --j) {
    if (indegree[j] == 0) ready.push_back(j);
  }
  std::make_heap(ready.begin(), ready.end(), std::greater<>());
  topo_order_.reserve(n);
  while (!ready.empty()) {
    std::pop_heap(ready.begin(), ready.end(), std::greater<>());
    const int v = ready.back();
    ready.pop_back();
    topo_order_.push_back(v);
    for (const int w : successors(v)) {
      if (--indegree[w] == 0) {
        ready.push_back(w);
        std::push_heap(ready.begin(), ready.end(), std::greater<>());
      }
    }
  }
  if (static_cast<int>(topo_order_.size()) != n) {
    topo_order_.clear();
  } else {
    topo_rank_.assign(n, 0);
    for (int i = 0; i < n; ++i) topo_rank_[topo_order_[i]] = i;
  }
}

std::vector<Activity> ProjectInstance::activities() const {
  std::vector<Activity> out(size());
  for (int j = 0; j < size(); ++j) {
    out[j].duration = durations_[j];
    const auto d = demands(j);
    out[j].demand.assign(d.begin(), d.end());
  }
  return out;
}

bool ProjectInstance::operator==(const ProjectInstance& other) const {
  return durations_ == other.durations_ && demands_ == other.demands_ &&
         capacities_ == other.capacities_ && arcs_ == other.arcs_ &&
         horizon_ == other.horizon_;
}

Schedule make_schedule(const ProjectInstance& inst, std::vector<int> starts) {
  int makespan = 0;
  for (int j = 0; j < static_cast<int>(starts.size()); ++j) {
    makespan = std::max(makespan, starts[j] + inst.duration(j));
  }
  return Schedule{std::move(starts), makespan};
}

bool is_precedence_feasible(const ProjectInstance& inst,
                            const ActivityList& list) {
  const int n = inst.size();
  if (list.size() != n) return false;
  std::vector<int> position(n, -1);
  for (int p = 0; p < n; ++p) {
    const int j = list[p];
    if (j < 0 || j >= n || position[j] != -1) return false;
    position[j] = p;
  }
  if (list[0] != 0 || list[n - 1] != n - 1) return false;
  for (const auto& [from, to] : inst.arcs()) {
    if (position[from] >= position[to]) return false;
  }
  return true;
}

std::optional<Violation> validate_instance(const ProjectInstance& inst) {
  const int n = inst.size();
  if (n < 2) {
    return Violation{ViolationKind::kEmptyProject,
                     "project needs at least the two dummy activities"};
  }
  for (int k = 0; k < inst.resource_count(); ++k) {
    if (inst.capacity(k) <= 0) {
      return Violation{ViolationKind::kNonPositiveCapacity,
                       "resource " + std::to_string(k) +
                           " has non-positive capacity"};
    }
  }
  for (int j = 0; j < n; ++j) {
    if (inst.duration(j) < 0) {
      return Violation{ViolationKind::kNegativeValue,
                       "activity " + std::to_string(j) +
                           " has negative duration"};
    }
    for (const int r : inst.demands(j)) {
      if (r < 0) {
        return Violation{ViolationKind::kNegativeValue,
                         "activity " + std::to_string(j) +
                             " has negative demand"};
      }
    }
  }
  for (const int dummy : {0, n - 1}) {
    const auto d = inst.demands(dummy);
    if (inst.duration(dummy) != 0 ||
        std::any_of(d.begin(), d.end(), [](int r) { return r != 0; })) {
      return Violation{ViolationKind::kDummyNotEmpty,
                       "dummy activity " + std::to_string(dummy) +
                           " must have zero duration and demand"};
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < inst.resource_count(); ++k) {
      if (inst.demand(j, k) > inst.capacity(k)) {
        return Violation{ViolationKind::kDemandExceedsCapacity,
                         "activity " + std::to_string(j) + " demands " +
                             std::to_string(inst.demand(j, k)) +
                             " of resource " + std::to_string(k) +
                             " with capacity " +
                             std::to_string(inst.capacity(k))};
      }
    }
  }
  if (!inst.is_acyclic()) {
    return Violation{ViolationKind::kCycle, "precedence graph has a cycle"};
  }
  const auto from_source = reachable(inst, 0, true);
  const auto to_sink = reachable(inst, n - 1, false);
  for (int j = 1; j < n - 1; ++j) {
    if (!from_source[j] || !to_sink[j]) {
      return Violation{ViolationKind::kMissingDummyPath,
                       "activity " + std::to_string(j) +
                           " is not connected to both dummy activities"};
    }
  }
  if (!inst.predecessors(0).empty() || !inst.successors(n - 1).empty()) {
    return Violation{ViolationKind::kMissingDummyPath,
                     "dummy source has predecessors or sink has successors"};
  }
  if (inst.horizon() < inst.total_duration()) {
    return Violation{ViolationKind::kHorizonTooShort,
                     "horizon " + std::to_string(inst.horizon()) +
                         " is below the total duration " +
                         std::to_string(inst.total_duration())};
  }
  return std::nullopt;
}

bool is_feasible(const ProjectInstance& inst, const Schedule& sched) {
  const int n = inst.size();
  if (sched.size() != n) return false;
  int makespan = 0;
  for (int j = 0; j < n; ++j) {
    if (sched.starts[j] < 0) return false;
    makespan = std::max(makespan, sched.starts[j] + inst.duration(j));
  }
  if (makespan != sched.makespan) return false;
  for (const auto& [from, to] : inst.arcs()) {
    if (sched.starts[from] + inst.duration(from) > sched.starts[to]) {
      return false;
    }
  }
  const int k_count = inst.resource_count();
  std::vector<int> usage(static_cast<std::size_t>(makespan) * k_count, 0);
  for (int j = 0; j < n; ++j) {
    const auto d = inst.demands(j);
    for (int t = sched.starts[j]; t < sched.starts[j] + inst.duration(j);
         ++t) {
      for (int k = 0; k < k_count; ++k) {
        int& u = usage[static_cast<std::size_t>(t) * k_count + k];
        u += d[k];
        if (u > inst.capacity(k)) return false;
      }
    }
  }
  return true;
}

std::vector<int> earliest_starts(const ProjectInstance& inst) {
  std::vector<int> es(inst.size(), 0);
  for (const int j : inst.topological_order()) {
    for (const int i : inst.predecessors(j)) {
      es[j] = std::max(es[j], es[i] + inst.duration(i));
    }
  }
  return es;
}

int critical_path_lower_bound(const ProjectInstance& inst) {
  const auto es = earliest_starts(inst);
  int bound = 0;
  for (int j = 0; j < inst.size(); ++j) {
    bound = std::max(bound, es[j] + inst.duration(j));
  }
  return bound;
}

ActivityList random_feasible_list(const ProjectInstance& inst, Rng& rng) {
  const int n = inst.size();
  std::vector<int> missing(n);
  for (int j = 0; j < n; ++j) {
    missing[j] = static_cast<int>(inst.predecessors(j).size());
  }
  std::vector<int> eligible;
  for (int j = 0; j < n; ++j) {
    if (missing[j] == 0) eligible.push_back(j);
  }
  ActivityList list;
  list.order.reserve(n);
  while (!eligible.empty()) {
    const std::size_t pick = rng.below(eligible.size());
    const int j = eligible[pick];
    eligible[pick] = eligible.back();
    eligible.pop_back();
    list.order.push_back(j);
    for (const int s : inst.successors(j)) {
      if (--missing[s] == 0) eligible.push_back(s);
    }
  }
  return list;
}

std::int64_t start_time_sum(const Schedule& sched) {
  std::int64_t sum = 0;
  for (int j = 1; j + 1 < sched.size(); ++j) sum += sched.starts[j];
  return sum;
}

}  // namespace gans
