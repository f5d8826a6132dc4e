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

#include "gans/sgs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace gans {

ResourceProfile::ResourceProfile(const ProjectInstance& inst,
                                 int initial_length)
    : capacities_(inst.capacities().begin(), inst.capacities().end()),
      k_count_(inst.resource_count()) {
  grow(std::max(initial_length, 1));
}

void ResourceProfile::grow(int length) {
  if (length <= length_) return;
  const int new_length = std::max(length, length_ * 2);
  remaining_.reserve(static_cast<std::size_t>(new_length) * k_count_);
  for (int t = length_; t < new_length; ++t) {
    remaining_.insert(remaining_.end(), capacities_.begin(), capacities_.end());
  }
  length_ = new_length;
}

bool ResourceProfile::unit_fits(int t, std::span<const int> demand) const {
  if (t >= length_) return true;
  const int* row = remaining_.data() + index(t, 0);
  for (int k = 0; k < k_count_; ++k) {
    if (row[k] < demand[k]) return false;
  }
  return true;
}

bool ResourceProfile::fits(int start, int duration,
                           std::span<const int> demand) const {
  const int end = std::min(start + duration, length_);
  for (int t = start; t < end; ++t) {
    if (!unit_fits(t, demand)) return false;
  }
  return true;
}

int ResourceProfile::earliest_fit(int earliest, int duration,
                                  std::span<const int> demand) const {
  int start = earliest;
  int t = start;
  while (t < start + duration && t < length_) {
    if (unit_fits(t, demand)) {
      ++t;
    } else {
      start = t + 1;
      t = start;
    }
  }
  return start;
}

void ResourceProfile::reserve(int start, int duration,
                              std::span<const int> demand) {
  if (duration <= 0) return;
  grow(start + duration);
  for (int t = start; t < start + duration; ++t) {
    int* row = remaining_.data() + index(t, 0);
    for (int k = 0; k < k_count_; ++k) row[k] -= demand[k];
  }
}

void ResourceProfile::release(int start, int duration,
                              std::span<const int> demand) {
  if (duration <= 0) return;
  grow(start + duration);
  for (int t = start; t < start + duration; ++t) {
    int* row = remaining_.data() + index(t, 0);
    for (int k = 0; k < k_count_; ++k) row[k] += demand[k];
  }
}

namespace {

// Serial decoding in either time direction. Backward decoding schedules the
// reversed network (successors act as predecessors) and returns start times
// measured from the end of the reversed schedule.
std::vector<int> serial_times(const ProjectInstance& inst,
                              std::span<const int> order, bool forward) {
  std::vector<int> start(inst.size(), 0);
  ResourceProfile profile(inst, inst.total_duration() + 1);
  for (const int j : order) {
    int est = 0;
    for (const int i : forward ? inst.predecessors(j) : inst.successors(j)) {
      est = std::max(est, start[i] + inst.duration(i));
    }
    const int p = inst.duration(j);
    const int s = p == 0 ? est : profile.earliest_fit(est, p, inst.demands(j));
    profile.reserve(s, p, inst.demands(j));
    start[j] = s;
  }
  return start;
}

// Right-justified counterpart of `sched`: activities in decreasing finish
// order scheduled backward on the reversed network.
Schedule right_justify(const ProjectInstance& inst, const Schedule& sched) {
  const int n = inst.size();
  const auto rank = inst.topological_rank();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int fa = sched.starts[a] + inst.duration(a);
    const int fb = sched.starts[b] + inst.duration(b);
    if (fa != fb) return fa > fb;
    if (sched.starts[a] != sched.starts[b]) {
      return sched.starts[a] > sched.starts[b];
    }
    return rank[a] > rank[b];
  });
  const auto reversed = serial_times(inst, order, false);
  int makespan = 0;
  for (int j = 0; j < n; ++j) {
    makespan = std::max(makespan, reversed[j] + inst.duration(j));
  }
  std::vector<int> starts(n);
  for (int j = 0; j < n; ++j) {
    starts[j] = makespan - reversed[j] - inst.duration(j);
  }
  return Schedule{std::move(starts), makespan};
}

}  // namespace

Schedule serial_sgs(const ProjectInstance& inst, const ActivityList& list) {
  return make_schedule(inst, serial_times(inst, list.order, true));
}

Schedule parallel_sgs(const ProjectInstance& inst, const ActivityList& list) {
  const int n = inst.size();
  std::vector<int> start(n, -1);
  std::vector<int> finish(n, 0);
  ResourceProfile profile(inst, inst.total_duration() + 1);
  std::vector<int> pending(list.order.begin(), list.order.end());
  std::priority_queue<int, std::vector<int>, std::greater<>> events;

  auto eligible = [&](int j, int t) {
    for (const int i : inst.predecessors(j)) {
      if (start[i] < 0 || finish[i] > t) return false;
    }
    return true;
  };

  int t = 0;
  while (!pending.empty()) {
    std::size_t kept = 0;
    for (std::size_t idx = 0; idx < pending.size(); ++idx) {
      const int j = pending[idx];
      const int p = inst.duration(j);
      if (eligible(j, t) && profile.fits(t, p, inst.demands(j))) {
        start[j] = t;
        finish[j] = t + p;
        profile.reserve(t, p, inst.demands(j));
        if (p > 0) events.push(t + p);
      } else {
        pending[kept++] = j;
      }
    }
    pending.resize(kept);
    if (pending.empty()) break;
    while (!events.empty() && events.top() <= t) events.pop();
    if (events.empty()) {
      throw std::logic_error("parallel_sgs: no resource release pending");
    }
    t = events.top();
  }
  return make_schedule(inst, std::move(start));
}

FbiResult fbi(const ProjectInstance& inst, const Schedule& sched) {
  FbiResult result{sched, {}, false, 0};
  while (true) {
    const Schedule backward = right_justify(inst, result.schedule);
    ActivityList forward_list = schedule_to_list(inst, backward);
    Schedule forward = serial_sgs(inst, forward_list);
    result.schedules_generated += 2;
    if (forward.makespan >= result.schedule.makespan) break;
    result.schedule = std::move(forward);
    result.list = std::move(forward_list);
    result.improved = true;
  }
  return result;
}

Schedule left_shift(const ProjectInstance& inst, const Schedule& sched) {
  const int n = inst.size();
  std::vector<int> starts = sched.starts;
  ResourceProfile profile(inst, sched.makespan + 1);
  for (int j = 0; j < n; ++j) {
    profile.reserve(starts[j], inst.duration(j), inst.demands(j));
  }
  std::vector<int> order(n);
  bool changed = true;
  while (changed) {
    changed = false;
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return starts[a] != starts[b] ? starts[a] < starts[b] : a < b;
    });
    for (const int j : order) {
      int est = 0;
      for (const int i : inst.predecessors(j)) {
        est = std::max(est, starts[i] + inst.duration(i));
      }
      if (est >= starts[j]) continue;
      const int p = inst.duration(j);
      int moved = est;
      if (p > 0) {
        profile.release(starts[j], p, inst.demands(j));
        moved = profile.earliest_fit(est, p, inst.demands(j));
        profile.reserve(moved, p, inst.demands(j));
      }
      if (moved < starts[j]) {
        starts[j] = moved;
        changed = true;
      }
    }
  }
  return make_schedule(inst, std::move(starts));
}

ActivityList schedule_to_list(const ProjectInstance& inst,
                              const Schedule& sched) {
  std::vector<int> order(sched.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return sched.starts[a] != sched.starts[b]
               ? sched.starts[a] < sched.starts[b]
               : a < b;
  });
  return repair_precedence(inst, std::move(order));
}

ActivityList repair_precedence(const ProjectInstance& inst,
                               std::vector<int> order) {
  const int n = inst.size();
  std::vector<int> position(n);
  for (int p = 0; p < n; ++p) position[order[p]] = p;
  bool feasible = true;
  for (const auto& [from, to] : inst.arcs()) {
    if (position[from] > position[to]) {
      feasible = false;
      break;
    }
  }
  if (feasible) return ActivityList{std::move(order)};

  std::vector<int> missing(n);
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int j = 0; j < n; ++j) {
    missing[j] = static_cast<int>(inst.predecessors(j).size());
    if (missing[j] == 0) ready.push(position[j]);
  }
  ActivityList out;
  out.order.reserve(n);
  while (!ready.empty()) {
    const int j = order[ready.top()];
    ready.pop();
    out.order.push_back(j);
    for (const int s : inst.successors(j)) {
      if (--missing[s] == 0) ready.push(position[s]);
    }
  }
  return out;
}

}  // namespace gans
