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

// Schedule generation schemes and schedule improvement passes.

#ifndef GANS_SGS_HPP_
#define GANS_SGS_HPP_

#include <span>
#include <vector>

#include "gans/instance.hpp"

namespace gans {

// Remaining capacity per unit interval and resource. Unit t is the interval
// [t, t+1). Units past length() are untouched and hold the full capacity;
// the profile grows on demand when an activity is reserved past its end.
class ResourceProfile {
 public:
  ResourceProfile(const ProjectInstance& inst, int initial_length);

  int length() const { return length_; }
  int remaining(int t, int k) const {
    return t < length_ ? remaining_[index(t, k)] : capacities_[k];
  }
  bool unit_fits(int t, std::span<const int> demand) const;
  bool fits(int start, int duration, std::span<const int> demand) const;
  // Smallest t >= earliest such that [t, t+duration) fits.
  int earliest_fit(int earliest, int duration,
                   std::span<const int> demand) const;

  void reserve(int start, int duration, std::span<const int> demand);
  void release(int start, int duration, std::span<const int> demand);

 private:
  std::size_t index(int t, int k) const {
    return static_cast<std::size_t>(t) * k_count_ + k;
  }
  void grow(int length);

  std::vector<int> capacities_;
  std::vector<int> remaining_;
  int k_count_ = 0;
  int length_ = 0;
};

// Serial decoder: activities in list order, each at the earliest
// precedence- and resource-feasible start. Produces an active schedule.
Schedule serial_sgs(const ProjectInstance& inst, const ActivityList& list);

// Parallel decoder: advances over finish events and, at each decision time,
// starts the eligible activities in list order while resources permit.
Schedule parallel_sgs(const ProjectInstance& inst, const ActivityList& list);

struct FbiResult {
  Schedule schedule;
  // When improved, the forward list whose serial decoding is `schedule`.
  ActivityList list;
  bool improved = false;
  int schedules_generated = 0;
};

// Forward-backward improvement: alternate right justification (serial
// decoding of the reversed network in decreasing finish order) and left
// justification (serial decoding in increasing start order) while a full
// pass shortens the makespan. The input is returned unchanged when the first
// pass does not improve it.
FbiResult fbi(const ProjectInstance& inst, const Schedule& sched);

// Global left shift: in nondecreasing start order, each activity moves to
// its earliest feasible start with all other activities in place; repeated
// until no activity moves. Never increases any start time.
Schedule left_shift(const ProjectInstance& inst, const Schedule& sched);

// Activities by start time, ties by smaller id. Zero-duration activities
// sharing a start with their predecessors are reordered to keep the list
// precedence-feasible.
ActivityList schedule_to_list(const ProjectInstance& inst,
                              const Schedule& sched);

// Stable precedence repair: the topological order that keeps every activity
// as close to its position in `order` as the precedence relation allows
// (smallest-position-first Kahn extraction). Returns `order` itself when it
// is already feasible.
ActivityList repair_precedence(const ProjectInstance& inst,
                               std::vector<int> order);

}  // namespace gans

#endif  // GANS_SGS_HPP_
