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

#include "gans/neighborhood.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gans/sgs.hpp"

namespace gans {

bool Block::contains(int activity) const {
  return std::binary_search(members.begin(), members.end(), activity);
}

Block create_block(const ProjectInstance& inst, const Schedule& sched,
                   int core, int size, Rng& rng) {
  const int real = inst.real_count();
  std::vector<int> candidates;
  candidates.reserve(real);
  for (int i = 1; i <= real; ++i) {
    if (i != core) candidates.push_back(i);
  }
  rng.shuffle(std::span<int>(candidates));

  // Candidate i is first admitted in the pass where b reaches its slack, and
  // within a pass in visiting order, so a stable sort by slack replays the
  // widening loop.
  const int s_core = sched.starts[core];
  const int c_core = s_core + inst.duration(core);
  auto slack = [&](int i) {
    const int s = sched.starts[i];
    return std::max({0, s_core - inst.duration(i) - s, s - c_core});
  };
  std::vector<int> slacks(inst.size(), 0);
  for (const int i : candidates) slacks[i] = slack(i);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](int a, int b) { return slacks[a] < slacks[b]; });

  const int take = std::clamp(size, 1, std::max(real, 1)) - 1;
  Block block;
  block.core = core;
  block.members.assign(candidates.begin(),
                       candidates.begin() +
                           std::min<std::size_t>(take, candidates.size()));
  block.members.push_back(core);
  std::sort(block.members.begin(), block.members.end());
  return block;
}

std::vector<TimeWindow> compute_windows(const ProjectInstance& inst,
                                        const Schedule& sched,
                                        std::span<const int> members) {
  std::vector<bool> inside(inst.size(), false);
  for (const int i : members) inside[i] = true;
  std::vector<TimeWindow> windows;
  windows.reserve(members.size());
  for (const int i : members) {
    TimeWindow w{0, sched.makespan};
    for (const int l : inst.predecessors(i)) {
      if (!inside[l]) w.est = std::max(w.est, sched.starts[l] + inst.duration(l));
    }
    for (const int l : inst.successors(i)) {
      if (!inside[l]) w.lft = std::min(w.lft, sched.starts[l]);
    }
    windows.push_back(w);
  }
  return windows;
}

void TabuList::push(std::int64_t status) {
  if (capacity_ <= 0) return;
  if (size() == capacity_) {
    const auto oldest = entries_.front();
    entries_.pop_front();
    if (--counts_[oldest] == 0) counts_.erase(oldest);
  }
  entries_.push_back(status);
  ++counts_[status];
}

double activity_weight(const ProjectInstance& inst, int activity,
                       std::span<const double> weights) {
  double v = 0.0;
  for (int k = 0; k < inst.resource_count(); ++k) {
    v += weights[k] * inst.demand(activity, k) / inst.capacity(k);
  }
  return v;
}

NeighborResult neighborhood_a_move(const ProjectInstance& inst,
                                   const Schedule& sched, const Block& block,
                                   std::span<const double> weights, int tries,
                                   const TabuList& tabu, Rng& rng) {
  NeighborResult result;
  const int m = static_cast<int>(block.members.size());
  if (tries <= 0 || m == 0) return result;

  ResourceProfile base(inst, sched.makespan + 1);
  for (int j = 0; j < inst.size(); ++j) {
    if (!block.contains(j)) {
      base.reserve(sched.starts[j], inst.duration(j), inst.demands(j));
    }
  }
  std::vector<int> local(inst.size(), -1);
  for (int x = 0; x < m; ++x) local[block.members[x]] = x;
  std::vector<double> v(m);
  for (int x = 0; x < m; ++x) {
    v[x] = activity_weight(inst, block.members[x], weights);
  }

  std::vector<int> missing(m);
  std::vector<int> eligible;
  std::vector<int> starts;
  for (int attempt = 0; attempt < tries; ++attempt) {
    ResourceProfile profile = base;
    starts = sched.starts;
    for (int x = 0; x < m; ++x) {
      missing[x] = 0;
      for (const int p : inst.predecessors(block.members[x])) {
        if (local[p] >= 0) ++missing[x];
      }
    }
    eligible.clear();
    for (int x = 0; x < m; ++x) {
      if (missing[x] == 0) eligible.push_back(x);
    }
    bool ok = true;
    for (int placed = 0; placed < m && ok; ++placed) {
      // Rank-proportional choice: the eligible member of largest v_j weighs
      // |eligible|, the smallest weighs 1.
      std::stable_sort(eligible.begin(), eligible.end(), [&](int a, int b) {
        return v[a] > v[b];
      });
      const auto e = static_cast<std::uint64_t>(eligible.size());
      std::uint64_t ticket = rng.below(e * (e + 1) / 2);
      std::size_t pick = 0;
      for (std::uint64_t w = e; ticket >= w; --w) {
        ticket -= w;
        ++pick;
      }
      const int x = eligible[pick];
      eligible.erase(eligible.begin() + pick);

      const int i = block.members[x];
      int earliest = block.windows[x].est;
      for (const int p : inst.predecessors(i)) {
        if (local[p] >= 0) {
          earliest = std::max(earliest, starts[p] + inst.duration(p));
        }
      }
      const int d = inst.duration(i);
      const int s = d > 0 ? profile.earliest_fit(earliest, d, inst.demands(i))
                          : earliest;
      if (s + d > block.windows[x].lft) {
        ok = false;
        break;
      }
      profile.reserve(s, d, inst.demands(i));
      starts[i] = s;
      for (const int succ : inst.successors(i)) {
        if (local[succ] >= 0 && --missing[local[succ]] == 0) {
          eligible.push_back(local[succ]);
        }
      }
    }
    if (!ok) continue;
    const Schedule shifted = left_shift(inst, make_schedule(inst, starts));
    Individual candidate = decode_individual(inst, schedule_to_list(inst, shifted));
    result.schedules_generated += 2;
    if (tabu.contains(tabu_status(candidate.schedule))) continue;
    const bool better = candidate.makespan() < sched.makespan;
    if (!result.neighbor || candidate.makespan() < result.neighbor->makespan()) {
      result.neighbor = std::move(candidate);
    }
    if (better) {
      result.improved = true;
      break;
    }
  }
  return result;
}

NeighborResult neighborhood_b_move(const ProjectInstance& inst,
                                   const ActivityList& list,
                                   const Schedule& sched, const Block& block,
                                   std::span<const double> weights, Rng& rng,
                                   const GraspParams& grasp) {
  NeighborResult result;
  if (block.members.empty()) {
    result.neighbor = Individual{list, sched};
    return result;
  }
  for (const int p : inst.predecessors(block.core)) {
    if (block.contains(p)) return result;
  }
  const int n = inst.size();
  const int kc = inst.resource_count();
  std::vector<int> position(n);
  for (int q = 0; q < n; ++q) position[list[q]] = q;
  int first = n;
  for (const int i : block.members) first = std::min(first, position[i]);

  // Part 1: the list prefix before the block. Part 2: block members and
  // their ancestors outside the prefix. Part 3: everything else.
  enum Part : char { kPrefix, kRebuilt, kSuffix };
  std::vector<Part> part(n, kSuffix);
  for (int q = 0; q < first; ++q) part[list[q]] = kPrefix;
  std::vector<int> rebuilt;
  for (const int i : block.members) {
    part[i] = kRebuilt;
    rebuilt.push_back(i);
  }
  for (std::size_t head = 0; head < rebuilt.size(); ++head) {
    for (const int p : inst.predecessors(rebuilt[head])) {
      if (part[p] == kSuffix) {
        part[p] = kRebuilt;
        rebuilt.push_back(p);
      }
    }
  }

  ResourceProfile profile(inst, sched.makespan + 1);
  std::vector<int> start(n, -1);
  std::set<int> events{0};
  for (int q = 0; q < first; ++q) {
    const int j = list[q];
    int est = 0;
    for (const int p : inst.predecessors(j)) {
      est = std::max(est, start[p] + inst.duration(p));
    }
    const int d = inst.duration(j);
    start[j] = d > 0 ? profile.earliest_fit(est, d, inst.demands(j)) : est;
    profile.reserve(start[j], d, inst.demands(j));
    events.insert(start[j]);
    events.insert(start[j] + d);
  }

  std::vector<int> demands;
  std::vector<int> remaining(kc);
  std::vector<int> eligible;
  std::size_t pending = rebuilt.size();
  int t = 0;
  while (pending > 0) {
    eligible.clear();
    for (const int j : rebuilt) {
      if (start[j] >= 0) continue;
      bool ready = true;
      for (const int p : inst.predecessors(j)) {
        if (start[p] < 0 || start[p] + inst.duration(p) > t) {
          ready = false;
          break;
        }
      }
      if (ready && profile.fits(t, inst.duration(j), inst.demands(j))) {
        eligible.push_back(j);
      }
    }
    bool instant = false;
    if (!eligible.empty()) {
      demands.clear();
      for (const int j : eligible) {
        const auto d = inst.demands(j);
        demands.insert(demands.end(), d.begin(), d.end());
      }
      for (int k = 0; k < kc; ++k) remaining[k] = profile.remaining(t, k);
      const KnapsackInput input{demands, remaining, inst.capacities(), weights};
      const KnapsackSolution chosen = grasp_knapsack(input, rng, grasp);
      for (const int item : chosen.items) {
        const int j = eligible[item];
        const int d = inst.duration(j);
        if (!profile.fits(t, d, inst.demands(j))) continue;
        profile.reserve(t, d, inst.demands(j));
        start[j] = t;
        --pending;
        events.insert(t + d);
        if (d == 0) instant = true;
      }
    }
    if (instant) continue;
    const auto next = events.upper_bound(t);
    t = next == events.end() ? t + 1 : *next;
  }

  std::sort(rebuilt.begin(), rebuilt.end(), [&](int a, int b) {
    return start[a] != start[b] ? start[a] < start[b]
                                : position[a] < position[b];
  });
  std::vector<int> order(list.order.begin(), list.order.begin() + first);
  order.insert(order.end(), rebuilt.begin(), rebuilt.end());
  for (int q = first; q < n; ++q) {
    if (part[list[q]] == kSuffix) order.push_back(list[q]);
  }
  result.neighbor =
      decode_individual(inst, repair_precedence(inst, std::move(order)));
  result.schedules_generated = 1;
  result.improved = result.neighbor->makespan() < sched.makespan;
  return result;
}

NsResult ns_run(const ProjectInstance& inst, const Individual& start,
                std::span<const double> weights, const NsParams& params,
                Rng& rng, Budget& budget) {
  NsResult out{start, {}};
  const int real = inst.real_count();
  if (real == 0) return out;
  TabuList tabu(params.tabu_capacity);
  tabu.push(tabu_status(start.schedule));
  Individual current = start;
  NsStats& stats = out.stats;
  while (stats.schedules_generated < params.schedule_limit &&
         !budget.exhausted()) {
    ++stats.iterations;
    const int core = rng.uniform_int(1, real);
    Block block = create_block(inst, current.schedule, core,
                               params.block_size, rng);
    NeighborResult step;
    if (rng.coin()) {
      block.windows = compute_windows(inst, current.schedule, block.members);
      step = neighborhood_a_move(inst, current.schedule, block, weights,
                                 params.tries, tabu, rng);
    } else {
      ++stats.b_attempts;
      step = neighborhood_b_move(inst, current.list, current.schedule, block,
                                 weights, rng, params.grasp);
      if (step.neighbor) {
        ++stats.b_nonempty;
        if (tabu.contains(tabu_status(step.neighbor->schedule))) {
          step.neighbor.reset();
        }
      }
    }
    const int cost = std::max(step.schedules_generated, 1);
    stats.schedules_generated += cost;
    budget.charge(cost);
    if (!step.neighbor) continue;
    ++stats.moves;
    current = std::move(*step.neighbor);
    tabu.push(tabu_status(current.schedule));
    if (current.makespan() < out.best.makespan()) {
      out.best = current;
      ++stats.improvements;
    }
  }
  return out;
}

}  // namespace gans
