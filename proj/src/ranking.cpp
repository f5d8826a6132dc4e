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

#include "gans/ranking.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "gans/errors.hpp"

namespace gans {

namespace {

constexpr double kMinWeight = 0.05;
constexpr std::array<double, 4> kSteep = {1.0, 0.8, 0.6, 0.4};
constexpr std::array<double, 4> kMild = {1.0, 0.9, 0.8, 0.7};

// Longest path from the start of j to the end of the project.
std::vector<int> tails(const ProjectInstance& inst) {
  const auto topo = inst.topological_order();
  std::vector<int> tail(inst.size(), 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const int j = *it;
    int best = 0;
    for (const int s : inst.successors(j)) best = std::max(best, tail[s]);
    tail[j] = best + inst.duration(j);
  }
  return tail;
}

std::vector<int> latest_starts(const ProjectInstance& inst,
                               const std::vector<int>& tail, int makespan) {
  std::vector<int> ls(inst.size());
  for (int j = 0; j < inst.size(); ++j) ls[j] = makespan - tail[j];
  return ls;
}

// Prefix check of the cumulative constraint for given starts, over t up to
// `through` (consumption ends by the makespan, capacity keeps accruing).
bool prefix_feasible(const ProjectInstance& inst,
                     const std::vector<int>& starts, int through) {
  const int k_count = inst.resource_count();
  int end = 0;
  for (int j = 0; j < inst.size(); ++j) {
    end = std::max(end, starts[j] + inst.duration(j));
  }
  end = std::min(std::max(end, 0), through);
  // Difference array of per-unit consumption.
  std::vector<std::int64_t> delta(static_cast<std::size_t>(end + 1) * k_count,
                                  0);
  for (int j = 0; j < inst.size(); ++j) {
    const int s = starts[j];
    const int f = std::min(s + inst.duration(j), end);
    if (s >= f) continue;
    for (int k = 0; k < k_count; ++k) {
      delta[static_cast<std::size_t>(s) * k_count + k] += inst.demand(j, k);
      delta[static_cast<std::size_t>(f) * k_count + k] -= inst.demand(j, k);
    }
  }
  std::vector<std::int64_t> rate(k_count, 0), used(k_count, 0);
  for (int t = 0; t < end; ++t) {
    for (int k = 0; k < k_count; ++k) {
      rate[k] += delta[static_cast<std::size_t>(t) * k_count + k];
      used[k] += rate[k];
      if (used[k] > static_cast<std::int64_t>(t + 1) * inst.capacity(k)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool satisfies_cumulative(const ProjectInstance& inst, const Schedule& sched) {
  return prefix_feasible(inst, sched.starts,
                         std::max(inst.horizon(), sched.makespan));
}

CumulativeRelaxation solve_cumulative_relaxation(const ProjectInstance& inst) {
  const auto tail = tails(inst);
  const int k_count = inst.resource_count();
  std::vector<std::int64_t> work(k_count, 0);
  for (int j = 0; j < inst.size(); ++j) {
    for (int k = 0; k < k_count; ++k) {
      work[k] += static_cast<std::int64_t>(inst.demand(j, k)) *
                 inst.duration(j);
    }
  }
  int low = tail[0];
  for (int k = 0; k < k_count; ++k) {
    const std::int64_t cap = inst.capacity(k);
    low = std::max(low, static_cast<int>((work[k] + cap - 1) / cap));
  }
  auto feasible = [&](int makespan) {
    return prefix_feasible(inst, latest_starts(inst, tail, makespan),
                           makespan);
  };
  // Any serial schedule fits within the total duration, so this bound is
  // always feasible.
  int high = std::max(low, inst.total_duration());
  while (low < high) {
    const int mid = low + (high - low) / 2;
    if (feasible(mid)) {
      high = mid;
    } else {
      low = mid + 1;
    }
  }
  CumulativeRelaxation out;
  out.makespan = low;
  out.schedule = make_schedule(inst, latest_starts(inst, tail, low));
  out.residues.resize(k_count);
  for (int k = 0; k < k_count; ++k) {
    out.residues[k] =
        static_cast<std::int64_t>(low) * inst.capacity(k) - work[k];
  }
  return out;
}

std::vector<int> rank_resources(std::span<const std::int64_t> residues,
                                std::span<const int> capacities,
                                int relaxed_makespan) {
  (void)relaxed_makespan;  // common factor of every relative residue
  std::vector<int> rank(residues.size());
  std::iota(rank.begin(), rank.end(), 0);
  // R^_a / R_a < R^_b / R_b, compared without division.
  std::stable_sort(rank.begin(), rank.end(), [&](int a, int b) {
    return static_cast<__int128>(residues[a]) * capacities[b] <
           static_cast<__int128>(residues[b]) * capacities[a];
  });
  return rank;
}

std::string to_string(WeightMode mode) {
  switch (mode) {
    case WeightMode::kSteep:
      return "steep";
    case WeightMode::kMild:
      return "mild";
    case WeightMode::kUniform:
      return "uniform";
    case WeightMode::kResidueRatio:
      return "ratio";
    case WeightMode::kRandom:
      return "random";
  }
  return "unknown";
}

WeightMode weight_mode_from_string(const std::string& name) {
  for (const auto mode :
       {WeightMode::kSteep, WeightMode::kMild, WeightMode::kUniform,
        WeightMode::kResidueRatio, WeightMode::kRandom}) {
    if (to_string(mode) == name) return mode;
  }
  throw ConfigError("unknown weight mode '" + name + "'");
}

ResourceWeights assign_weights(std::span<const int> rank,
                               std::span<const std::int64_t> residues,
                               WeightMode mode, Rng& rng) {
  const int k_count = static_cast<int>(rank.size());
  if (mode == WeightMode::kRandom) {
    if (k_count <= 4) {
      constexpr std::array<WeightMode, 4> choices = {
          WeightMode::kSteep, WeightMode::kMild, WeightMode::kUniform,
          WeightMode::kResidueRatio};
      mode = choices[rng.below(choices.size())];
    } else {
      mode = rng.coin() ? WeightMode::kUniform : WeightMode::kResidueRatio;
    }
  }
  ResourceWeights out{std::vector<double>(k_count, 1.0), mode};
  switch (mode) {
    case WeightMode::kSteep:
    case WeightMode::kMild: {
      if (k_count > 4) {
        throw ConfigError("fixed weight vectors cover at most 4 resources, "
                          "instance has " + std::to_string(k_count));
      }
      const auto& table = mode == WeightMode::kSteep ? kSteep : kMild;
      for (int i = 0; i < k_count; ++i) out.values[rank[i]] = table[i];
      break;
    }
    case WeightMode::kUniform:
    case WeightMode::kRandom:
      break;
    case WeightMode::kResidueRatio: {
      if (k_count == 0) break;
      const std::int64_t last = residues[rank.back()];
      if (last <= 0) break;
      double previous = 2.0;
      for (int i = 0; i < k_count; ++i) {
        double w = 2.0 - static_cast<double>(residues[rank[i]]) /
                             static_cast<double>(last);
        w = std::max(std::min(w, previous), kMinWeight);
        out.values[rank[i]] = w;
        previous = w;
      }
      break;
    }
  }
  return out;
}

RankingResult rank_and_weigh(const ProjectInstance& inst, WeightMode mode,
                             Rng& rng) {
  RankingResult out;
  out.relaxation = solve_cumulative_relaxation(inst);
  out.rank = rank_resources(out.relaxation.residues, inst.capacities(),
                            out.relaxation.makespan);
  out.weights = assign_weights(out.rank, out.relaxation.residues, mode, rng);
  return out;
}

}  // namespace gans
