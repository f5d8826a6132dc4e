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

#include "gans/knapsack.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace gans {

namespace {

constexpr double kEps = 1e-12;

class Selection {
 public:
  explicit Selection(const KnapsackInput& input)
      : input_(input),
        chosen_(input.item_count(), false),
        residual_(input.remaining.begin(), input.remaining.end()) {}

  bool chosen(int item) const { return chosen_[item]; }
  double value() const { return value_; }

  bool fits(int item) const {
    const auto d = input_.demand(item);
    for (int k = 0; k < input_.resource_count(); ++k) {
      if (d[k] > residual_[k]) return false;
    }
    return true;
  }
  // Fits once `freed` (already chosen) is taken out.
  bool fits_without(int item, int freed) const {
    const auto d = input_.demand(item);
    const auto f = input_.demand(freed);
    for (int k = 0; k < input_.resource_count(); ++k) {
      if (d[k] > residual_[k] + f[k]) return false;
    }
    return true;
  }

  void add(int item, double v) {
    chosen_[item] = true;
    const auto d = input_.demand(item);
    for (int k = 0; k < input_.resource_count(); ++k) residual_[k] -= d[k];
    value_ += v;
  }
  void remove(int item, double v) {
    chosen_[item] = false;
    const auto d = input_.demand(item);
    for (int k = 0; k < input_.resource_count(); ++k) residual_[k] += d[k];
    value_ -= v;
  }

  KnapsackSolution solution() const {
    KnapsackSolution out;
    for (int i = 0; i < input_.item_count(); ++i) {
      if (chosen_[i]) {
        out.items.push_back(i);
        out.value += item_value(input_, i);
      }
    }
    return out;
  }

 private:
  const KnapsackInput& input_;
  std::vector<bool> chosen_;
  std::vector<int> residual_;
  double value_ = 0.0;
};

struct Prepared {
  std::vector<double> value;
  std::vector<double> ratio;
  std::vector<int> by_ratio;  // fitting items, best ratio first
  std::vector<int> by_value;  // fitting items, best value first
};

Prepared prepare(const KnapsackInput& input) {
  const int items = input.item_count();
  Prepared p;
  p.value.resize(items);
  p.ratio.resize(items);
  for (int i = 0; i < items; ++i) {
    p.value[i] = item_value(input, i);
    double load = 0.0;
    bool fits = true;
    const auto d = input.demand(i);
    for (int k = 0; k < input.resource_count(); ++k) {
      if (d[k] > input.remaining[k]) fits = false;
      if (d[k] > 0) {
        load += static_cast<double>(d[k]) /
                std::max(input.remaining[k], 1);
      }
    }
    p.ratio[i] = load <= 0.0 ? std::numeric_limits<double>::infinity()
                             : p.value[i] / load;
    if (fits) p.by_ratio.push_back(i);
  }
  std::stable_sort(p.by_ratio.begin(), p.by_ratio.end(),
                   [&](int a, int b) { return p.ratio[a] > p.ratio[b]; });
  p.by_value = p.by_ratio;
  std::stable_sort(p.by_value.begin(), p.by_value.end(),
                   [&](int a, int b) { return p.value[a] > p.value[b]; });
  return p;
}

void fill(Selection& sel, const Prepared& p) {
  for (const int i : p.by_value) {
    if (!sel.chosen(i) && sel.fits(i)) sel.add(i, p.value[i]);
  }
}

// Best-improvement exchange moves: 1-for-1, then 1-for-2, then 2-for-1,
// each followed by a refill, until no move improves the value.
void local_search(Selection& sel, const Prepared& p) {
  const auto& items = p.by_value;
  fill(sel, p);
  while (true) {
    double best_gain = kEps;
    int out_a = -1, out_b = -1, in_a = -1, in_b = -1;
    for (const int o : items) {
      if (!sel.chosen(o)) continue;
      for (const int i : items) {
        if (sel.chosen(i)) continue;
        const double gain = p.value[i] - p.value[o];
        if (gain > best_gain && sel.fits_without(i, o)) {
          best_gain = gain;
          out_a = o, out_b = -1, in_a = i, in_b = -1;
        }
      }
    }
    if (out_a < 0) {
      // 1-for-2: remove o, add i and j.
      for (const int o : items) {
        if (!sel.chosen(o)) continue;
        sel.remove(o, p.value[o]);
        for (std::size_t x = 0; x < items.size(); ++x) {
          const int i = items[x];
          if (sel.chosen(i) || i == o || !sel.fits(i)) continue;
          sel.add(i, p.value[i]);
          for (std::size_t y = x + 1; y < items.size(); ++y) {
            const int j = items[y];
            if (sel.chosen(j) || j == o) continue;
            const double gain = p.value[i] + p.value[j] - p.value[o];
            if (gain > best_gain && sel.fits(j)) {
              best_gain = gain;
              out_a = o, out_b = -1, in_a = i, in_b = j;
            }
          }
          sel.remove(i, p.value[i]);
        }
        sel.add(o, p.value[o]);
      }
    }
    if (out_a < 0) {
      // 2-for-1: remove o and q, add i.
      for (std::size_t x = 0; x < items.size(); ++x) {
        const int o = items[x];
        if (!sel.chosen(o)) continue;
        for (std::size_t y = x + 1; y < items.size(); ++y) {
          const int q = items[y];
          if (!sel.chosen(q)) continue;
          sel.remove(o, p.value[o]);
          sel.remove(q, p.value[q]);
          for (const int i : items) {
            if (sel.chosen(i) || i == o || i == q) continue;
            const double gain = p.value[i] - p.value[o] - p.value[q];
            if (gain > best_gain && sel.fits(i)) {
              best_gain = gain;
              out_a = o, out_b = q, in_a = i, in_b = -1;
            }
          }
          sel.add(o, p.value[o]);
          sel.add(q, p.value[q]);
        }
      }
    }
    if (out_a < 0) return;
    sel.remove(out_a, p.value[out_a]);
    if (out_b >= 0) sel.remove(out_b, p.value[out_b]);
    sel.add(in_a, p.value[in_a]);
    if (in_b >= 0) sel.add(in_b, p.value[in_b]);
    fill(sel, p);
  }
}

}  // namespace

double item_value(const KnapsackInput& input, int item) {
  const auto d = input.demand(item);
  double v = 0.0;
  for (int k = 0; k < input.resource_count(); ++k) {
    v += input.weights[k] * d[k] / input.capacities[k];
  }
  return v;
}

bool is_feasible_selection(const KnapsackInput& input,
                           std::span<const int> items) {
  std::vector<long long> used(input.resource_count(), 0);
  std::vector<bool> seen(input.item_count(), false);
  for (const int i : items) {
    if (i < 0 || i >= input.item_count() || seen[i]) return false;
    seen[i] = true;
    const auto d = input.demand(i);
    for (int k = 0; k < input.resource_count(); ++k) used[k] += d[k];
  }
  for (int k = 0; k < input.resource_count(); ++k) {
    if (used[k] > input.remaining[k]) return false;
  }
  return true;
}

KnapsackSolution greedy_knapsack(const KnapsackInput& input) {
  const Prepared p = prepare(input);
  Selection sel(input);
  for (const int i : p.by_ratio) {
    if (sel.fits(i)) sel.add(i, p.value[i]);
  }
  return sel.solution();
}

KnapsackSolution grasp_knapsack(const KnapsackInput& input, Rng& rng,
                                const GraspParams& params) {
  const Prepared p = prepare(input);
  KnapsackSolution best;
  best.value = -1.0;
  std::vector<int> candidates;
  for (int c = 0; c < std::max(params.constructions, 1); ++c) {
    Selection sel(input);
    if (c == 0) {
      for (const int i : p.by_ratio) {
        if (sel.fits(i)) sel.add(i, p.value[i]);
      }
      // The plain greedy result is kept as a floor before improving it.
      best = sel.solution();
    } else {
      while (true) {
        candidates.clear();
        for (const int i : p.by_ratio) {
          if (!sel.chosen(i) && sel.fits(i)) candidates.push_back(i);
        }
        if (candidates.empty()) break;
        const auto rcl = std::max<std::size_t>(
            1, static_cast<std::size_t>(
                   std::ceil(params.rcl_fraction * candidates.size())));
        const int pick = candidates[rng.below(rcl)];
        sel.add(pick, p.value[pick]);
      }
    }
    local_search(sel, p);
    auto candidate = sel.solution();
    if (candidate.value > best.value + kEps) best = std::move(candidate);
  }
  if (best.value < 0.0) best.value = 0.0;
  return best;
}

}  // namespace gans
