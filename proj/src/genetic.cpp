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

#include "gans/genetic.hpp"

#include <algorithm>
#include <numeric>

#include "gans/sgs.hpp"

namespace gans {

namespace {

std::vector<int> positions_of(const ActivityList& list) {
  std::vector<int> pos(list.size());
  for (int p = 0; p < list.size(); ++p) pos[list[p]] = p;
  return pos;
}

const Individual& shorter(const Individual& first, const Individual& second) {
  return second.makespan() < first.makespan() ? second : first;
}

const DenseGene* lowest_weight(std::span<const DenseGene> genes) {
  const DenseGene* best = nullptr;
  for (const auto& g : genes) {
    if (best == nullptr || g.weight < best->weight) best = &g;
  }
  return best;
}

}  // namespace

Individual decode_individual(const ProjectInstance& inst, ActivityList list) {
  Schedule sched = serial_sgs(inst, list);
  return Individual{std::move(list), std::move(sched)};
}

void Population::insert(Individual individual) {
  const auto it = std::upper_bound(
      members_.begin(), members_.end(), individual.makespan(),
      [](int makespan, const Individual& m) { return makespan < m.makespan(); });
  members_.insert(it, std::move(individual));
}

void Population::remove_worst(int count) {
  const int keep = std::max(0, size() - std::max(count, 0));
  members_.resize(keep);
}

bool Population::contains(const Schedule& sched) const {
  auto [lo, hi] = std::equal_range(
      members_.begin(), members_.end(), sched.makespan,
      [](const auto& a, const auto& b) {
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>, int>) {
          return a < b.makespan();
        } else {
          return a.makespan() < b;
        }
      });
  for (auto it = lo; it != hi; ++it) {
    if (it->schedule.starts == sched.starts) return true;
  }
  return false;
}

Individual random_individual(const ProjectInstance& inst, Rng& rng,
                             Budget& budget) {
  const Schedule parallel = parallel_sgs(inst, random_feasible_list(inst, rng));
  Individual ind = decode_individual(inst, schedule_to_list(inst, parallel));
  budget.charge(2);
  FbiResult improved = fbi(inst, ind.schedule);
  budget.charge(improved.schedules_generated);
  if (improved.improved) {
    ind.list = std::move(improved.list);
    ind.schedule = std::move(improved.schedule);
  }
  return ind;
}

InitReport init_population(const ProjectInstance& inst,
                           const InitOptions& options, Rng& rng,
                           Budget& budget) {
  InitReport report{Population(options.capacity), 0, !options.uniqueness};
  const int max_rejections = options.retry_factor * options.capacity;
  while (report.population.size() < options.capacity) {
    if (!report.population.empty() && budget.exhausted()) break;
    Individual ind = random_individual(inst, rng, budget);
    if (!report.uniqueness_waived &&
        report.population.contains(ind.schedule)) {
      if (++report.duplicates_rejected >= max_rejections) {
        report.uniqueness_waived = true;
      }
      continue;
    }
    report.population.insert(std::move(ind));
  }
  return report;
}

std::vector<int> select_parents(const Population& pop, int parents_size,
                                double probability, Rng& rng) {
  const int target = std::min(parents_size, pop.size());
  std::vector<int> chosen;
  std::vector<bool> admitted(pop.size(), false);
  for (int i = 0; i < pop.size() && static_cast<int>(chosen.size()) < target;
       ++i) {
    if (rng.bernoulli(probability)) {
      admitted[i] = true;
      chosen.push_back(i);
    }
  }
  for (int i = 0; i < pop.size() && static_cast<int>(chosen.size()) < target;
       ++i) {
    if (!admitted[i]) {
      admitted[i] = true;
      chosen.push_back(i);
    }
  }
  return chosen;
}

double gene_weight(const ProjectInstance& inst,
                   std::span<const int> activities,
                   std::span<const double> weights) {
  double v = 0.0;
  for (int k = 0; k < inst.resource_count(); ++k) {
    int used = 0;
    for (const int j : activities) used += inst.demand(j, k);
    v += static_cast<double>(inst.capacity(k) - used) * weights[k] /
         inst.capacity(k);
  }
  return v;
}

std::vector<DenseGene> dense_activities(const ProjectInstance& inst,
                                        const Schedule& sched,
                                        double threshold,
                                        std::span<const double> weights) {
  // J(t) only changes at start or finish events.
  std::vector<int> events;
  events.reserve(2 * sched.size());
  for (int j = 0; j < sched.size(); ++j) {
    if (inst.duration(j) == 0) continue;
    events.push_back(sched.starts[j]);
    events.push_back(sched.starts[j] + inst.duration(j));
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  std::vector<DenseGene> candidates;
  std::vector<int> running;
  for (std::size_t e = 0; e + 1 < events.size(); ++e) {
    const int t = events[e];
    if (t >= sched.makespan) break;
    running.clear();
    for (int j = 0; j < sched.size(); ++j) {
      if (sched.starts[j] <= t && t < sched.starts[j] + inst.duration(j)) {
        running.push_back(j);
      }
    }
    if (running.empty()) continue;
    const double v = gene_weight(inst, running, weights);
    if (v < threshold) candidates.push_back({running, v, t});
  }

  std::vector<int> by_weight(candidates.size());
  std::iota(by_weight.begin(), by_weight.end(), 0);
  std::stable_sort(by_weight.begin(), by_weight.end(), [&](int a, int b) {
    return candidates[a].weight < candidates[b].weight;
  });
  std::vector<bool> taken(inst.size(), false);
  std::vector<bool> keep(candidates.size(), false);
  for (const int c : by_weight) {
    const auto& acts = candidates[c].activities;
    if (std::any_of(acts.begin(), acts.end(),
                    [&](int j) { return taken[j]; })) {
      continue;
    }
    for (const int j : acts) taken[j] = true;
    keep[c] = true;
  }
  std::vector<DenseGene> genes;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (keep[c]) genes.push_back(std::move(candidates[c]));
  }
  return genes;
}

ActivityList crossover_a(const ProjectInstance& inst, const Individual& first,
                         const Individual& second,
                         std::span<const DenseGene> first_genes,
                         std::span<const DenseGene> second_genes) {
  const int n = inst.size();
  const Individual* parents[2] = {&first, &second};
  const std::span<const DenseGene> genes[2] = {first_genes, second_genes};
  const std::vector<int> position[2] = {positions_of(first.list),
                                        positions_of(second.list)};
  std::vector<bool> added(n, false);
  ActivityList child;
  child.order.reserve(n);
  std::size_t next_gene[2] = {0, 0};
  int copied_upto[2] = {0, 0};

  auto untouched = [&](const DenseGene& g) {
    return std::none_of(g.activities.begin(), g.activities.end(),
                        [&](int j) { return added[j]; });
  };

  while (true) {
    for (int p = 0; p < 2; ++p) {
      while (next_gene[p] < genes[p].size() &&
             !untouched(genes[p][next_gene[p]])) {
        ++next_gene[p];
      }
    }
    const bool has0 = next_gene[0] < genes[0].size();
    const bool has1 = next_gene[1] < genes[1].size();
    if (!has0 && !has1) break;
    int p = has0 ? 0 : 1;
    if (has0 && has1 &&
        genes[1][next_gene[1]].weight < genes[0][next_gene[0]].weight) {
      p = 1;
    }
    const DenseGene& gene = genes[p][next_gene[p]++];
    int last = 0;
    for (const int j : gene.activities) last = std::max(last, position[p][j]);
    const ActivityList& source = parents[p]->list;
    for (int q = copied_upto[p]; q <= last; ++q) {
      const int j = source[q];
      if (!added[j]) {
        added[j] = true;
        child.order.push_back(j);
      }
    }
    copied_upto[p] = std::max(copied_upto[p], last + 1);
  }
  for (const int j : shorter(first, second).list.order) {
    if (!added[j]) {
      added[j] = true;
      child.order.push_back(j);
    }
  }
  return child;
}

std::vector<int> schedule_network(const ProjectInstance& inst,
                                  const Schedule& sched, int root,
                                  bool outgoing) {
  // The dummies never belong to a network.
  std::vector<bool> seen(inst.size(), false);
  seen[0] = seen[inst.sink()] = true;
  std::vector<int> out{root};
  seen[root] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    const int v = out[head];
    if (outgoing) {
      const int finish = sched.starts[v] + inst.duration(v);
      for (const int w : inst.successors(v)) {
        if (!seen[w] && sched.starts[w] == finish) {
          seen[w] = true;
          out.push_back(w);
        }
      }
    } else {
      for (const int w : inst.predecessors(v)) {
        if (!seen[w] && sched.starts[w] + inst.duration(w) == sched.starts[v]) {
          seen[w] = true;
          out.push_back(w);
        }
      }
    }
  }
  return out;
}

ActivityList crossover_b(const ProjectInstance& inst, const Individual& first,
                         const Individual& second,
                         std::span<const DenseGene> first_genes,
                         std::span<const DenseGene> second_genes, Rng& rng) {
  const DenseGene* g1 = lowest_weight(first_genes);
  const DenseGene* g2 = lowest_weight(second_genes);
  if (g1 == nullptr && g2 == nullptr) return shorter(first, second).list;

  const int n = inst.size();
  const bool outgoing = rng.coin();
  std::vector<bool> marked(n, false);
  for (const DenseGene* g : {g1, g2}) {
    if (g == nullptr) continue;
    for (const int j : g->activities) {
      if (marked[j]) continue;
      for (const int w : schedule_network(inst, second.schedule, j, outgoing)) {
        marked[w] = true;
      }
    }
  }
  const auto position = positions_of(second.list);
  int left = n, right = -1;
  for (int j = 0; j < n; ++j) {
    if (marked[j]) {
      left = std::min(left, position[j]);
      right = std::max(right, position[j]);
    }
  }
  std::vector<bool> in_segment(n, false);
  for (int q = left; q <= right; ++q) in_segment[second.list[q]] = true;

  std::vector<int> rest;
  rest.reserve(n);
  for (const int j : first.list.order) {
    if (!in_segment[j]) rest.push_back(j);
  }
  std::vector<int> order;
  order.reserve(n);
  const int split = std::min(left, static_cast<int>(rest.size()));
  order.insert(order.end(), rest.begin(), rest.begin() + split);
  order.insert(order.end(), second.list.order.begin() + left,
               second.list.order.begin() + right + 1);
  order.insert(order.end(), rest.begin() + split, rest.end());
  return repair_precedence(inst, std::move(order));
}

ActivityList mutate(const ProjectInstance& inst, ActivityList list,
                    int iterations, Rng& rng) {
  const int real = inst.real_count();
  if (real < 1) return list;
  auto pos = positions_of(list);
  auto& order = list.order;
  for (int it = 0; it < iterations; ++it) {
    // Swap phase.
    if (real >= 2) {
      int a = rng.uniform_int(1, real);
      int b = rng.uniform_int(1, real - 1);
      if (b >= a) ++b;
      if (a > b) std::swap(a, b);
      const int left = order[a];
      const int right = order[b];
      bool ok = true;
      for (const int s : inst.successors(left)) {
        if (pos[s] <= b) {
          ok = false;
          break;
        }
      }
      if (ok) {
        for (const int p : inst.predecessors(right)) {
          if (pos[p] >= a) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        std::swap(order[a], order[b]);
        pos[left] = b;
        pos[right] = a;
      }
    }
    // Relocation phase.
    const int from = rng.uniform_int(1, real);
    const int j = order[from];
    int lo = 1, hi = real;
    for (const int p : inst.predecessors(j)) lo = std::max(lo, pos[p] + 1);
    for (const int s : inst.successors(j)) hi = std::min(hi, pos[s] - 1);
    if (hi <= lo) continue;
    const int to = rng.uniform_int(lo, hi);
    if (to == from) continue;
    if (to > from) {
      std::rotate(order.begin() + from, order.begin() + from + 1,
                  order.begin() + to + 1);
      for (int q = from; q <= to; ++q) pos[order[q]] = q;
    } else {
      std::rotate(order.begin() + to, order.begin() + from,
                  order.begin() + from + 1);
      for (int q = to; q <= from; ++q) pos[order[q]] = q;
    }
  }
  return list;
}

void next_generation(Population& pop, std::vector<Individual> offspring,
                     int elite_count) {
  const int count =
      std::min(std::max(elite_count, 0), static_cast<int>(offspring.size()));
  if (count == 0) return;
  std::stable_sort(offspring.begin(), offspring.end(),
                   [](const Individual& a, const Individual& b) {
                     return a.makespan() < b.makespan();
                   });
  pop.remove_worst(count);
  for (int i = 0; i < count; ++i) pop.insert(std::move(offspring[i]));
}

}  // namespace gans
