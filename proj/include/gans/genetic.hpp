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

// Genetic operators on activity lists: population management, parent
// selection, dense-gene extraction, the two dense-gene crossovers and the
// two-phase mutation.

#ifndef GANS_GENETIC_HPP_
#define GANS_GENETIC_HPP_

#include <span>
#include <vector>

#include "gans/budget.hpp"
#include "gans/instance.hpp"
#include "gans/rng.hpp"

namespace gans {

struct Individual {
  ActivityList list;
  Schedule schedule;  // serial decoding of `list`

  int makespan() const { return schedule.makespan; }
};

Individual decode_individual(const ProjectInstance& inst, ActivityList list);

// Members kept sorted by nondecreasing makespan; equal makespans keep
// insertion order.
class Population {
 public:
  explicit Population(int capacity) : capacity_(capacity) {}

  int capacity() const { return capacity_; }
  void set_capacity(int capacity) { capacity_ = capacity; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool full() const { return size() >= capacity_; }

  const Individual& operator[](int i) const { return members_[i]; }
  const Individual& best() const { return members_.front(); }
  const Individual& worst() const { return members_.back(); }
  const std::vector<Individual>& members() const { return members_; }

  void insert(Individual individual);
  void remove_worst(int count);
  // True when a member has the same makespan and start vector.
  bool contains(const Schedule& sched) const;

 private:
  int capacity_;
  std::vector<Individual> members_;
};

// Random feasible list, parallel decoding, then forward-backward
// improvement. Charges every decode to `budget`.
Individual random_individual(const ProjectInstance& inst, Rng& rng,
                             Budget& budget);

struct InitOptions {
  int capacity = 60;
  bool uniqueness = true;
  // Uniqueness is waived after retry_factor * capacity rejected duplicates.
  int retry_factor = 5;
};

struct InitReport {
  Population population;
  int duplicates_rejected = 0;
  bool uniqueness_waived = false;
};

// Fills a population of `capacity` members. Stops early, with at least one
// member, when the budget runs out.
InitReport init_population(const ProjectInstance& inst,
                           const InitOptions& options, Rng& rng,
                           Budget& budget);

// Scans the sorted population admitting each member with `probability`;
// when the scan ends short, the best members not yet admitted fill up the
// set. Returns indices into the population in admission order.
std::vector<int> select_parents(const Population& pop, int parents_size,
                                double probability, Rng& rng);

struct DenseGene {
  std::vector<int> activities;  // J(t), ascending ids
  double weight = 0.0;          // weighted unused capacity v_t
  int time = 0;                 // first unit interval of the snapshot
};

// Weighted unused capacity when `activities` run together:
// sum_k (R_k - sum_j r_jk) * w_k / R_k.
double gene_weight(const ProjectInstance& inst,
                   std::span<const int> activities,
                   std::span<const double> weights);

// Dense genes of a schedule, in time order: the running sets J(t) with
// v_t < threshold. Overlapping genes are resolved in favor of the smaller
// v_t, earlier t on ties.
std::vector<DenseGene> dense_activities(const ProjectInstance& inst,
                                        const Schedule& sched,
                                        double threshold,
                                        std::span<const double> weights);

// Crossover A: repeatedly takes, among the earliest still-untouched dense
// gene of each parent, the one with the lower weight (parent 1 on ties), and
// copies that parent's list prefix through the gene; the rest follows the
// shorter parent's order.
ActivityList crossover_a(const ProjectInstance& inst, const Individual& first,
                         const Individual& second,
                         std::span<const DenseGene> first_genes,
                         std::span<const DenseGene> second_genes);

// Crossover B: the lowest-weight dense genes of both parents plus their
// outgoing (or incoming, by coin flip) networks in the second parent's
// schedule graph determine a segment of the second parent's list, which is
// transplanted into the first parent's order at the same position.
ActivityList crossover_b(const ProjectInstance& inst, const Individual& first,
                         const Individual& second,
                         std::span<const DenseGene> first_genes,
                         std::span<const DenseGene> second_genes, Rng& rng);

// Activities reachable from `root` in the schedule graph, whose arcs are the
// precedence arcs (i, j) with c_i = s_j. Outgoing follows successors,
// incoming follows predecessors. Includes `root`, never the dummies.
std::vector<int> schedule_network(const ProjectInstance& inst,
                                  const Schedule& sched, int root,
                                  bool outgoing);

// `iterations` rounds of: swap two random activities if precedence allows,
// then move one random activity to a random feasible position.
ActivityList mutate(const ProjectInstance& inst, ActivityList list,
                    int iterations, Rng& rng);

// Removes the `elite_count` worst members, then inserts the `elite_count`
// best offspring. Capacity and sortedness are preserved.
void next_generation(Population& pop, std::vector<Individual> offspring,
                     int elite_count);

}  // namespace gans

#endif  // GANS_GENETIC_HPP_
