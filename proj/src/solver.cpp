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

#include "gans/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gans/neighborhood.hpp"
#include "gans/ranking.hpp"
#include "gans/sgs.hpp"

namespace gans {

namespace {

double step(double value, double delta, double lo, double hi) {
  return std::clamp(std::round((value + delta) * 100.0) / 100.0, lo, hi);
}

std::string fmt(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

class Controller {
 public:
  Controller(const ProjectInstance& inst, const SolverConfig& config)
      : inst_(inst),
        config_(config),
        rng_(config.seed),
        budget_(config.lambda, deadline(config)) {}

  SolveResult run();

 private:
  static std::optional<Budget::Clock::time_point> deadline(
      const SolverConfig& config) {
    if (!config.time_limit) return std::nullopt;
    return Budget::Clock::now() +
           std::chrono::duration_cast<Budget::Clock::duration>(
               std::chrono::duration<double>(*config.time_limit));
  }

  int capacity() const { return state_.population_capacity; }
  bool at_bound() const { return record_->makespan() <= stats_.lower_bound; }
  void offer(const Individual& ind);
  bool generation();
  void refresh();
  void burst(int steps);
  void adapt();
  SolveResult finish();

  const ProjectInstance& inst_;
  const SolverConfig& config_;
  Rng rng_;
  Budget budget_;
  RunStats stats_;
  RankingResult ranking_;
  std::vector<double> weights_;
  AdaptState state_;
  AdaptSignals signals_;
  double gene_total_ = 0.0;
  int gene_samples_ = 0;
  bool uniqueness_ = true;
  Population pop_{0};
  std::optional<Individual> record_;
};

void Controller::offer(const Individual& ind) {
  if (ind.makespan() < record_->makespan()) {
    record_ = ind;
    stats_.trace.push_back({budget_.used(), ind.makespan()});
    signals_.record_improved = true;
  }
}

// One generation. Returns true when the record improved.
bool Controller::generation() {
  const int cap = capacity();
  const int parents_size =
      config_.parents_size > 0 ? config_.parents_size : std::max(2, cap / 2);
  const int offspring_count = config_.offspring_count > 0
                                  ? config_.offspring_count
                                  : std::max(1, cap / 2);
  const int elite =
      config_.elite_count >= 0 ? config_.elite_count : std::max(1, cap / 4);

  const std::vector<int> parents =
      select_parents(pop_, parents_size, state_.parent_probability, rng_);
  std::vector<std::vector<DenseGene>> genes;
  genes.reserve(parents.size());
  for (const int p : parents) {
    genes.push_back(dense_activities(inst_, pop_[p].schedule,
                                     state_.dense_threshold, weights_));
    gene_total_ += static_cast<double>(genes.back().size());
    ++gene_samples_;
  }

  const int before = record_->makespan();
  std::vector<Individual> offspring;
  const auto m = static_cast<std::uint64_t>(parents.size());
  for (int c = 0; c < offspring_count && !budget_.exhausted(); ++c) {
    std::uint64_t a = rng_.below(m);
    std::uint64_t b = a;
    if (m > 1) {
      b = rng_.below(m - 1);
      if (b >= a) ++b;
    }
    const Individual& first = pop_[parents[a]];
    const Individual& second = pop_[parents[b]];
    ActivityList list =
        rng_.coin()
            ? crossover_a(inst_, first, second, genes[a], genes[b])
            : crossover_b(inst_, first, second, genes[a], genes[b], rng_);
    Individual child = decode_individual(inst_, std::move(list));
    budget_.charge(1);
    if (config_.mutation_iterations > 0) {
      Individual mutated = decode_individual(
          inst_, mutate(inst_, child.list, config_.mutation_iterations, rng_));
      budget_.charge(1);
      if (mutated.makespan() <= child.makespan()) child = std::move(mutated);
    }
    FbiResult improved = fbi(inst_, child.schedule);
    budget_.charge(improved.schedules_generated);
    if (improved.improved) {
      child = Individual{std::move(improved.list), std::move(improved.schedule)};
    }
    offer(child);
    ++signals_.offspring;
    if (pop_.contains(child.schedule)) {
      ++signals_.duplicate_offspring;
      if (uniqueness_) continue;
    }
    offspring.push_back(std::move(child));
  }
  next_generation(pop_, std::move(offspring), elite);
  ++stats_.generations;
  return record_->makespan() < before;
}

// Replaces the worst members by fresh chromosomes and tops the population up
// to its capacity.
void Controller::refresh() {
  const int cap = capacity();
  pop_.remove_worst(static_cast<int>(cap * config_.replace_fraction));
  const int needed = cap - pop_.size();
  if (needed <= 0) return;
  signals_.replacements_requested += needed;
  const int max_failures = 5 * needed;
  int failures = 0;
  while (pop_.size() < cap && !budget_.exhausted()) {
    Individual ind = random_individual(inst_, rng_, budget_);
    offer(ind);
    if (uniqueness_ && pop_.contains(ind.schedule)) {
      ++signals_.uniqueness_failures;
      if (++failures >= max_failures) break;
      continue;
    }
    pop_.insert(std::move(ind));
  }
}

void Controller::burst(int steps) {
  // Rank-biased start: scanning from the best, each member is taken with
  // probability 1/2; the best is the fallback.
  int start = 0;
  for (int i = 0; i < pop_.size(); ++i) {
    if (rng_.coin()) {
      start = i;
      break;
    }
  }
  NsParams params;
  params.schedule_limit = steps;
  params.block_size = state_.block_size;
  params.tries = config_.lambda_ns;
  params.tabu_capacity = config_.tabu_capacity;
  params.grasp = {config_.grasp_constructions, config_.grasp_rcl_fraction};
  NsResult result = ns_run(inst_, pop_[start], weights_, params, rng_, budget_);
  ++stats_.ns_bursts;
  signals_.b_attempts += result.stats.b_attempts;
  signals_.b_nonempty += result.stats.b_nonempty;
  offer(result.best);
  if (!pop_.contains(result.best.schedule)) {
    if (pop_.full()) pop_.remove_worst(1);
    pop_.insert(std::move(result.best));
  }
}

void Controller::adapt() {
  signals_.mean_gene_count =
      gene_samples_ > 0 ? gene_total_ / gene_samples_ : 0.0;
  AdaptLimits limits;
  limits.max_block_size = std::max(1, inst_.real_count());
  if (config_.population_capacity > 0) {
    limits.min_population = limits.max_population = capacity();
  } else {
    limits.min_population = config_.min_population;
    limits.max_population = config_.max_population;
  }
  limits.p_reset_changes = config_.p_reset_changes;
  AdaptOutcome outcome = adapt_parameters(state_, signals_, limits);
  state_ = outcome.state;
  if (outcome.redraw_weights) {
    weights_ = assign_weights(ranking_.rank, ranking_.relaxation.residues,
                              config_.weight_mode, rng_)
                   .values;
  }
  for (auto& line : outcome.log) {
    stats_.parameter_log.push_back("schedules " +
                                   std::to_string(budget_.used()) + ": " +
                                   line);
  }
  pop_.set_capacity(capacity());
  if (pop_.size() > capacity()) pop_.remove_worst(pop_.size() - capacity());
  signals_ = {};
  gene_total_ = 0.0;
  gene_samples_ = 0;
}

SolveResult Controller::finish() {
  if (at_bound()) {
    stats_.stop = StopReason::kLowerBound;
  } else if (budget_.limit() && budget_.used() >= *budget_.limit()) {
    stats_.stop = StopReason::kBudget;
  } else if (budget_.exhausted()) {
    stats_.stop = StopReason::kTimeLimit;
  }
  stats_.schedules_generated = budget_.used();
  return SolveResult{std::move(*record_), std::move(stats_)};
}

SolveResult Controller::run() {
  check_config(config_);
  ranking_ = rank_and_weigh(inst_, config_.weight_mode, rng_);
  weights_ = ranking_.weights.values;
  stats_.critical_path = critical_path_lower_bound(inst_);
  stats_.relaxed_makespan = ranking_.relaxation.makespan;
  stats_.lower_bound = std::max(stats_.critical_path, stats_.relaxed_makespan);

  state_.dense_threshold = config_.dense_threshold;
  state_.parent_probability = config_.parent_probability;
  state_.block_size = config_.block_size;
  state_.population_capacity =
      config_.population_capacity > 0
          ? config_.population_capacity
          : auto_population_capacity(inst_, config_.min_population,
                                     config_.max_population);

  InitOptions init_options;
  init_options.capacity = capacity();
  init_options.uniqueness = config_.uniqueness;
  InitReport init = init_population(inst_, init_options, rng_, budget_);
  pop_ = std::move(init.population);
  uniqueness_ = config_.uniqueness && !init.uniqueness_waived;
  record_ = pop_.best();
  stats_.initial_makespan = record_->makespan();
  stats_.trace.push_back({budget_.used(), record_->makespan()});
  stats_.subset =
      classify_subset(record_->makespan(), std::max(stats_.critical_path, 1),
                      config_.sigma1, config_.sigma2);
  const SubsetMix mix = subset_mix(stats_.subset);
  const int trigger = config_.stagnation_trigger > 0 ? config_.stagnation_trigger
                                                     : mix.stagnation_trigger;
  const int steps = config_.ns_steps_per_burst >= 0 ? config_.ns_steps_per_burst
                                                    : mix.ns_steps_per_burst;
  const bool ga = config_.enable_crossover;
  if (!ga && steps == 0) {
    stats_.stop = StopReason::kNoSearch;
    stats_.schedules_generated = budget_.used();
    if (at_bound()) stats_.stop = StopReason::kLowerBound;
    return SolveResult{std::move(*record_), std::move(stats_)};
  }

  int stagnation = 0;
  while (!budget_.exhausted() && !at_bound()) {
    if (ga) {
      stagnation = generation() ? 0 : stagnation + 1;
    } else {
      stagnation = trigger;
    }
    if (budget_.exhausted() || at_bound()) break;
    if (stagnation < trigger) continue;
    stagnation = 0;
    refresh();
    if (steps > 0 && !budget_.exhausted()) burst(steps);
    if (config_.adaptive) adapt();
  }
  return finish();
}

}  // namespace

int classify_subset(int ub, int cp, double sigma1, double sigma2) {
  const double sigma = static_cast<double>(ub - cp) / cp;
  if (sigma < sigma1) return 1;
  if (sigma <= sigma2) return 2;
  return 3;
}

SubsetMix subset_mix(int subset) {
  switch (subset) {
    case 1:
      return {20, 200};
    case 2:
      return {10, 1000};
    default:
      return {5, 5000};
  }
}

int auto_population_capacity(const ProjectInstance& inst, int lo, int hi) {
  const double nc = static_cast<double>(inst.arcs().size()) / inst.size();
  const int capacity =
      60 + static_cast<int>(std::lround((nc - 1.5) / 0.3 * 10.0));
  return std::clamp(capacity, lo, hi);
}

AdaptOutcome adapt_parameters(const AdaptState& state,
                              const AdaptSignals& signals,
                              const AdaptLimits& limits) {
  AdaptOutcome out{state, false, {}};
  AdaptState& s = out.state;
  if (signals.record_improved) s.p_changes = 0;

  if (signals.b_attempts > 0) {
    const bool productive = 2 * signals.b_nonempty >= signals.b_attempts;
    const int next = productive
                         ? std::min(s.block_size + 1, limits.max_block_size)
                         : std::max(s.block_size - 1, 1);
    if (next != s.block_size) {
      out.log.push_back("P " + std::to_string(s.block_size) + " -> " +
                        std::to_string(next));
      s.block_size = next;
      ++s.p_changes;
    }
  }
  if (s.p_changes >= limits.p_reset_changes) {
    out.log.push_back("P reset " + std::to_string(s.block_size) +
                      " -> 1, weights redrawn");
    s.block_size = 1;
    s.p_changes = 0;
    out.redraw_weights = true;
  }

  if (signals.offspring > 0) {
    double r = s.dense_threshold;
    if (signals.mean_gene_count > 8.0) {
      r = step(r, -0.05, 0.05, 1.5);
    } else if (signals.mean_gene_count < 2.0) {
      r = step(r, 0.05, 0.05, 1.5);
    }
    if (r != s.dense_threshold) {
      out.log.push_back("R " + fmt(s.dense_threshold) + " -> " + fmt(r));
      s.dense_threshold = r;
    }
    const double dup = static_cast<double>(signals.duplicate_offspring) /
                       signals.offspring;
    const double q =
        step(s.parent_probability, dup > 0.3 ? -0.05 : 0.05, 0.1, 0.5);
    if (q != s.parent_probability) {
      out.log.push_back("parent probability " + fmt(s.parent_probability) +
                        " -> " + fmt(q));
      s.parent_probability = q;
    }
  }

  if (signals.replacements_requested > 0) {
    int cap = s.population_capacity;
    if (signals.uniqueness_failures > signals.replacements_requested) {
      cap -= 5;
    } else if (signals.uniqueness_failures == 0) {
      cap += 5;
    }
    cap = std::clamp(cap, limits.min_population, limits.max_population);
    if (cap != s.population_capacity) {
      out.log.push_back("population " + std::to_string(s.population_capacity) +
                        " -> " + std::to_string(cap));
      s.population_capacity = cap;
    }
  }
  return out;
}

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kBudget:
      return "budget";
    case StopReason::kTimeLimit:
      return "time-limit";
    case StopReason::kLowerBound:
      return "lower-bound";
    case StopReason::kNoSearch:
      return "no-search";
  }
  return "unknown";
}

SolveResult solve(const ProjectInstance& inst, const SolverConfig& config) {
  Controller controller(inst, config);
  return controller.run();
}

}  // namespace gans
