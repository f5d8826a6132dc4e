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

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "gans/config.hpp"
#include "gans/errors.hpp"
#include "gans/sgs.hpp"
#include "gans/solver.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace gans {
namespace {

using testing::tiny1;
using testing::tiny2;

ProjectInstance random_mid(Rng& rng, int activities) {
  testing::GenParams g;
  g.activities = activities;
  g.resources = rng.uniform_int(1, 4);
  return testing::random_instance(rng, g);
}

TEST(ClassifySubset, Examples) {
  EXPECT_EQ(classify_subset(11, 10, 0.2, 0.6), 1);
  EXPECT_EQ(classify_subset(13, 10, 0.2, 0.6), 2);
  EXPECT_EQ(classify_subset(17, 10, 0.2, 0.6), 3);
  EXPECT_EQ(classify_subset(10, 10, 0.2, 0.6), 1);
  EXPECT_EQ(classify_subset(12, 10, 0.2, 0.6), 2);  // sigma == sigma1
  EXPECT_EQ(classify_subset(16, 10, 0.2, 0.6), 2);  // sigma == sigma2
}

TEST(ClassifySubset, ScaleInvariant) {
  for (int f = 1; f <= 50; ++f) {
    EXPECT_EQ(classify_subset(11 * f, 10 * f, 0.2, 0.6), 1);
    EXPECT_EQ(classify_subset(14 * f, 10 * f, 0.2, 0.6), 2);
    EXPECT_EQ(classify_subset(19 * f, 10 * f, 0.2, 0.6), 3);
  }
}

TEST(SubsetMix, MoreSearchForHarderSubsets) {
  EXPECT_EQ(subset_mix(1).stagnation_trigger, 20);
  EXPECT_EQ(subset_mix(1).ns_steps_per_burst, 200);
  EXPECT_EQ(subset_mix(2).stagnation_trigger, 10);
  EXPECT_EQ(subset_mix(2).ns_steps_per_burst, 1000);
  EXPECT_EQ(subset_mix(3).stagnation_trigger, 5);
  EXPECT_EQ(subset_mix(3).ns_steps_per_burst, 5000);
}

TEST(AutoPopulation, NetworkComplexity) {
  // 4 arcs over 4 nodes: 60 + round((1 - 1.5) / 0.3 * 10) = 43.
  EXPECT_EQ(auto_population_capacity(tiny1(), 40, 150), 43);
  EXPECT_EQ(auto_population_capacity(tiny1(), 50, 150), 50);
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    testing::GenParams g;
    g.activities = rng.uniform_int(5, 60);
    g.arc_probability = rng.uniform01();
    const auto inst = testing::random_instance(rng, g);
    const double nc = static_cast<double>(inst.arcs().size()) / inst.size();
    const long expect = 60 + std::lround((nc - 1.5) / 0.3 * 10.0);
    EXPECT_EQ(auto_population_capacity(inst, 1, 1000), expect);
    const int clamped = auto_population_capacity(inst, 40, 150);
    EXPECT_GE(clamped, 40);
    EXPECT_LE(clamped, 150);
  }
}

AdaptLimits limits() { return AdaptLimits{10, 40, 150, 5}; }

TEST(Adapt, BlockSizeFollowsNbProductivity) {
  AdaptState s;
  AdaptSignals sig;
  sig.b_attempts = 4;
  sig.b_nonempty = 2;
  auto out = adapt_parameters(s, sig, limits());
  EXPECT_EQ(out.state.block_size, 6);
  EXPECT_EQ(out.state.p_changes, 1);
  EXPECT_FALSE(out.redraw_weights);
  sig.b_nonempty = 1;
  out = adapt_parameters(s, sig, limits());
  EXPECT_EQ(out.state.block_size, 4);

  AdaptState at_floor;
  at_floor.block_size = 1;
  out = adapt_parameters(at_floor, sig, limits());
  EXPECT_EQ(out.state.block_size, 1);
  EXPECT_EQ(out.state.p_changes, 0);  // no change, nothing counted
  EXPECT_TRUE(out.log.empty());

  AdaptSignals none;
  out = adapt_parameters(s, none, limits());
  EXPECT_EQ(out.state.block_size, 5);
}

TEST(Adapt, BlockSizeCappedByLimit) {
  AdaptState s;
  s.block_size = 10;
  AdaptSignals sig;
  sig.b_attempts = 2;
  sig.b_nonempty = 2;
  EXPECT_EQ(adapt_parameters(s, sig, limits()).state.block_size, 10);
}

TEST(Adapt, ResetAfterChangesWithoutRecord) {
  AdaptState s;
  s.p_changes = 4;
  AdaptSignals sig;
  sig.b_attempts = 2;
  sig.b_nonempty = 2;
  auto out = adapt_parameters(s, sig, limits());
  EXPECT_EQ(out.state.block_size, 1);
  EXPECT_EQ(out.state.p_changes, 0);
  EXPECT_TRUE(out.redraw_weights);

  sig.record_improved = true;
  out = adapt_parameters(s, sig, limits());
  EXPECT_EQ(out.state.block_size, 6);
  EXPECT_EQ(out.state.p_changes, 1);
  EXPECT_FALSE(out.redraw_weights);
}

TEST(Adapt, DenseThresholdTracksGeneCount) {
  AdaptState s;
  AdaptSignals sig;
  sig.offspring = 10;
  sig.mean_gene_count = 9.0;
  EXPECT_NEAR(adapt_parameters(s, sig, limits()).state.dense_threshold, 0.70,
              1e-12);
  sig.mean_gene_count = 1.0;
  EXPECT_NEAR(adapt_parameters(s, sig, limits()).state.dense_threshold, 0.80,
              1e-12);
  sig.mean_gene_count = 5.0;
  EXPECT_EQ(adapt_parameters(s, sig, limits()).state.dense_threshold, 0.75);

  AdaptState low;
  low.dense_threshold = 0.05;
  sig.mean_gene_count = 20.0;
  EXPECT_NEAR(adapt_parameters(low, sig, limits()).state.dense_threshold, 0.05,
              1e-12);
}

TEST(Adapt, ParentProbabilityTracksDuplicates) {
  AdaptState s;
  AdaptSignals sig;
  sig.offspring = 10;
  sig.mean_gene_count = 5.0;
  sig.duplicate_offspring = 4;
  EXPECT_NEAR(adapt_parameters(s, sig, limits()).state.parent_probability, 0.20,
              1e-12);
  sig.duplicate_offspring = 3;
  EXPECT_NEAR(adapt_parameters(s, sig, limits()).state.parent_probability, 0.30,
              1e-12);
  AdaptState top;
  top.parent_probability = 0.5;
  EXPECT_NEAR(adapt_parameters(top, sig, limits()).state.parent_probability,
              0.5, 1e-12);
  sig.offspring = 0;
  EXPECT_EQ(adapt_parameters(s, sig, limits()).state.parent_probability, 0.25);
}

TEST(Adapt, PopulationTracksUniquenessFailures) {
  AdaptState s;
  AdaptSignals sig;
  sig.replacements_requested = 10;
  sig.uniqueness_failures = 11;
  EXPECT_EQ(adapt_parameters(s, sig, limits()).state.population_capacity, 55);
  sig.uniqueness_failures = 0;
  EXPECT_EQ(adapt_parameters(s, sig, limits()).state.population_capacity, 65);
  sig.uniqueness_failures = 5;
  EXPECT_EQ(adapt_parameters(s, sig, limits()).state.population_capacity, 60);
  AdaptState small;
  small.population_capacity = 40;
  sig.uniqueness_failures = 50;
  EXPECT_EQ(adapt_parameters(small, sig, limits()).state.population_capacity,
            40);
}

SolverConfig with_lambda(std::int64_t lambda, std::uint64_t seed = 1) {
  SolverConfig c;
  c.lambda = lambda;
  c.seed = seed;
  return c;
}

TEST(Solve, TinyOne) {
  const auto r = solve(tiny1(), with_lambda(100));
  EXPECT_EQ(r.best.makespan(), 5);
  EXPECT_EQ(r.stats.critical_path, 3);
  EXPECT_EQ(r.stats.relaxed_makespan, 4);
  EXPECT_EQ(r.stats.lower_bound, 4);
  EXPECT_EQ(r.stats.stop, StopReason::kBudget);
  EXPECT_GE(r.stats.schedules_generated, 100);
}

TEST(Solve, ChainStopsAtLowerBound) {
  const auto r = solve(tiny2(), with_lambda(10));
  EXPECT_EQ(r.best.makespan(), 9);
  EXPECT_EQ(r.best.schedule.starts, (std::vector<int>{0, 0, 2, 5, 9}));
  EXPECT_EQ(r.stats.lower_bound, 9);
  EXPECT_EQ(r.stats.stop, StopReason::kLowerBound);
}

TEST(Solve, MatchesOptimumOnTinyInstances) {
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    testing::GenParams g;
    g.activities = rng.uniform_int(2, 7);
    g.resources = rng.uniform_int(1, 2);
    const auto inst = testing::random_instance(rng, g);
    const auto r = solve(inst, with_lambda(2000, trial + 1));
    EXPECT_EQ(r.best.makespan(), testing::oracle_optimum(inst)) << trial;
  }
}

TEST(Solve, ResultConsistent) {
  Rng rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    const auto inst = random_mid(rng, rng.uniform_int(10, 40));
    const auto r = solve(inst, with_lambda(3000, trial));
    EXPECT_TRUE(testing::oracle_feasible(inst, r.best.schedule.starts));
    EXPECT_TRUE(is_precedence_feasible(inst, r.best.list));
    EXPECT_EQ(serial_sgs(inst, r.best.list), r.best.schedule);
    EXPECT_GE(r.best.makespan(), r.stats.lower_bound);
    EXPECT_LE(r.best.makespan(), r.stats.initial_makespan);
    EXPECT_EQ(r.stats.lower_bound,
              std::max(r.stats.critical_path, r.stats.relaxed_makespan));
    EXPECT_GE(r.stats.subset, 1);
    EXPECT_LE(r.stats.subset, 3);
    ASSERT_FALSE(r.stats.trace.empty());
    EXPECT_EQ(r.stats.trace.back().makespan, r.best.makespan());
    for (std::size_t i = 1; i < r.stats.trace.size(); ++i) {
      EXPECT_LT(r.stats.trace[i].makespan, r.stats.trace[i - 1].makespan);
      EXPECT_GE(r.stats.trace[i].schedules, r.stats.trace[i - 1].schedules);
    }
    if (r.stats.stop == StopReason::kBudget) {
      EXPECT_GE(r.stats.schedules_generated, 3000);
    }
  }
}

TEST(Solve, DeterministicForSeed) {
  Rng rng(4);
  const auto inst = random_mid(rng, 30);
  const auto a = solve(inst, with_lambda(4000, 7));
  const auto b = solve(inst, with_lambda(4000, 7));
  EXPECT_EQ(a.best.list, b.best.list);
  EXPECT_EQ(a.stats.schedules_generated, b.stats.schedules_generated);
  EXPECT_EQ(a.stats.parameter_log, b.stats.parameter_log);
  ASSERT_EQ(a.stats.trace.size(), b.stats.trace.size());
  for (std::size_t i = 0; i < a.stats.trace.size(); ++i) {
    EXPECT_EQ(a.stats.trace[i].makespan, b.stats.trace[i].makespan);
    EXPECT_EQ(a.stats.trace[i].schedules, b.stats.trace[i].schedules);
  }
}

TEST(Solve, Ablations) {
  Rng rng(5);
  const auto inst = random_mid(rng, 30);
  SolverConfig ga_only = with_lambda(3000);
  ga_only.ns_steps_per_burst = 0;
  const auto g = solve(inst, ga_only);
  EXPECT_EQ(g.stats.ns_bursts, 0);
  EXPECT_GT(g.stats.generations, 0);

  SolverConfig ns_only = with_lambda(3000);
  ns_only.enable_crossover = false;
  ns_only.stagnation_trigger = 1;
  const auto n = solve(inst, ns_only);
  EXPECT_GT(n.stats.ns_bursts, 0);

  SolverConfig fixed = with_lambda(3000);
  fixed.adaptive = false;
  EXPECT_TRUE(solve(inst, fixed).stats.parameter_log.empty());

  for (const auto* r : {&g, &n}) {
    EXPECT_TRUE(testing::oracle_feasible(inst, r->best.schedule.starts));
  }
}

TEST(Solve, NoSearchStopsAfterInit) {
  Rng rng(6);
  const auto inst = random_mid(rng, 20);
  SolverConfig c = with_lambda(100000);
  c.enable_crossover = false;
  c.mutation_iterations = 0;
  c.ns_steps_per_burst = 0;
  const auto r = solve(inst, c);
  if (r.stats.stop != StopReason::kLowerBound) {
    EXPECT_EQ(r.stats.stop, StopReason::kNoSearch);
    EXPECT_LT(r.stats.schedules_generated, 100000);
  }
}

TEST(Solve, TimeLimit) {
  Rng rng(7);
  const auto inst = random_mid(rng, 60);
  SolverConfig c;
  c.lambda.reset();
  c.time_limit = 0.3;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = solve(inst, c);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (r.stats.stop != StopReason::kLowerBound) {
    EXPECT_EQ(r.stats.stop, StopReason::kTimeLimit);
    EXPECT_GE(elapsed, 0.3);
  }
  EXPECT_LT(elapsed, 5.0);
}

TEST(Solve, ZeroLambdaStillReturnsSchedule) {
  const auto r = solve(tiny1(), with_lambda(0));
  EXPECT_EQ(r.best.makespan(), 5);
  EXPECT_EQ(r.stats.stop, StopReason::kBudget);
}

TEST(Config, ParseKeys) {
  const auto c = parse_config(
      "# tuned\n"
      "lambda = 5000\n"
      "seed=42   # trailing comment\n"
      "\n"
      "weight_mode = uniform\n"
      "uniqueness = false\n"
      "dense_threshold = 0.9\n");
  EXPECT_EQ(c.lambda, 5000);
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.weight_mode, WeightMode::kUniform);
  EXPECT_FALSE(c.uniqueness);
  EXPECT_DOUBLE_EQ(c.dense_threshold, 0.9);
  EXPECT_EQ(c.block_size, 5);  // untouched keys keep the base value
}

TEST(Config, SpecialValues) {
  auto c = parse_config("lambda = unlimited\ntime_limit = 2.5\n");
  EXPECT_FALSE(c.lambda);
  EXPECT_EQ(c.time_limit, 2.5);
  c = parse_config("time_limit = none\n", c);
  EXPECT_FALSE(c.time_limit);
}

TEST(Config, Errors) {
  EXPECT_THROW(parse_config("colour = red\n"), ConfigError);
  EXPECT_THROW(parse_config("lambda\n"), ConfigError);
  EXPECT_THROW(parse_config("lambda = lots\n"), ConfigError);
  EXPECT_THROW(parse_config("lambda = -1\n"), ConfigError);
  EXPECT_THROW(parse_config("sigma1 = 0.7\n"), ConfigError);
  EXPECT_THROW(parse_config("block_size = 0\n"), ConfigError);
  EXPECT_THROW(parse_config("uniqueness = maybe\n"), ConfigError);
  EXPECT_THROW(parse_config("weight_mode = heavy\n"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/gans.cfg"), ConfigError);
  try {
    parse_config("seed = 1\nnope = 2\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Config, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "gans_solver_test.cfg";
  std::ofstream(path) << "lambda = 123\n";
  EXPECT_EQ(load_config(path.string()).lambda, 123);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace gans
