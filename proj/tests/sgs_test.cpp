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

#include "gans/sgs.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace gans {
namespace {

using testing::tiny1;
using testing::tiny2;

ProjectInstance random_small(Rng& rng, int max_activities = 30) {
  testing::GenParams g;
  g.activities = rng.uniform_int(1, max_activities);
  g.resources = rng.uniform_int(1, 4);
  g.allow_zero_duration = rng.coin();
  return testing::random_instance(rng, g);
}

TEST(ResourceProfile, ReserveReleaseAndGrowth) {
  const auto inst = tiny1();
  ResourceProfile p(inst, 2);
  const std::vector<int> d{3};
  EXPECT_TRUE(p.fits(0, 5, d));
  p.reserve(1, 4, d);  // grows past the initial length
  EXPECT_GE(p.length(), 5);
  EXPECT_EQ(p.remaining(0, 0), 4);
  EXPECT_EQ(p.remaining(4, 0), 1);
  EXPECT_EQ(p.remaining(99, 0), 4);
  EXPECT_FALSE(p.fits(0, 2, std::vector<int>{2}));
  EXPECT_EQ(p.earliest_fit(0, 2, std::vector<int>{2}), 5);
  EXPECT_EQ(p.earliest_fit(0, 1, std::vector<int>{1}), 0);
  p.release(1, 4, d);
  EXPECT_EQ(p.remaining(3, 0), 4);
}

TEST(SerialSgs, Examples) {
  const auto t1 = tiny1();
  auto s = serial_sgs(t1, ActivityList{{0, 1, 2, 3}});
  EXPECT_EQ(s.starts, (std::vector<int>{0, 0, 2, 5}));
  EXPECT_EQ(s.makespan, 5);
  s = serial_sgs(t1, ActivityList{{0, 2, 1, 3}});
  EXPECT_EQ(s.starts, (std::vector<int>{0, 3, 0, 5}));
  EXPECT_EQ(s.makespan, 5);
  EXPECT_EQ(serial_sgs(tiny2(), ActivityList{{0, 1, 2, 3, 4}}).makespan, 9);
}

TEST(SerialSgs, MatchesOracleDecoder) {
  Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = random_small(rng);
    const auto list = random_feasible_list(inst, rng);
    const auto s = serial_sgs(inst, list);
    EXPECT_EQ(s.starts, testing::oracle_serial(inst, list.order));
    EXPECT_EQ(s.makespan, s.starts[inst.sink()]);
    EXPECT_TRUE(testing::oracle_feasible(inst, s.starts));
  }
}

TEST(ParallelSgs, Examples) {
  const auto t1 = tiny1();
  EXPECT_EQ(parallel_sgs(t1, ActivityList{{0, 1, 2, 3}}).starts,
            (std::vector<int>{0, 0, 2, 5}));
  EXPECT_EQ(parallel_sgs(t1, ActivityList{{0, 2, 1, 3}}).starts,
            (std::vector<int>{0, 3, 0, 5}));
  EXPECT_EQ(parallel_sgs(tiny2(), ActivityList{{0, 1, 2, 3, 4}}).makespan, 9);
}

// Parallel schedules are non-delay: no activity could start earlier with
// resources and predecessors as scheduled.
TEST(ParallelSgs, FeasibleAndNonDelay) {
  Rng rng(102);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = random_small(rng);
    const auto s = parallel_sgs(inst, random_feasible_list(inst, rng));
    ASSERT_TRUE(testing::oracle_feasible(inst, s.starts));
    for (int j = 1; j <= inst.real_count(); ++j) {
      if (inst.duration(j) == 0) continue;
      int est = 0;
      for (const int p : inst.predecessors(j)) {
        est = std::max(est, s.starts[p] + inst.duration(p));
      }
      if (s.starts[j] == est) continue;
      // Starting one unit earlier must violate a resource in that unit.
      auto moved = s.starts;
      moved[j] = s.starts[j] - 1;
      bool unit_conflict = false;
      const int t = moved[j];
      for (int k = 0; k < inst.resource_count(); ++k) {
        int used = 0;
        for (int i = 0; i < inst.size(); ++i) {
          if (moved[i] <= t && t < moved[i] + inst.duration(i)) {
            used += inst.demand(i, k);
          }
        }
        if (used > inst.capacity(k)) unit_conflict = true;
      }
      EXPECT_TRUE(unit_conflict) << "activity " << j << " trial " << trial;
    }
  }
}

TEST(Fbi, OptimalScheduleUnchanged) {
  const auto t1 = tiny1();
  const auto r = fbi(t1, make_schedule(t1, {0, 0, 2, 5}));
  EXPECT_EQ(r.schedule.makespan, 5);
  EXPECT_FALSE(r.improved);
  EXPECT_GE(r.schedules_generated, 2);
}

TEST(Fbi, ClosesChainGaps) {
  const auto t2 = tiny2();
  const auto r = fbi(t2, make_schedule(t2, {0, 0, 4, 7, 11}));
  EXPECT_TRUE(r.improved);
  EXPECT_EQ(r.schedule.starts, (std::vector<int>{0, 0, 2, 5, 9}));
  EXPECT_EQ(r.schedule.makespan, 9);
  EXPECT_EQ(serial_sgs(t2, r.list), r.schedule);
}

TEST(Fbi, MonotoneIdempotentAndConsistent) {
  Rng rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = random_small(rng);
    const auto in = testing::random_gap_schedule(inst, rng);
    const auto r = fbi(inst, in);
    ASSERT_TRUE(testing::oracle_feasible(inst, r.schedule.starts));
    EXPECT_LE(r.schedule.makespan, in.makespan);
    EXPECT_EQ(r.improved, r.schedule.makespan < in.makespan);
    if (r.improved) {
      EXPECT_TRUE(is_precedence_feasible(inst, r.list));
      EXPECT_EQ(serial_sgs(inst, r.list), r.schedule);
    } else {
      EXPECT_EQ(r.schedule, in);
    }
    const auto again = fbi(inst, r.schedule);
    EXPECT_FALSE(again.improved);
    EXPECT_EQ(again.schedule, r.schedule);
  }
}

TEST(LeftShift, ClosesGapsAndNeverDelays) {
  Rng rng(104);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = random_small(rng);
    const auto in = testing::random_gap_schedule(inst, rng);
    const auto out = left_shift(inst, in);
    ASSERT_TRUE(testing::oracle_feasible(inst, out.starts));
    for (int j = 0; j < inst.size(); ++j) EXPECT_LE(out.starts[j], in.starts[j]);
    EXPECT_EQ(left_shift(inst, out), out);
    // No single activity can move earlier on its own.
    for (int j = 1; j <= inst.real_count(); ++j) {
      if (out.starts[j] == 0) continue;
      auto moved = out.starts;
      --moved[j];
      EXPECT_FALSE(testing::oracle_feasible(inst, moved));
    }
  }
}

TEST(LeftShift, ChainExample) {
  const auto t2 = tiny2();
  EXPECT_EQ(left_shift(t2, make_schedule(t2, {0, 0, 4, 7, 11})).starts,
            (std::vector<int>{0, 0, 2, 5, 9}));
}

TEST(ScheduleToList, Examples) {
  const auto t1 = tiny1();
  EXPECT_EQ(schedule_to_list(t1, make_schedule(t1, {0, 0, 2, 5})).order,
            (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(schedule_to_list(t1, make_schedule(t1, {0, 3, 0, 5})).order,
            (std::vector<int>{0, 2, 1, 3}));
  const ProjectInstance flat({{0, {0}}, {0, {0}}, {0, {0}}, {0, {0}}},
                             {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {1});
  EXPECT_EQ(schedule_to_list(flat, make_schedule(flat, {0, 0, 0, 0})).order,
            (std::vector<int>{0, 1, 2, 3}));
}

TEST(ScheduleToList, FeasibleWithZeroDurations) {
  // 2 has duration 0 and precedes 1; both start at time 0.
  const ProjectInstance inst({{0, {0}}, {1, {1}}, {0, {0}}, {0, {0}}},
                             {{0, 2}, {2, 1}, {1, 3}}, {1});
  const auto list = schedule_to_list(inst, make_schedule(inst, {0, 0, 0, 1}));
  EXPECT_EQ(list.order, (std::vector<int>{0, 2, 1, 3}));
}

TEST(ScheduleToList, SerialDecodingNeverLater) {
  Rng rng(105);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = random_small(rng);
    const auto s = testing::random_gap_schedule(inst, rng);
    const auto list = schedule_to_list(inst, s);
    ASSERT_TRUE(is_precedence_feasible(inst, list));
    const auto decoded = serial_sgs(inst, list);
    for (int j = 0; j < inst.size(); ++j) EXPECT_LE(decoded.starts[j], s.starts[j]);
  }
}

TEST(RepairPrecedence, KeepsFeasibleOrder) {
  const auto t1 = tiny1();
  EXPECT_EQ(repair_precedence(t1, {0, 2, 1, 3}).order,
            (std::vector<int>{0, 2, 1, 3}));
  EXPECT_EQ(repair_precedence(tiny2(), {0, 3, 1, 2, 4}).order,
            (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(repair_precedence(t1, {3, 2, 1, 0}).order,
            (std::vector<int>{0, 2, 1, 3}));
}

TEST(RepairPrecedence, AlwaysFeasiblePermutation) {
  Rng rng(106);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = random_small(rng);
    std::vector<int> order(inst.size());
    for (int j = 0; j < inst.size(); ++j) order[j] = j;
    rng.shuffle(std::span<int>(order));
    const auto fixed = repair_precedence(inst, order);
    EXPECT_TRUE(is_precedence_feasible(inst, fixed));
  }
}

}  // namespace
}  // namespace gans
