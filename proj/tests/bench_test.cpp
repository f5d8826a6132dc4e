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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gans/bench.hpp"
#include "gans/errors.hpp"
#include "gans/rng.hpp"
#include "support/generators.hpp"

namespace gans {
namespace {

namespace fs = std::filesystem;

BenchRow row(std::string name, int makespan, int cp) {
  BenchRow r;
  r.name = std::move(name);
  r.makespan = makespan;
  r.cp_bound = cp;
  r.deviation = percent_deviation(makespan, cp);
  return r;
}

std::vector<NamedInstance> random_set(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NamedInstance> out;
  for (int i = 0; i < count; ++i) {
    testing::GenParams g;
    g.activities = rng.uniform_int(5, 20);
    g.resources = rng.uniform_int(1, 4);
    out.push_back({"inst_" + std::to_string(i), testing::random_instance(rng, g)});
  }
  return out;
}

TEST(Deviation, Examples) {
  EXPECT_DOUBLE_EQ(percent_deviation(11, 10), 10.0);
  EXPECT_DOUBLE_EQ(percent_deviation(22, 20), 10.0);
  EXPECT_DOUBLE_EQ(percent_deviation(20, 20), 0.0);
  BenchReport report{{row("a", 11, 10), row("b", 22, 20)}};
  EXPECT_DOUBLE_EQ(report.apd(), 10.0);
  report.rows.push_back(row("c", 15, 10));
  EXPECT_NEAR(report.apd(), 70.0 / 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(BenchReport{}.apd(), 0.0);
}

TEST(FormatFixed2, TiesToEven) {
  EXPECT_EQ(format_fixed2(0.125), "0.12");
  EXPECT_EQ(format_fixed2(0.375), "0.38");
  EXPECT_EQ(format_fixed2(10.8), "10.80");
  EXPECT_EQ(format_fixed2(2.5), "2.50");
  EXPECT_EQ(format_fixed2(-0.125), "-0.12");
  EXPECT_EQ(format_fixed2(-1.5), "-1.50");
  EXPECT_EQ(format_fixed2(0.0), "0.00");
  EXPECT_EQ(format_fixed2(31.6049), "31.60");
}

TEST(Makespans, OneLinePerInstance) {
  BenchReport report{{row("j6010_1", 77, 70), row("j6010_2", 80, 80)}};
  EXPECT_EQ(format_makespans(report), "j6010_1 77\nj6010_2 80\n");
  EXPECT_EQ(format_makespans(BenchReport{}), "");
}

TEST(Makespans, WriteFile) {
  const auto path = fs::temp_directory_path() / "gans_bench_test_empty.txt";
  write_makespans(BenchReport{}, path);
  EXPECT_EQ(fs::file_size(path), 0u);
  write_makespans(BenchReport{{row("x", 3, 3)}}, path);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x 3");
  fs::remove(path);
  EXPECT_THROW(write_makespans(BenchReport{}, "/nonexistent/dir/out.txt"),
               InputError);
}

TEST(Table, SummaryLine) {
  BenchReport report{{row("a", 11, 10), row("b", 22, 20)}};
  const auto table = format_table(report);
  EXPECT_NE(table.find("instances 2  APD 10.00\n"), std::string::npos);
  EXPECT_EQ(table.find("INFEASIBLE"), std::string::npos);
  report.rows[0].feasible = false;
  EXPECT_NE(format_table(report).find("INFEASIBLE"), std::string::npos);
}

TEST(Csv, HeaderAndRows) {
  BenchReport report{{row("a", 11, 10)}};
  report.rows[0].schedules = 500;
  EXPECT_EQ(format_csv(report),
            "instance,makespan,cp_bound,deviation,schedules,seconds,feasible\n"
            "a,11,10,10.00,500,0.00,1\n");
}

TEST(Bounds, ReadFormats) {
  std::istringstream in(
      "instance,best\n"
      "# comment\n"
      "j301_1,43\n"
      "j301_2 47\n"
      "\n"
      "j301_3,52,extra\n");
  const auto b = read_bounds(in);
  EXPECT_EQ(b, (std::map<std::string, int>{
                   {"j301_1", 43}, {"j301_2", 47}, {"j301_3", 52}}));
}

TEST(Bounds, RejectsBadValues) {
  std::istringstream bad("a,1\nb,x\n");
  EXPECT_THROW(read_bounds(bad), InputError);
  std::istringstream lone("a\n");
  EXPECT_THROW(read_bounds(lone), InputError);
  EXPECT_THROW(load_bounds("/nonexistent/bounds.csv"), InputError);
}

TEST(Bounds, CompareReportsImprovementsAndUnknowns) {
  BenchReport report{{row("a", 40, 30), row("b", 50, 30), row("c", 60, 30)}};
  const std::map<std::string, int> bounds{{"a", 41}, {"b", 50}, {"c", 55},
                                          {"zz", 10}};
  std::vector<std::string> warnings;
  const auto imp = compare_bounds(report, bounds, &warnings);
  ASSERT_EQ(imp.size(), 1u);
  EXPECT_EQ(imp[0].name, "a");
  EXPECT_EQ(imp[0].makespan, 40);
  EXPECT_EQ(imp[0].best_known, 41);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("zz"), std::string::npos);
  EXPECT_TRUE(compare_bounds(report, {}, nullptr).empty());
}

TEST(Bounds, ReferenceStats) {
  BenchReport report{{row("a", 40, 30), row("b", 55, 30), row("c", 60, 30)}};
  const auto s = reference_stats(report, {{"a", 40}, {"b", 50}, {"q", 1}});
  EXPECT_EQ(s.compared, 2);
  EXPECT_EQ(s.matched, 1);
  EXPECT_DOUBLE_EQ(s.deviation, 5.0);
}

TEST(RunBenchmark, RowsSortedAndFeasible) {
  auto set = random_set(5, 1);
  std::swap(set[0], set[4]);
  SolverConfig c;
  c.lambda = 300;
  int seen = 0;
  const auto report =
      run_benchmark(set, c, 1, [&](const BenchRow&) { ++seen; });
  EXPECT_EQ(seen, 5);
  ASSERT_EQ(report.rows.size(), 5u);
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    EXPECT_EQ(report.rows[i].name, "inst_" + std::to_string(i));
    EXPECT_TRUE(report.rows[i].feasible);
    EXPECT_GE(report.rows[i].makespan, report.rows[i].cp_bound);
    EXPECT_DOUBLE_EQ(report.rows[i].deviation,
                     percent_deviation(report.rows[i].makespan,
                                       report.rows[i].cp_bound));
  }
}

TEST(RunBenchmark, ThreadCountDoesNotChangeResults) {
  const auto set = random_set(6, 2);
  SolverConfig c;
  c.lambda = 500;
  c.seed = 9;
  const auto one = run_benchmark(set, c, 1);
  const auto two = run_benchmark(set, c, 2);
  EXPECT_EQ(format_makespans(one), format_makespans(two));
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    EXPECT_EQ(one.rows[i].schedules, two.rows[i].schedules);
  }
}

TEST(RunBenchmark, SeedChangesPerInstanceStream) {
  // Same instance under two names gets independent seeds.
  const auto base = random_set(1, 3)[0].instance;
  std::vector<NamedInstance> set{{"x", base}, {"y", base}};
  SolverConfig c;
  c.lambda = 200;
  const auto report = run_benchmark(set, c, 1);
  EXPECT_NE(derive_seed(c.seed, "x"), derive_seed(c.seed, "y"));
  EXPECT_EQ(report.rows.size(), 2u);
}

TEST(RunBenchmark, EmptySetAndBadConfig) {
  SolverConfig c;
  EXPECT_TRUE(run_benchmark({}, c, 4).rows.empty());
  c.block_size = 0;
  EXPECT_THROW(run_benchmark(random_set(1, 4), c, 1), ConfigError);
}

}  // namespace
}  // namespace gans
