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

// Dataset benchmarking: per-instance solves, deviation from the critical
// path bound, makespan files and comparisons with best-known values.

#ifndef GANS_BENCH_HPP_
#define GANS_BENCH_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gans/config.hpp"
#include "gans/psplib.hpp"

namespace gans {

struct BenchRow {
  std::string name;
  int makespan = 0;
  int cp_bound = 0;
  double deviation = 0.0;  // (makespan - cp) / cp * 100
  std::int64_t schedules = 0;
  double seconds = 0.0;
  bool feasible = true;
};

struct BenchReport {
  std::vector<BenchRow> rows;  // sorted by name

  // Mean per-instance deviation in percent; 0 for an empty report.
  double apd() const;
};

double percent_deviation(int makespan, int bound);

// Two decimals with ties to even, e.g. 10.125 -> "10.12".
std::string format_fixed2(double value);

using BenchProgress = std::function<void(const BenchRow&)>;

// Solves every instance with the seed derived from (config.seed, name).
// `threads` workers run independent solves; the report does not depend on
// the worker count.
BenchReport run_benchmark(const std::vector<NamedInstance>& instances,
                          const SolverConfig& config, int threads = 1,
                          const BenchProgress& progress = {});

// `<name> <makespan>` per line in report order.
std::string format_makespans(const BenchReport& report);
void write_makespans(const BenchReport& report,
                     const std::filesystem::path& path);

std::string format_table(const BenchReport& report);
std::string format_csv(const BenchReport& report);

// Best-known makespans from `name,value` or `name value` lines. A first line
// whose value is not an integer is taken as a header; `#` lines are skipped.
std::map<std::string, int> read_bounds(std::istream& in);
std::map<std::string, int> load_bounds(const std::filesystem::path& path);

struct Improvement {
  std::string name;
  int makespan = 0;
  int best_known = 0;
};

// Instances where the report beats the best-known value. Names absent from
// the report are reported in `warnings` and skipped.
std::vector<Improvement> compare_bounds(const BenchReport& report,
                                        const std::map<std::string, int>& bounds,
                                        std::vector<std::string>* warnings);

struct ReferenceStats {
  int compared = 0;
  int matched = 0;        // makespan <= reference
  double deviation = 0.0;  // mean (makespan - ref) / ref * 100
};

ReferenceStats reference_stats(const BenchReport& report,
                               const std::map<std::string, int>& reference);

}  // namespace gans

#endif  // GANS_BENCH_HPP_
