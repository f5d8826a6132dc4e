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

#include "gans/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "gans/errors.hpp"
#include "gans/rng.hpp"
#include "gans/solver.hpp"

namespace gans {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (s.empty()) return false;
  std::size_t used = 0;
  try {
    out = std::stoi(std::string(s), &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == s.size();
}

BenchRow solve_row(const NamedInstance& item, const SolverConfig& base) {
  SolverConfig config = base;
  config.seed = derive_seed(base.seed, item.name);
  const auto t0 = std::chrono::steady_clock::now();
  const SolveResult result = solve(item.instance, config);
  const auto t1 = std::chrono::steady_clock::now();
  BenchRow row;
  row.name = item.name;
  row.makespan = result.best.makespan();
  row.cp_bound = result.stats.critical_path;
  row.deviation = percent_deviation(row.makespan, row.cp_bound);
  row.schedules = result.stats.schedules_generated;
  row.seconds = std::chrono::duration<double>(t1 - t0).count();
  row.feasible = is_feasible(item.instance, result.best.schedule);
  return row;
}

}  // namespace

double BenchReport::apd() const {
  if (rows.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& r : rows) sum += r.deviation;
  return sum / static_cast<double>(rows.size());
}

double percent_deviation(int makespan, int bound) {
  if (bound <= 0) return 0.0;
  return static_cast<double>(makespan - bound) / bound * 100.0;
}

std::string format_fixed2(double value) {
  // nearbyint follows the default rounding mode, ties to even.
  const auto cents = static_cast<long long>(std::nearbyint(value * 100.0));
  const long long mag = cents < 0 ? -cents : cents;
  std::ostringstream out;
  if (cents < 0) out << '-';
  out << mag / 100 << '.' << std::setw(2) << std::setfill('0') << mag % 100;
  return out.str();
}

BenchReport run_benchmark(const std::vector<NamedInstance>& instances,
                          const SolverConfig& config, int threads,
                          const BenchProgress& progress) {
  check_config(config);
  BenchReport report;
  report.rows.resize(instances.size());
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      try {
        report.rows[i] = solve_row(instances[i], config);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = instances.size();
        return;
      }
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(report.rows[i]);
      }
    }
  };
  const int count = std::clamp<int>(threads, 1,
                                    std::max<int>(1, instances.size()));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::sort(report.rows.begin(), report.rows.end(),
            [](const BenchRow& a, const BenchRow& b) { return a.name < b.name; });
  return report;
}

std::string format_makespans(const BenchReport& report) {
  std::string out;
  for (const auto& r : report.rows) {
    out += r.name;
    out += ' ';
    out += std::to_string(r.makespan);
    out += '\n';
  }
  return out;
}

void write_makespans(const BenchReport& report,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << format_makespans(report);
  if (!out) throw InputError("failed writing '" + path.string() + "'");
}

std::string format_table(const BenchReport& report) {
  std::size_t width = 8;
  for (const auto& r : report.rows) width = std::max(width, r.name.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "instance"
      << std::right << std::setw(10) << "makespan" << std::setw(8) << "cp"
      << std::setw(10) << "dev%" << std::setw(12) << "schedules"
      << std::setw(10) << "seconds" << '\n';
  for (const auto& r : report.rows) {
    out << std::left << std::setw(static_cast<int>(width)) << r.name
        << std::right << std::setw(10) << r.makespan << std::setw(8)
        << r.cp_bound << std::setw(10) << format_fixed2(r.deviation)
        << std::setw(12) << r.schedules << std::setw(10)
        << format_fixed2(r.seconds) << (r.feasible ? "" : "  INFEASIBLE")
        << '\n';
  }
  out << "instances " << report.rows.size() << "  APD "
      << format_fixed2(report.apd()) << '\n';
  return out.str();
}

std::string format_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "instance,makespan,cp_bound,deviation,schedules,seconds,feasible\n";
  for (const auto& r : report.rows) {
    out << r.name << ',' << r.makespan << ',' << r.cp_bound << ','
        << format_fixed2(r.deviation) << ',' << r.schedules << ','
        << format_fixed2(r.seconds) << ',' << (r.feasible ? 1 : 0) << '\n';
  }
  return out.str();
}

std::map<std::string, int> read_bounds(std::istream& in) {
  std::map<std::string, int> bounds;
  std::string raw;
  int line_no = 0;
  bool first = true;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto cut = line.find(',');
    if (cut == std::string_view::npos) cut = line.find_first_of(" \t");
    if (cut == std::string_view::npos) {
      throw InputError("bounds line " + std::to_string(line_no) +
                       ": expected 'name,value'");
    }
    const std::string name(trim(line.substr(0, cut)));
    std::string_view rest = trim(line.substr(cut + 1));
    // Extra columns after the value are ignored.
    const auto end = rest.find_first_of(", \t");
    if (end != std::string_view::npos) rest = rest.substr(0, end);
    int value = 0;
    if (!parse_int(rest, value)) {
      if (first) {
        first = false;
        continue;
      }
      throw InputError("bounds line " + std::to_string(line_no) +
                       ": value '" + std::string(rest) + "' is not an integer");
    }
    first = false;
    bounds[name] = value;
  }
  return bounds;
}

std::map<std::string, int> load_bounds(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open bounds file '" + path.string() + "'");
  try {
    return read_bounds(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::vector<Improvement> compare_bounds(
    const BenchReport& report, const std::map<std::string, int>& bounds,
    std::vector<std::string>* warnings) {
  std::map<std::string, const BenchRow*> by_name;
  for (const auto& r : report.rows) by_name[r.name] = &r;
  std::vector<Improvement> out;
  for (const auto& [name, best] : bounds) {
    const auto it = by_name.find(name);
    if (it == by_name.end()) {
      if (warnings) warnings->push_back("unknown instance '" + name + "'");
      continue;
    }
    if (it->second->makespan < best) {
      out.push_back({name, it->second->makespan, best});
    }
  }
  return out;
}

ReferenceStats reference_stats(const BenchReport& report,
                               const std::map<std::string, int>& reference) {
  ReferenceStats stats;
  double sum = 0.0;
  for (const auto& r : report.rows) {
    const auto it = reference.find(r.name);
    if (it == reference.end()) continue;
    ++stats.compared;
    if (r.makespan <= it->second) ++stats.matched;
    sum += percent_deviation(r.makespan, it->second);
  }
  if (stats.compared > 0) stats.deviation = sum / stats.compared;
  return stats;
}

}  // namespace gans
