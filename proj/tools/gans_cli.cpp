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

// gans: solve, benchmark, rank and validate PSPLIB single-mode instances.
// Exit status 0 on success, 1 on input errors, 2 on internal errors.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "gans/bench.hpp"
#include "gans/config.hpp"
#include "gans/errors.hpp"
#include "gans/psplib.hpp"
#include "gans/ranking.hpp"
#include "gans/solver.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kInputError = 1;
constexpr int kInternalError = 2;

struct BudgetFlags {
  std::string lambda;
  std::optional<double> time_limit;
  std::optional<std::uint64_t> seed;
  std::string config_path;
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& flags) {
  auto* lambda = cmd->add_option("--lambda", flags.lambda,
                                 "schedule budget, or 'unlimited'");
  auto* limit = cmd->add_option("--time-limit", flags.time_limit,
                                "wall-clock limit in seconds per instance");
  lambda->excludes(limit);
  cmd->add_option("--seed", flags.seed, "random seed");
  cmd->add_option("--config", flags.config_path, "key = value config file")
      ->check(CLI::ExistingFile);
}

gans::SolverConfig make_config(const BudgetFlags& flags) {
  gans::SolverConfig config;
  if (!flags.config_path.empty()) config = gans::load_config(flags.config_path);
  if (!flags.lambda.empty()) {
    config = gans::parse_config("lambda = " + flags.lambda, config);
  }
  if (flags.time_limit) {
    config.time_limit = *flags.time_limit;
    config.lambda.reset();
  }
  if (flags.seed) config.seed = *flags.seed;
  gans::check_config(config);
  return config;
}

void print_starts(const gans::Schedule& sched) {
  std::cout << "starts";
  for (const int s : sched.starts) std::cout << ' ' << s;
  std::cout << '\n';
}

int run_solve(const std::string& file, const BudgetFlags& flags) {
  const gans::SolverConfig config = make_config(flags);
  const auto inst = gans::load_sm_file(file);
  const auto result = gans::solve(inst, config);
  if (!gans::is_feasible(inst, result.best.schedule)) {
    std::cerr << "error: solver returned an infeasible schedule\n";
    return kInternalError;
  }
  const auto& s = result.stats;
  std::cout << "instance " << fs::path(file).stem().string() << '\n'
            << "makespan " << result.best.makespan() << '\n'
            << "critical_path " << s.critical_path << '\n'
            << "lower_bound " << s.lower_bound << '\n'
            << "schedules " << s.schedules_generated << '\n'
            << "subset " << s.subset << '\n'
            << "stop " << gans::to_string(s.stop) << '\n';
  print_starts(result.best.schedule);
  return 0;
}

int run_bench(const std::string& dir, const BudgetFlags& flags, int threads,
              const std::string& out, const std::string& csv,
              const std::string& bounds_path) {
  const gans::SolverConfig config = make_config(flags);
  std::map<std::string, int> bounds;
  if (!bounds_path.empty()) bounds = gans::load_bounds(bounds_path);
  const auto dataset = gans::load_dataset(dir);
  const auto report = gans::run_benchmark(
      dataset, config, threads, [](const gans::BenchRow& row) {
        std::cerr << row.name << ' ' << row.makespan << '\n';
      });
  std::cout << gans::format_table(report);
  if (!out.empty()) gans::write_makespans(report, out);
  if (!csv.empty()) {
    std::ofstream f(csv, std::ios::binary);
    if (!f) throw gans::InputError("cannot write '" + csv + "'");
    f << gans::format_csv(report);
  }
  if (!bounds_path.empty()) {
    std::vector<std::string> warnings;
    const auto better = gans::compare_bounds(report, bounds, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    std::cout << "improvements " << better.size() << '\n';
    for (const auto& i : better) {
      std::cout << "  " << i.name << ' ' << i.makespan << " < "
                << i.best_known << '\n';
    }
  }
  for (const auto& row : report.rows) {
    if (!row.feasible) {
      std::cerr << "error: infeasible schedule for " << row.name << '\n';
      return kInternalError;
    }
  }
  return 0;
}

int run_rank(const std::string& file, const std::string& mode_name,
             std::uint64_t seed) {
  const auto mode = gans::weight_mode_from_string(mode_name);
  const auto inst = gans::load_sm_file(file);
  gans::Rng rng(seed);
  const auto r = gans::rank_and_weigh(inst, mode, rng);
  std::cout << "critical_path " << gans::critical_path_lower_bound(inst) << '\n'
            << "relaxed_makespan " << r.relaxation.makespan << '\n'
            << "residues";
  for (const auto v : r.relaxation.residues) std::cout << ' ' << v;
  std::cout << "\nrank";
  for (const int k : r.rank) std::cout << ' ' << k + 1;
  std::cout << "\nweights (" << gans::to_string(r.weights.mode) << ")";
  for (const double w : r.weights.values) std::cout << ' ' << w;
  std::cout << '\n';
  return 0;
}

int run_validate(const std::string& target) {
  std::vector<fs::path> files;
  if (fs::is_directory(target)) {
    for (const auto& e : fs::directory_iterator(target)) {
      if (e.is_regular_file() && e.path().extension() == ".sm") {
        files.push_back(e.path());
      }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
      throw gans::InputError("no .sm files in '" + target + "'");
    }
  } else {
    files.push_back(target);
  }
  int bad = 0;
  for (const auto& f : files) {
    try {
      const auto inst = gans::load_sm_file(f);
      std::cout << f.string() << ": ok (" << inst.real_count()
                << " activities, " << inst.resource_count() << " resources)\n";
    } catch (const gans::InputError& e) {
      ++bad;
      std::cout << f.string() << ": invalid: " << e.what() << '\n';
    }
  }
  std::cout << files.size() - bad << " of " << files.size() << " valid\n";
  return bad == 0 ? 0 : kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resource-constrained project scheduling solver"};
  app.require_subcommand(1);

  std::string solve_file;
  BudgetFlags solve_flags;
  auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
  solve_cmd->add_option("file", solve_file, ".sm instance")->required();
  add_budget_flags(solve_cmd, solve_flags);

  std::string bench_dir, out_path, csv_path, bounds_path;
  BudgetFlags bench_flags;
  int threads = 1;
  auto* bench_cmd = app.add_subcommand("bench", "solve every .sm file of a directory");
  bench_cmd->add_option("dir", bench_dir, "dataset directory")->required();
  add_budget_flags(bench_cmd, bench_flags);
  bench_cmd->add_option("--threads", threads, "worker threads")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", out_path, "makespan file");
  bench_cmd->add_option("--csv", csv_path, "summary CSV");
  bench_cmd->add_option("--bounds", bounds_path, "best-known makespans CSV");

  std::string rank_file, rank_mode = "ratio";
  std::uint64_t rank_seed = 1;
  auto* rank_cmd = app.add_subcommand("rank", "print the resource ranking");
  rank_cmd->add_option("file", rank_file, ".sm instance")->required();
  rank_cmd->add_option("--weights", rank_mode,
                       "steep, mild, uniform, ratio or random");
  rank_cmd->add_option("--seed", rank_seed, "seed for random weights");

  std::string validate_target;
  auto* validate_cmd =
      app.add_subcommand("validate", "check instance files");
  validate_cmd->add_option("target", validate_target, "file or directory")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*solve_cmd) return run_solve(solve_file, solve_flags);
    if (*bench_cmd) {
      return run_bench(bench_dir, bench_flags, threads, out_path, csv_path,
                       bounds_path);
    }
    if (*rank_cmd) return run_rank(rank_file, rank_mode, rank_seed);
    if (*validate_cmd) return run_validate(validate_target);
  } catch (const gans::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}
