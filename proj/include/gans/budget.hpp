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

#ifndef GANS_BUDGET_HPP_
#define GANS_BUDGET_HPP_

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>

namespace gans {

// Counts generated schedules against a limit, with an optional wall-clock
// deadline for runs without a schedule limit.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  explicit Budget(std::optional<std::int64_t> limit,
                  std::optional<Clock::time_point> deadline = std::nullopt)
      : limit_(limit), deadline_(deadline) {}

  static Budget unlimited() { return Budget(std::nullopt); }

  void charge(std::int64_t schedules) { used_ += schedules; }
  std::int64_t used() const { return used_; }
  std::optional<std::int64_t> limit() const { return limit_; }

  bool exhausted() const {
    if (limit_ && used_ >= *limit_) return true;
    return deadline_ && Clock::now() >= *deadline_;
  }

  std::int64_t remaining() const {
    if (!limit_) return std::numeric_limits<std::int64_t>::max();
    return *limit_ > used_ ? *limit_ - used_ : 0;
  }

 private:
  std::optional<std::int64_t> limit_;
  std::optional<Clock::time_point> deadline_;
  std::int64_t used_ = 0;
};

}  // namespace gans

#endif  // GANS_BUDGET_HPP_
