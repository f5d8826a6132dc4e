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

#include "gans/psplib.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "gans/errors.hpp"

namespace gans {

namespace {

constexpr std::string_view kJobsKey = "jobs (incl.";
constexpr std::string_view kHorizonKey = "horizon";
constexpr std::string_view kRenewableKey = "- renewable";
constexpr std::string_view kNonrenewableKey = "- nonrenewable";
constexpr std::string_view kDoublyKey = "- doubly constrained";
constexpr std::string_view kPrecedence = "PRECEDENCE RELATIONS";
constexpr std::string_view kRequests = "REQUESTS/DURATIONS";
constexpr std::string_view kAvailability = "RESOURCEAVAILABILITIES";

struct Line {
  int number;  // 1-based
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 1;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    if (end == text.size()) break;
    begin = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

bool is_separator(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '*';
}

std::optional<std::vector<int>> integers(std::string_view s) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos >= s.size()) break;
    std::size_t end = pos;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, value);
    if (ec != std::errc() || ptr != s.data() + end) return std::nullopt;
    values.push_back(value);
    pos = end;
  }
  return values;
}

std::vector<int> integers_or_throw(const Line& line, std::string_view section) {
  auto values = integers(line.text);
  if (!values) {
    throw ParseError(std::string(section), line.number,
                     "expected integers, got '" + std::string(trim(line.text)) +
                         "'");
  }
  return *values;
}

// Integer following the colon of a "key : value" header line.
int header_value(const std::vector<Line>& lines, std::string_view key,
                 bool required, int fallback = 0) {
  for (const auto& line : lines) {
    if (trim(line.text).starts_with(key)) {
      const auto colon = line.text.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(std::string(key), line.number, "missing ':'");
      }
      std::string_view rest = trim(line.text.substr(colon + 1));
      const auto space = rest.find_first_of(" \t");
      if (space != std::string_view::npos) rest = rest.substr(0, space);
      int value = 0;
      const auto [ptr, ec] =
          std::from_chars(rest.data(), rest.data() + rest.size(), value);
      if (ec != std::errc() || ptr != rest.data() + rest.size()) {
        throw ParseError(std::string(key), line.number,
                         "expected an integer value");
      }
      return value;
    }
  }
  if (required) {
    throw ParseError(std::string(key), 0, "header line not found");
  }
  return fallback;
}

// Index of the first line after `title` whose content is data, skipping the
// column-header line(s). Throws when the title is absent.
std::size_t section_start(const std::vector<Line>& lines,
                          std::string_view title) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].text.find(title) != std::string_view::npos) {
      std::size_t j = i + 1;
      // Skip column headers and dashed rules until the first numeric row.
      while (j < lines.size() && !is_separator(lines[j].text) &&
             !integers(lines[j].text)) {
        ++j;
      }
      return j;
    }
  }
  throw ParseError(std::string(title), 0, "section not found");
}

std::vector<Line> section_rows(const std::vector<Line>& lines,
                               std::string_view title) {
  std::vector<Line> rows;
  for (std::size_t i = section_start(lines, title);
       i < lines.size() && !is_separator(lines[i].text); ++i) {
    rows.push_back(lines[i]);
  }
  return rows;
}

ParsedHeader read_header(const std::vector<Line>& lines) {
  ParsedHeader header;
  header.job_count = header_value(lines, kJobsKey, true);
  header.horizon = header_value(lines, kHorizonKey, false, 0);
  header.resource_count = header_value(lines, kRenewableKey, true);
  if (header.job_count < 2) {
    throw StructureError("job count " + std::to_string(header.job_count) +
                         " must include both dummy jobs");
  }
  if (header.resource_count < 1) {
    throw StructureError("at least one renewable resource is required");
  }
  if (header_value(lines, kNonrenewableKey, false, 0) != 0 ||
      header_value(lines, kDoublyKey, false, 0) != 0) {
    throw StructureError("only renewable resources are supported");
  }
  return header;
}

}  // namespace

ParsedHeader parse_sm_header(std::string_view text) {
  return read_header(split_lines(text));
}

ProjectInstance parse_sm(std::string_view text) {
  const auto lines = split_lines(text);
  const ParsedHeader header = read_header(lines);
  const int jobs = header.job_count;
  const int k_count = header.resource_count;

  std::vector<Activity> activities(jobs);
  std::vector<bool> seen(jobs, false);
  std::vector<Arc> arcs;

  const auto precedence = section_rows(lines, kPrecedence);
  if (static_cast<int>(precedence.size()) != jobs) {
    throw StructureError("PRECEDENCE RELATIONS lists " +
                         std::to_string(precedence.size()) +
                         " jobs, header declares " + std::to_string(jobs));
  }
  for (const auto& row : precedence) {
    const auto v = integers_or_throw(row, kPrecedence);
    if (v.size() < 3) {
      throw ParseError(std::string(kPrecedence), row.number,
                       "expected job, mode count and successor count");
    }
    const int job = v[0] - 1;
    if (job < 0 || job >= jobs || seen[job]) {
      throw ParseError(std::string(kPrecedence), row.number,
                       "job number " + std::to_string(v[0]) +
                           " out of range or repeated");
    }
    seen[job] = true;
    if (v[1] != 1) {
      throw StructureError("job " + std::to_string(v[0]) + " has " +
                           std::to_string(v[1]) +
                           " modes; only single-mode projects are supported");
    }
    if (static_cast<int>(v.size()) != 3 + v[2]) {
      throw ParseError(std::string(kPrecedence), row.number,
                       "successor count does not match the listed successors");
    }
    for (std::size_t i = 3; i < v.size(); ++i) {
      const int succ = v[i] - 1;
      if (succ < 0 || succ >= jobs) {
        throw ParseError(std::string(kPrecedence), row.number,
                         "successor " + std::to_string(v[i]) + " out of range");
      }
      arcs.emplace_back(job, succ);
    }
  }

  const auto requests = section_rows(lines, kRequests);
  if (static_cast<int>(requests.size()) != jobs) {
    throw StructureError("REQUESTS/DURATIONS lists " +
                         std::to_string(requests.size()) +
                         " jobs, header declares " + std::to_string(jobs));
  }
  std::fill(seen.begin(), seen.end(), false);
  for (const auto& row : requests) {
    const auto v = integers_or_throw(row, kRequests);
    if (static_cast<int>(v.size()) != 3 + k_count) {
      throw ParseError(std::string(kRequests), row.number,
                       "expected job, mode, duration and " +
                           std::to_string(k_count) + " demands");
    }
    const int job = v[0] - 1;
    if (job < 0 || job >= jobs || seen[job]) {
      throw ParseError(std::string(kRequests), row.number,
                       "job number " + std::to_string(v[0]) +
                           " out of range or repeated");
    }
    seen[job] = true;
    if (v[1] != 1) {
      throw StructureError("job " + std::to_string(v[0]) +
                           " uses mode " + std::to_string(v[1]));
    }
    activities[job].duration = v[2];
    activities[job].demand.assign(v.begin() + 3, v.end());
  }

  const auto availability = section_rows(lines, kAvailability);
  if (availability.empty()) {
    throw ParseError(std::string(kAvailability), 0, "no capacity row");
  }
  auto capacities = integers_or_throw(availability.front(), kAvailability);
  if (static_cast<int>(capacities.size()) != k_count) {
    throw ParseError(std::string(kAvailability), availability.front().number,
                     "expected " + std::to_string(k_count) + " capacities");
  }

  int total = 0;
  for (const auto& a : activities) total += std::max(a.duration, 0);
  ProjectInstance inst(std::move(activities), std::move(arcs),
                       std::move(capacities), std::max(header.horizon, total));
  if (const auto violation = validate_instance(inst)) {
    throw StructureError("invalid project: " + violation->message);
  }
  return inst;
}

ProjectInstance parse_sm(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_sm(buffer.str());
}

std::string write_sm(const ProjectInstance& inst, std::string_view name) {
  const std::string rule(72, '*');
  std::ostringstream out;
  out << rule << '\n';
  out << "file with basedata            : " << name << '\n';
  out << rule << '\n';
  out << "projects                      :  1\n";
  out << "jobs (incl. supersource/sink ):  " << inst.size() << '\n';
  out << "horizon                       :  " << inst.horizon() << '\n';
  out << "RESOURCES\n";
  out << "  - renewable                 :  " << inst.resource_count()
      << "   R\n";
  out << "  - nonrenewable              :  0   N\n";
  out << "  - doubly constrained        :  0   D\n";
  out << rule << '\n';
  out << "PRECEDENCE RELATIONS:\n";
  out << "jobnr.    #modes  #successors   successors\n";
  for (int j = 0; j < inst.size(); ++j) {
    const auto succ = inst.successors(j);
    out << std::setw(4) << j + 1 << std::setw(9) << 1 << std::setw(11)
        << succ.size() << "       ";
    for (const int s : succ) out << std::setw(4) << s + 1;
    out << '\n';
  }
  out << rule << '\n';
  out << "REQUESTS/DURATIONS:\n";
  out << "jobnr. mode duration";
  for (int k = 0; k < inst.resource_count(); ++k) out << "  R " << k + 1;
  out << '\n' << std::string(72, '-') << '\n';
  for (int j = 0; j < inst.size(); ++j) {
    out << std::setw(3) << j + 1 << std::setw(7) << 1 << std::setw(6)
        << inst.duration(j) << "    ";
    for (const int r : inst.demands(j)) out << std::setw(5) << r;
    out << '\n';
  }
  out << rule << '\n';
  out << "RESOURCEAVAILABILITIES:\n";
  for (int k = 0; k < inst.resource_count(); ++k) out << "  R " << k + 1;
  out << '\n';
  for (const int c : inst.capacities()) out << std::setw(5) << c;
  out << '\n' << rule << '\n';
  return out.str();
}

ProjectInstance load_sm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return parse_sm(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::vector<NamedInstance> load_dataset(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw InputError(dir.string() + ": not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".sm") {
      files.push_back(entry.path());
    }
  }
  if (ec) throw InputError(dir.string() + ": " + ec.message());
  if (files.empty()) throw InputError(dir.string() + ": no .sm files");
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) {
              return a.filename().string() < b.filename().string();
            });
  std::vector<NamedInstance> out;
  out.reserve(files.size());
  for (const auto& file : files) {
    out.push_back({file.stem().string(), load_sm_file(file)});
  }
  return out;
}

}  // namespace gans
