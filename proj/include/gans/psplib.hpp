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

// Reader for PSPLIB single-mode ".sm" files.
//
// The reader is line oriented and keys on section titles, so the varying
// column spacing found across the PSPLIB sets is accepted. Jobs numbered
// 1..n+2 in the file become activities 0..n+1.

#ifndef GANS_PSPLIB_HPP_
#define GANS_PSPLIB_HPP_

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "gans/instance.hpp"

namespace gans {

struct ParsedHeader {
  int job_count = 0;  // including both dummies
  int resource_count = 0;
  int horizon = 0;
};

// Throws ParseError for malformed or missing sections and StructureError for
// inconsistent content (job count mismatch, multi-mode jobs, non-renewable
// resources, invalid project).
ProjectInstance parse_sm(std::string_view text);
ProjectInstance parse_sm(std::istream& in);

ParsedHeader parse_sm_header(std::string_view text);

// Canonical PSPLIB-style text for an instance; parse_sm() of the result
// reproduces the instance exactly.
std::string write_sm(const ProjectInstance& inst, std::string_view name = "");

struct NamedInstance {
  std::string name;  // file stem, e.g. "j301_1"
  ProjectInstance instance;
};

ProjectInstance load_sm_file(const std::filesystem::path& path);

// All ".sm" files of a directory in lexicographic file-name order. Throws
// InputError naming the file on the first failure, or when the directory has
// no ".sm" file.
std::vector<NamedInstance> load_dataset(const std::filesystem::path& dir);

}  // namespace gans

#endif  // GANS_PSPLIB_HPP_
