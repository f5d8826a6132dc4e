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

#ifndef GANS_ERRORS_HPP_
#define GANS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gans {

// Bad user input: unreadable files, malformed instance or config text.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or missing section in an instance file.
class ParseError : public InputError {
 public:
  ParseError(std::string section, int line, const std::string& what)
      : InputError(section + " (line " + std::to_string(line) + "): " + what),
        section_(std::move(section)),
        line_(line) {}

  const std::string& section() const { return section_; }
  int line() const { return line_; }

 private:
  std::string section_;
  int line_;
};

// Well-formed text describing an inconsistent or unsupported project.
class StructureError : public InputError {
 public:
  using InputError::InputError;
};

class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace gans

#endif  // GANS_ERRORS_HPP_
