// Copyright 2026 The objcontract Authors
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

#pragma once

// Line-oriented instance format:
//
//   problem mobo
//   nvars <n>
//   nobjs <p>
//   obj <n integers>                         (exactly p lines)
//   con <n integers> <le|ge|eq> <integer>    (zero or more)
//
// '#' starts a comment; tokens are separated by blanks; LF line endings.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "objcontract/core.hpp"

namespace objcontract {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

// The instance name is taken from the file stem.
Instance read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const Instance& instance);

}  // namespace objcontract
