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

#include "objcontract/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace objcontract {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::int64_t parse_int(const Token& t, std::size_t line) {
  std::int64_t v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (!t.text.empty() && t.text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, t.column, "integer out of range: '" + std::string(t.text) + "'");
  }
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  }
  return v;
}

std::size_t parse_count(const Token& t, std::size_t line) {
  const std::int64_t v = parse_int(t, line);
  if (v <= 0) throw ParseError(line, t.column, "expected a positive count");
  return static_cast<std::size_t>(v);
}

std::optional<Sense> parse_sense(std::string_view s) {
  if (s == "le") return Sense::kLe;
  if (s == "ge") return Sense::kGe;
  if (s == "eq") return Sense::kEq;
  return std::nullopt;
}

std::string_view sense_name(Sense s) {
  switch (s) {
    case Sense::kLe:
      return "le";
    case Sense::kEq:
      return "eq";
    case Sense::kGe:
      return "ge";
  }
  return "?";
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Instance parse_instance(std::string_view text) {
  Instance inst;
  bool seen_problem = false;
  std::optional<std::size_t> nvars, nobjs;
  std::vector<CoefficientVector> objectives;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    last_line = line_no;
    const std::string_view key = toks[0].text;

    auto expect_arity = [&](std::size_t n) {
      if (toks.size() != n) {
        throw ParseError(line_no, toks.size() > n ? toks[n].column : line.size() + 1,
                         "'" + std::string(key) + "' expects " + std::to_string(n - 1) +
                             " value(s)");
      }
    };
    if (!seen_problem) {
      if (key != "problem" || toks.size() != 2 || toks[1].text != "mobo") {
        throw ParseError(line_no, toks[0].column, "document must start with 'problem mobo'");
      }
      seen_problem = true;
      continue;
    }
    if (key == "nvars" || key == "nobjs") {
      expect_arity(2);
      auto& slot = key == "nvars" ? nvars : nobjs;
      if (slot) throw ParseError(line_no, toks[0].column, "duplicate '" + std::string(key) + "'");
      if (!objectives.empty() || !inst.constraints.empty()) {
        throw ParseError(line_no, toks[0].column,
                         "'" + std::string(key) + "' must precede obj/con lines");
      }
      slot = parse_count(toks[1], line_no);
    } else if (key == "obj" || key == "con") {
      if (!nvars || !nobjs) {
        throw ParseError(line_no, toks[0].column, "nvars and nobjs must be declared first");
      }
      const std::size_t n = *nvars;
      const std::size_t want = key == "obj" ? n + 1 : n + 3;
      if (toks.size() != want) {
        const std::size_t got = key == "obj" ? toks.size() - 1
                                             : (toks.size() >= 3 ? toks.size() - 3 : 0);
        throw ParseError(line_no, toks[0].column,
                         "dimension mismatch: '" + std::string(key) + "' has " +
                             std::to_string(got) + " coefficients, expected " +
                             std::to_string(n));
      }
      std::vector<std::int64_t> coeffs(n);
      for (std::size_t j = 0; j < n; ++j) coeffs[j] = parse_int(toks[j + 1], line_no);
      if (key == "obj") {
        if (objectives.size() == *nobjs) {
          throw ParseError(line_no, toks[0].column,
                           "more obj lines than nobjs=" + std::to_string(*nobjs));
        }
        if (!inst.constraints.empty()) {
          throw ParseError(line_no, toks[0].column, "obj lines must precede con lines");
        }
        objectives.emplace_back(std::move(coeffs));
      } else {
        const auto sense = parse_sense(toks[n + 1].text);
        if (!sense) {
          throw ParseError(line_no, toks[n + 1].column,
                           "expected le, ge or eq, got '" + std::string(toks[n + 1].text) + "'");
        }
        inst.constraints.push_back({std::move(coeffs), *sense, parse_int(toks[n + 2], line_no)});
      }
    } else if (key == "problem") {
      throw ParseError(line_no, toks[0].column, "duplicate 'problem' line");
    } else {
      throw ParseError(line_no, toks[0].column, "unknown keyword '" + std::string(key) + "'");
    }
  }
  if (!seen_problem) throw ParseError(1, 1, "empty document");
  if (!nvars || !nobjs) throw ParseError(last_line, 1, "missing nvars or nobjs");
  if (objectives.size() != *nobjs) {
    throw ParseError(last_line, 1,
                     "expected " + std::to_string(*nobjs) + " obj lines, found " +
                         std::to_string(objectives.size()));
  }
  inst.nvars = *nvars;
  inst.nobjs = *nobjs;
  inst.objectives = ObjectiveMatrix(std::move(objectives));
  inst.validate();
  return inst;
}

std::string serialize_instance(const Instance& instance) {
  instance.validate();
  std::ostringstream os;
  if (!instance.name.empty()) os << "# name: " << instance.name << '\n';
  os << "problem mobo\n";
  os << "nvars " << instance.nvars << '\n';
  os << "nobjs " << instance.nobjs << '\n';
  for (const auto& row : instance.objectives.rows()) {
    os << "obj";
    for (auto v : row.values()) os << ' ' << v;
    os << '\n';
  }
  for (const auto& con : instance.constraints) {
    os << "con";
    for (auto v : con.coeffs) os << ' ' << v;
    os << ' ' << sense_name(con.sense) << ' ' << con.rhs << '\n';
  }
  return os.str();
}

Instance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Instance inst = parse_instance(buf.str());
  inst.name = path.stem().string();
  return inst;
}

void write_instance_file(const std::filesystem::path& path, const Instance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << serialize_instance(instance);
}

}  // namespace objcontract
