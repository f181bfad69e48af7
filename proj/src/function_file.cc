// Copyright 2026 The gpbent Authors.
//
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

#include "gpb/function_file.h"

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace gpb {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    pos = s.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = s.find_first_of(" \t\r", pos);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view text, int line, std::string_view what) {
  T value{};
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError(line, "expected an integer for " + std::string(what) +
                               ", got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> parse_list(std::string_view text, int line,
                            std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    out.push_back(parse_number<int>(
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                         : comma - pos),
        line, what));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

bool is_integer_line(std::string_view s) {
  for (auto word : split_words(s)) {
    int v;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || ptr != word.data() + word.size()) return false;
  }
  return true;
}

GeneratorSpec parse_generator(std::string_view body, int line, int modulus,
                              int arity) {
  auto words = split_words(body);
  if (words.empty()) throw ParseError(line, "gen: needs a family name");
  auto family = parse_family(words[0]);
  if (!family) {
    throw ParseError(line, "unknown generator family '" +
                               std::string(words[0]) + "'");
  }
  GeneratorSpec spec{.family = *family, .ring = Ring(modulus), .arity = arity};
  for (std::size_t i = 1; i < words.size(); ++i) {
    const auto eq = words[i].find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line, "expected key=value, got '" +
                                 std::string(words[i]) + "'");
    }
    const auto key = words[i].substr(0, eq);
    const auto value = words[i].substr(eq + 1);
    if (key == "t") {
      spec.t = parse_list(value, line, "t");
    } else if (key == "c") {
      spec.c = parse_number<int>(value, line, "c");
    } else if (key == "Q" || key == "q") {
      spec.q = parse_list(value, line, "Q");
    } else if (key == "seed") {
      spec.seed = parse_number<std::uint64_t>(value, line, "seed");
    } else if (key == "index") {
      spec.index = parse_number<std::uint64_t>(value, line, "index");
    } else {
      throw ParseError(line, "unknown generator parameter '" +
                                 std::string(key) + "'");
    }
  }
  return spec;
}

}  // namespace

FunctionFile parse_function_file(std::string_view text) {
  FunctionFile file;
  bool have_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (!have_header) {
      bool saw_n = false, saw_arity = false;
      for (auto word : split_words(line)) {
        if (word.starts_with("N=")) {
          file.modulus = parse_number<int>(word.substr(2), line_no, "N");
          saw_n = true;
        } else if (word.starts_with("n=")) {
          file.arity = parse_number<int>(word.substr(2), line_no, "n");
          saw_arity = true;
        } else {
          throw ParseError(line_no, "expected header 'N=<int> n=<int>', got '" +
                                        std::string(word) + "'");
        }
      }
      if (!saw_n || !saw_arity) {
        throw ParseError(line_no, "header must declare both N and n");
      }
      if (file.modulus < 2) throw ParseError(line_no, "N must be >= 2");
      if (file.arity < 0) throw ParseError(line_no, "n must be >= 0");
      try {
        Ring(file.modulus).space_size(file.arity);
      } catch (const DomainError& e) {
        throw ParseError(line_no, e.what());
      }
      have_header = true;
      continue;
    }

    if (line.starts_with("table:")) {
      if (file.table || file.generator) {
        throw ParseError(line_no, "function body declared twice");
      }
      file.table.emplace();
      file.body_line = line_no;
      line = line.substr(6);
    } else if (line.starts_with("gen:")) {
      if (file.table || file.generator) {
        throw ParseError(line_no, "function body declared twice");
      }
      file.body_line = line_no;
      file.generator =
          parse_generator(line.substr(4), line_no, file.modulus, file.arity);
      continue;
    } else if (!file.table || !is_integer_line(line)) {
      throw ParseError(line_no, "expected 'table:' or 'gen:', got '" +
                                    std::string(line) + "'");
    }
    for (auto word : split_words(line)) {
      int v = parse_number<int>(word, line_no, "table entry");
      if (v < 0 || v >= file.modulus) {
        throw ParseError(line_no, "table value " + std::to_string(v) +
                                      " outside [0, N)");
      }
      file.table->push_back(v);
    }
  }

  if (!have_header) throw ParseError(line_no, "missing 'N=<int> n=<int>' header");
  if (!file.table && !file.generator) {
    throw ParseError(line_no, "missing 'table:' or 'gen:' line");
  }
  if (file.table) {
    const std::uint64_t expected = Ring(file.modulus).space_size(file.arity);
    if (file.table->size() != expected) {
      throw ParseError(file.body_line, "table has " +
                                       std::to_string(file.table->size()) +
                                       " entries, expected N^n = " +
                                       std::to_string(expected));
    }
  }
  return file;
}

LogicFunction FunctionFile::materialize() const {
  const Ring ring(modulus);
  if (table) return LogicFunction(ring, arity, *table);
  try {
    return generate(*generator);
  } catch (const DomainError& e) {
    throw ParseError(body_line, std::string("generator: ") + e.what());
  }
}

LogicFunction load_function(std::string_view text) {
  return parse_function_file(text).materialize();
}

std::string format_function_file(const LogicFunction& f) {
  std::ostringstream os;
  os << "N=" << f.modulus() << " n=" << f.arity() << "\ntable:";
  for (int v : f.table()) os << ' ' << v;
  os << '\n';
  return os.str();
}

}  // namespace gpb
