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

#ifndef GPB_FUNCTION_FILE_H_
#define GPB_FUNCTION_FILE_H_

// Line-oriented function definitions:
//
//   # comment (also allowed after content)
//   N=4 n=2
//   table: 0 2 2 0 2 0 0 2 2 0 0 2 0 2 2 0
//
// or, instead of the table line, a generator:
//
//   gen: example_2_1
//   gen: affine t=1,0,3 c=2
//   gen: quadratic_form Q=0,1,0,0 t=0,0 c=0     (Q is n*n row-major)
//   gen: product_bent
//   gen: random seed=42
//   gen: exhaustive index=17
//
// Table values may continue over following lines. The table is listed in
// the library's enumeration order (first coordinate varies fastest).

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gpb/corpus.h"
#include "gpb/transforms.h"

namespace gpb {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct FunctionFile {
  int modulus = 0;
  int arity = 0;
  std::optional<std::vector<int>> table;
  std::optional<GeneratorSpec> generator;
  int body_line = 0;  // line of the table: or gen: directive

  // Throws ParseError at body_line when the generator rejects its
  // parameters.
  LogicFunction materialize() const;
};

FunctionFile parse_function_file(std::string_view text);

// parse_function_file(text).materialize().
LogicFunction load_function(std::string_view text);

// Inverse of parse for explicit tables: header plus one table line.
std::string format_function_file(const LogicFunction& f);

}  // namespace gpb

#endif  // GPB_FUNCTION_FILE_H_
