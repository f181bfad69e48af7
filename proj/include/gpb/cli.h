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

#ifndef GPB_CLI_H_
#define GPB_CLI_H_

#include <iosfwd>

namespace gpb::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,          // bad command line
  kInputError = 2,     // unreadable or malformed function file
  kNotGpb = 3,         // decompose on a function that is not GPB
  kCapExceeded = 4,    // census beyond the enumeration cap
  kInternalError = 5,  // engines disagree or a verification failed
};

// Entry point of the gpbtool binary with injectable streams.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace gpb::cli

#endif  // GPB_CLI_H_
