// Copyright 2026 The relevkit Authors
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

#ifndef RELEVKIT_CLI_H_
#define RELEVKIT_CLI_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace relevkit::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kData = 2,
  kProvider = 3,
};

// Runs the toolkit with `args` (without the program name). "-" as a path
// means `in` for inputs and `out` for outputs. JSON results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace relevkit::cli

#endif  // RELEVKIT_CLI_H_
