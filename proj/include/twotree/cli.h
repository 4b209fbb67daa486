// Copyright 2026 The twotree-enum Authors.
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

#ifndef TWOTREE_CLI_H_
#define TWOTREE_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace twotree {

enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,  // not a 2-tree, not chordal, failed verification
  kExitUsage = 2,   // bad arguments or unreadable/malformed input
  kExitGuard = 3,   // cap-n or brute-force guard exceeded
};

// Default and unacknowledged maximum for --cap-n.
inline constexpr int kDefaultCapN = 22;

// Entry point of the `twotree` tool. `args[0]` is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace twotree

#endif  // TWOTREE_CLI_H_
