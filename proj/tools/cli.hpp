// Copyright 2026 The nimforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. run_cli is the whole program minus process
// plumbing so tests can drive it with in-memory streams.

#ifndef NIMFORGE_TOOLS_CLI_HPP_
#define NIMFORGE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace nimforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

// Largest square side accepted by `table --format ascii`.
inline constexpr unsigned kMaxAsciiSide = 39;

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nimforge::cli

#endif  // NIMFORGE_TOOLS_CLI_HPP_
