// Copyright 2026 The Hyperc Authors
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

// The hyperc command-line front end. Every command reads JSON documents and
// writes canonical JSON (or a short text rendering), so identical inputs and
// flags always produce identical bytes.
//
// Exit codes: 0 on success or a true predicate, 1 on a false predicate or a
// failing oracle run, 2 on any error.

#ifndef HYPERC_CLI_HPP_
#define HYPERC_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace hyperc::cli {

struct CommandInfo {
  /// e.g. "lang union".
  std::string path;
  std::string help;
  /// Library operations reachable from this command, as "module.operation".
  std::vector<std::string> operations;
};

const std::vector<CommandInfo>& command_table();

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperc::cli

#endif  // HYPERC_CLI_HPP_
