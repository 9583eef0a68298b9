// Copyright 2026 The lsakit Authors.
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

#ifndef LSAKIT_TOOLS_COMMANDS_HPP_
#define LSAKIT_TOOLS_COMMANDS_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "lsakit/algebra.hpp"
#include "lsakit/algebra_file.hpp"

namespace lsakit::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The check names accepted by `verify`.
const std::vector<std::string>& check_names();

/// Runs a named check against the labels of `file`. Throws UnknownCheck.
CheckReport run_check(const std::string& name, const AlgebraFile& file, Mode mode);

/// Reads a file, falling back to a catalog entry of the same name.
AlgebraFile load_input(const std::string& path_or_entry);

}  // namespace lsakit::cli

#endif  // LSAKIT_TOOLS_COMMANDS_HPP_
