// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The dofregion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOFREGION_CLI_HPP
#define DOFREGION_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dofregion
{

/// Process exit codes.
namespace exit_code
{
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int usage = 2;
inline constexpr int io = 3;
} // namespace exit_code

/// Parses "lo:step:hi" (inclusive, step > 0) or a single value.
std::vector<double> parse_snr_grid(const std::string& spec);

/// Entry point of the command-line tool; args excludes the program name.
/// Output without --out goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dofregion

#endif // DOFREGION_CLI_HPP
