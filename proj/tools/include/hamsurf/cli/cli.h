// Copyright 2026 The hamsurf Authors
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


#ifndef HAMSURF_CLI_CLI_H
#define HAMSURF_CLI_CLI_H

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace hamsurf::cli {

/// Parses a p grid: "0.02", "0.01,0.02,0.03", or "a:b" for `points`
/// log-spaced values from a to b inclusive, rounded to 6 significant digits.
/// `flag` names the option in error messages.
std::vector<double> parse_p_grid(const std::string &spec, size_t points, const std::string &flag = "--p");

/// Default worker count: $HAMSURF_WORKERS when set, else 0 (all cores).
size_t default_workers();

/// Runs one command line (without the program name). Tables go to `out`
/// unless --out is given; diagnostics go to `err`. Returns the exit status:
/// 0 on success, the CLI11 code on usage errors, 2 on runtime errors.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace hamsurf::cli

#endif
