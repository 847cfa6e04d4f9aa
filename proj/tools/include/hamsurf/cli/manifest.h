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


#ifndef HAMSURF_CLI_MANIFEST_H
#define HAMSURF_CLI_MANIFEST_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hamsurf::cli {

/// Everything needed to rerun one invocation. `args` is the argument list
/// after the program name; replaying it reproduces the outputs bit for bit.
struct RunManifest {
    std::string tool = "hamsurf";
    std::string version;
    std::string subcommand;
    std::vector<std::string> args;
    std::map<std::string, std::string> params;
    std::optional<uint64_t> seed;
    std::string started;
    std::string finished;
    std::vector<std::string> outputs;

    std::string to_json() const;
    /// Throws ParseError on malformed documents.
    static RunManifest from_json(const std::string &text);
};

std::string manifest_path_for(const std::string &output_path);
void write_manifest(const RunManifest &manifest, const std::string &path);
RunManifest read_manifest(const std::string &path);

/// UTC wall-clock time, e.g. 2026-01-31T12:00:00Z.
std::string utc_timestamp();

}  // namespace hamsurf::cli

#endif
