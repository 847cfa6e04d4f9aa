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


#include "hamsurf/cli/manifest.h"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hamsurf/errors.h"

namespace hamsurf::cli {

using nlohmann::json;

std::string RunManifest::to_json() const {
    json j;
    j["tool"] = tool;
    j["version"] = version;
    j["subcommand"] = subcommand;
    j["args"] = args;
    j["params"] = params;
    j["seed"] = seed ? json(*seed) : json(nullptr);
    j["started"] = started;
    j["finished"] = finished;
    j["outputs"] = outputs;
    return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json(const std::string &text) {
    try {
        json j = json::parse(text);
        RunManifest m;
        m.tool = j.at("tool").get<std::string>();
        m.version = j.at("version").get<std::string>();
        m.subcommand = j.at("subcommand").get<std::string>();
        m.args = j.at("args").get<std::vector<std::string>>();
        m.params = j.value("params", std::map<std::string, std::string>{});
        if (j.contains("seed") && !j["seed"].is_null()) {
            m.seed = j["seed"].get<uint64_t>();
        }
        m.started = j.value("started", "");
        m.finished = j.value("finished", "");
        m.outputs = j.value("outputs", std::vector<std::string>{});
        return m;
    } catch (const json::exception &e) {
        throw ParseError(std::string("manifest: ") + e.what());
    }
}

std::string manifest_path_for(const std::string &output_path) {
    return output_path + ".manifest.json";
}

void write_manifest(const RunManifest &manifest, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParameterError("cannot write '" + path + "'");
    }
    out << manifest.to_json();
}

RunManifest read_manifest(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParameterError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return RunManifest::from_json(buf.str());
}

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace hamsurf::cli
