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


#ifndef HAMSURF_CLI_SVG_H
#define HAMSURF_CLI_SVG_H

#include <string>
#include <vector>

#include "hamsurf/cli/csv.h"

namespace hamsurf::cli {

struct PlotOptions {
    std::string x = "p";
    std::string y = "p_logical";
    /// Rows with equal values in all of these columns form one line. Empty
    /// means a single line.
    std::vector<std::string> group;
    /// Whisker columns; used when both exist in the table.
    std::string y_low = "ci_low";
    std::string y_high = "ci_high";
    std::string title;
};

/// Renders a log-log line chart as SVG 1.1. Output depends only on the table
/// and options. Rows with a non-positive x or y are left out; if none remain,
/// throws ParameterError.
std::string render_svg(const CsvTable &table, const PlotOptions &options);

/// Reads `csv_path`, renders, then writes `svg_path`. Nothing is written when
/// parsing or rendering fails.
void emit_svg(const std::string &csv_path, const std::string &svg_path, const PlotOptions &options);

}  // namespace hamsurf::cli

#endif
