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


#ifndef HAMSURF_CLI_CSV_H
#define HAMSURF_CLI_CSV_H

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace hamsurf::cli {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// A header row plus string cells. Cells holding commas, quotes or newlines
/// are quoted on write.
class CsvTable {
   public:
    CsvTable() = default;
    explicit CsvTable(std::vector<std::string> header);

    const std::vector<std::string> &header() const {
        return header_;
    }
    const std::vector<std::vector<std::string>> &rows() const {
        return rows_;
    }
    size_t num_rows() const {
        return rows_.size();
    }

    void add_row(std::vector<std::string> row);
    /// Index of the named column, or npos.
    size_t find_column(const std::string &name) const;
    /// Throws ParameterError when the column is missing.
    size_t column(const std::string &name) const;
    const std::string &cell(size_t row, size_t col) const {
        return rows_[row][col];
    }

    void write(std::ostream &out) const;
    std::string to_string() const;

    static constexpr size_t npos = static_cast<size_t>(-1);

   private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Parses a header row and data rows. Quoted fields ("a,b", "say ""x""") are
/// accepted. Throws ParseError naming the 1-based line on ragged rows or
/// unterminated quotes.
CsvTable read_csv(std::istream &in);
CsvTable read_csv_file(const std::string &path);

/// Parses a cell as a double; throws ParseError naming the row and column.
double parse_double_cell(const std::string &cell, size_t row, const std::string &column);

}  // namespace hamsurf::cli

#endif
