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


#include "hamsurf/cli/csv.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hamsurf/errors.h"

namespace hamsurf::cli {

namespace {

// Splits one record, pulling further lines from `in` while a quote is open.
std::vector<std::string> split_record(std::string line, std::istream &in, size_t &line_no) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    size_t start_line = line_no;
    for (size_t i = 0;; i++) {
        if (i == line.size()) {
            if (!quoted) {
                break;
            }
            std::string more;
            if (!std::getline(in, more)) {
                throw ParseError("csv line " + std::to_string(start_line) + ": unterminated quoted field");
            }
            line_no++;
            if (!more.empty() && more.back() == '\r') {
                more.pop_back();
            }
            field += '\n';
            line += '\n';
            line += more;
            continue;
        }
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    i++;
                } else {
                    quoted = false;
                }
            } else if (c != '\n') {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header_.size()) {
        throw DimensionError("CsvTable: row has " + std::to_string(row.size()) + " cells, header has " +
                             std::to_string(header_.size()));
    }
    rows_.push_back(std::move(row));
}

size_t CsvTable::find_column(const std::string &name) const {
    for (size_t i = 0; i < header_.size(); i++) {
        if (header_[i] == name) {
            return i;
        }
    }
    return npos;
}

size_t CsvTable::column(const std::string &name) const {
    size_t c = find_column(name);
    if (c == npos) {
        throw ParameterError("csv has no column '" + name + "'");
    }
    return c;
}

void CsvTable::write(std::ostream &out) const {
    auto line = [&out](const std::vector<std::string> &cells) {
        for (size_t i = 0; i < cells.size(); i++) {
            if (i) {
                out << ',';
            }
            const auto &c = cells[i];
            if (c.find_first_of(",\"\n\r") == std::string::npos) {
                out << c;
                continue;
            }
            out << '"';
            for (char ch : c) {
                if (ch == '"') {
                    out << '"';
                }
                out << ch;
            }
            out << '"';
        }
        out << '\n';
    };
    line(header_);
    for (const auto &r : rows_) {
        line(r);
    }
}

std::string CsvTable::to_string() const {
    std::ostringstream out;
    write(out);
    return out.str();
}

CsvTable read_csv(std::istream &in) {
    std::string line;
    size_t line_no = 1;
    if (!std::getline(in, line)) {
        throw ParseError("csv: empty input");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    CsvTable table(split_record(line, in, line_no));
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        size_t row_line = line_no;
        auto fields = split_record(line, in, line_no);
        if (fields.size() != table.header().size()) {
            throw ParseError("csv line " + std::to_string(row_line) + ": expected " +
                             std::to_string(table.header().size()) + " fields, got " + std::to_string(fields.size()));
        }
        table.add_row(std::move(fields));
    }
    return table;
}

CsvTable read_csv_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParameterError("cannot open '" + path + "'");
    }
    return read_csv(in);
}

double parse_double_cell(const std::string &cell, size_t row, const std::string &column) {
    double v = 0;
    auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (cell.empty() || res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        throw ParseError("csv data row " + std::to_string(row + 1) + ": column '" + column + "' is not a number: '" +
                         cell + "'");
    }
    return v;
}

}  // namespace hamsurf::cli
