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


#include "hamsurf/cli/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "hamsurf/errors.h"

namespace hamsurf::cli {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 440;
constexpr double kLeft = 80;
constexpr double kRight = 170;
constexpr double kTop = 40;
constexpr double kBottom = 60;

const char *const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

struct Point {
    double x = 0;
    double y = 0;
    double lo = 0;
    double hi = 0;
    bool whisker = false;
};

struct Series {
    std::string label;
    std::vector<Point> points;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

// Decade-aligned log range covering [lo, hi].
std::pair<double, double> decade_range(double lo, double hi) {
    double a = std::floor(std::log10(lo));
    double b = std::ceil(std::log10(hi));
    if (b <= a) {
        b = a + 1;
    }
    return {a, b};
}

std::string tick_label(int exponent) {
    if (exponent >= 0 && exponent <= 3) {
        return std::to_string(static_cast<long>(std::lround(std::pow(10.0, exponent))));
    }
    return "1e" + std::to_string(exponent);
}

}  // namespace

std::string render_svg(const CsvTable &table, const PlotOptions &options) {
    size_t xc = table.column(options.x);
    size_t yc = table.column(options.y);
    std::vector<size_t> gc;
    for (const auto &g : options.group) {
        gc.push_back(table.column(g));
    }
    size_t lc = table.find_column(options.y_low);
    size_t hc = table.find_column(options.y_high);
    bool whiskers = lc != CsvTable::npos && hc != CsvTable::npos;

    std::vector<Series> series;
    std::map<std::string, size_t> index;
    for (size_t r = 0; r < table.num_rows(); r++) {
        Point pt;
        pt.x = parse_double_cell(table.cell(r, xc), r, options.x);
        pt.y = parse_double_cell(table.cell(r, yc), r, options.y);
        if (whiskers) {
            pt.lo = parse_double_cell(table.cell(r, lc), r, options.y_low);
            pt.hi = parse_double_cell(table.cell(r, hc), r, options.y_high);
            pt.whisker = pt.hi > 0;
        }
        std::string label;
        for (size_t i = 0; i < gc.size(); i++) {
            if (i) {
                label += ' ';
            }
            label += options.group[i] + "=" + table.cell(r, gc[i]);
        }
        auto [it, inserted] = index.try_emplace(label, series.size());
        if (inserted) {
            series.push_back({label, {}});
        }
        if (pt.x > 0 && pt.y > 0) {
            series[it->second].points.push_back(pt);
        }
    }

    double xmin = INFINITY, xmax = 0, ymin = INFINITY, ymax = 0;
    size_t total = 0;
    for (auto &s : series) {
        std::stable_sort(s.points.begin(), s.points.end(), [](const Point &a, const Point &b) { return a.x < b.x; });
        for (const auto &pt : s.points) {
            total++;
            xmin = std::min(xmin, pt.x);
            xmax = std::max(xmax, pt.x);
            ymin = std::min(ymin, pt.whisker && pt.lo > 0 ? pt.lo : pt.y);
            ymax = std::max(ymax, pt.whisker ? pt.hi : pt.y);
        }
    }
    if (total == 0) {
        throw ParameterError("plot: no data rows with positive " + options.x + " and " + options.y);
    }
    auto [x0, x1] = decade_range(xmin, xmax);
    auto [y0, y1] = decade_range(ymin, ymax);
    double pw = kWidth - kLeft - kRight;
    double ph = kHeight - kTop - kBottom;
    auto sx = [&](double v) { return kLeft + (std::log10(v) - x0) / (x1 - x0) * pw; };
    auto sy = [&](double v) { return kTop + (y1 - std::log10(v)) / (y1 - y0) * ph; };

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty()) {
        o << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
          << escape(options.title) << "</text>\n";
    }
    o << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (int e = static_cast<int>(x0); e <= static_cast<int>(x1); e++) {
        double x = kLeft + (e - x0) / (x1 - x0) * pw;
        o << "<line x1=\"" << num(x) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(x) << "\" y2=\""
          << num(kTop + ph) << "\"/>\n";
    }
    for (int e = static_cast<int>(y0); e <= static_cast<int>(y1); e++) {
        double y = kTop + (y1 - e) / (y1 - y0) * ph;
        o << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kLeft + pw) << "\" y2=\""
          << num(y) << "\"/>\n";
    }
    o << "</g>\n";
    o << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int e = static_cast<int>(x0); e <= static_cast<int>(x1); e++) {
        double x = kLeft + (e - x0) / (x1 - x0) * pw;
        o << "<text x=\"" << num(x) << "\" y=\"" << num(kTop + ph + 18) << "\" text-anchor=\"middle\">"
          << tick_label(e) << "</text>\n";
    }
    for (int e = static_cast<int>(y0); e <= static_cast<int>(y1); e++) {
        double y = kTop + (y1 - e) / (y1 - y0) * ph;
        o << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">" << tick_label(e)
          << "</text>\n";
    }
    o << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 16) << "\" text-anchor=\"middle\">"
      << escape(options.x) << "</text>\n";
    o << "<text transform=\"translate(18 " << num(kTop + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
      << escape(options.y) << "</text>\n";

    for (size_t i = 0; i < series.size(); i++) {
        const auto &s = series[i];
        if (s.points.empty()) {
            continue;
        }
        const char *color = kPalette[i % std::size(kPalette)];
        o << "<g stroke=\"" << color << "\" fill=\"none\">\n";
        o << "<polyline stroke-width=\"1.5\" points=\"";
        for (size_t j = 0; j < s.points.size(); j++) {
            o << (j ? " " : "") << num(sx(s.points[j].x)) << ',' << num(sy(s.points[j].y));
        }
        o << "\"/>\n";
        for (const auto &pt : s.points) {
            double x = sx(pt.x);
            if (pt.whisker) {
                // A zero lower bound is drawn down to the axis.
                double ylo = pt.lo > 0 ? sy(pt.lo) : kTop + ph;
                double yhi = sy(pt.hi);
                o << "<path d=\"M" << num(x) << ' ' << num(ylo) << "V" << num(yhi) << "M" << num(x - 3) << ' '
                  << num(ylo) << "h6M" << num(x - 3) << ' ' << num(yhi) << "h6\"/>\n";
            }
            o << "<circle cx=\"" << num(x) << "\" cy=\"" << num(sy(pt.y)) << "\" r=\"2.5\" fill=\"" << color
              << "\"/>\n";
        }
        o << "</g>\n";
        if (!s.label.empty()) {
            double ly = kTop + 10 + 18 * static_cast<double>(i);
            o << "<line x1=\"" << num(kLeft + pw + 12) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(kLeft + pw + 32)
              << "\" y2=\"" << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
            o << "<text x=\"" << num(kLeft + pw + 38) << "\" y=\"" << num(ly + 4) << "\">" << escape(s.label)
              << "</text>\n";
        }
    }
    o << "</svg>\n";
    return o.str();
}

void emit_svg(const std::string &csv_path, const std::string &svg_path, const PlotOptions &options) {
    CsvTable table = read_csv_file(csv_path);
    if (table.num_rows() == 0) {
        throw ParseError("plot: '" + csv_path + "' has no data rows");
    }
    std::string svg = render_svg(table, options);
    std::ofstream out(svg_path, std::ios::binary);
    if (!out) {
        throw ParameterError("cannot write '" + svg_path + "'");
    }
    out << svg;
}

}  // namespace hamsurf::cli
