// Copyright 2026 The qlearnlab authors
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

#include "qlearnlab/expt/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace qlearnlab::expt {

namespace {

constexpr double kWidth = 640.0, kHeight = 440.0;
constexpr double kLeft = 70.0, kRight = 618.0, kTop = 42.0, kBottom = 385.0;

const char* kPalette[8] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                           "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.2f", v);
    return buffer;
}

std::string tick_label(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%g", v);
    return buffer;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

// Nice tick positions covering [lo, hi] with roughly n steps.
std::vector<double> nice_ticks(double lo, double hi, int n) {
    if (!(hi > lo)) return {lo};
    const double raw = (hi - lo) / std::max(1, n);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * m >= raw) {
            step = mag * m;
            break;
        }
    }
    std::vector<double> ticks;
    double t = std::ceil(lo / step) * step;
    for (; t <= hi + 0.5 * step; t += step) {
        double v = t;
        if (std::abs(v) < 1e-12 * step) v = 0.0;
        ticks.push_back(v);
        if (ticks.size() > 20) break;
    }
    return ticks;
}

std::string series_tag(TargetKind kind) { return kind == TargetKind::Mps ? "chi=" : "t="; }

}  // namespace

PlotSpec plot_from_sweep(const SweepResult& result, const std::vector<AggregateRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("plot_from_sweep: no aggregates");
    const SweepSpec& spec = result.spec;
    PlotSpec plot;
    plot.title = spec.figure.empty() ? probe_kind_name(spec.probe) + " sweep" : spec.figure;

    const std::string metric = rows.front().metric;
    std::map<int, Series> by_value;
    switch (spec.probe) {
        case ProbeKind::Rso:
        case ProbeKind::Epochs:
            plot.x_label = "subspace dimension d";
            plot.y_label = metric == "tv" ? "TV distance" : "epochs to convergence";
            for (const auto& row : rows) {
                Series& series = by_value[row.resource_value];
                series.label = series_tag(spec.dataset) + std::to_string(row.resource_value);
                series.points.push_back(
                    {static_cast<double>(row.sub_dim.value_or(0)), row.mean, row.stddev});
            }
            break;
        case ProbeKind::Entropy:
            plot.x_label = "cut position";
            plot.y_label = "entanglement entropy (bits)";
            for (const auto& row : rows) {
                Series& series = by_value[row.resource_value];
                series.label = series_tag(spec.dataset) + std::to_string(row.resource_value);
                series.points.push_back(
                    {static_cast<double>(row.cut.value_or(0)), row.mean, row.stddev});
            }
            break;
        case ProbeKind::Hessian:
            plot.x_label = spec.dataset == TargetKind::Mps ? "bond dimension chi" : "T count";
            plot.y_label = "largest Hessian eigenvalue";
            for (const auto& row : rows) {
                Series& series = by_value[0];
                series.label = spec.weighting;
                series.points.push_back(
                    {static_cast<double>(row.resource_value), row.mean, row.stddev});
            }
            break;
    }

    for (auto& [value, series] : by_value) {
        std::sort(series.points.begin(), series.points.end(),
                  [](const SeriesPoint& a, const SeriesPoint& b) { return a.x < b.x; });
        plot.series.push_back(std::move(series));
    }

    double x_min = 0.0, x_max = 0.0;
    bool first = true;
    for (const auto& series : plot.series)
        for (const auto& point : series.points) {
            x_min = first ? point.x : std::min(x_min, point.x);
            x_max = first ? point.x : std::max(x_max, point.x);
            first = false;
        }
    plot.log2_x = x_min > 0.0 && x_max / std::max(x_min, 1e-300) >= 16.0;
    return plot;
}

std::string render_svg(const PlotSpec& plot) {
    if (plot.series.empty()) throw std::invalid_argument("render_svg: no series");

    const auto tx = [&](double x) { return plot.log2_x ? std::log2(x) : x; };
    double x_lo = 0.0, x_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
    bool first = true;
    for (const auto& series : plot.series) {
        for (const auto& point : series.points) {
            const double x = tx(point.x);
            const double y0 = point.y - point.err, y1 = point.y + point.err;
            if (first) {
                x_lo = x_hi = x;
                y_lo = y0;
                y_hi = y1;
                first = false;
            } else {
                x_lo = std::min(x_lo, x);
                x_hi = std::max(x_hi, x);
                y_lo = std::min(y_lo, y0);
                y_hi = std::max(y_hi, y1);
            }
        }
    }
    if (x_hi - x_lo < 1e-12) {
        x_lo -= 1.0;
        x_hi += 1.0;
    }
    if (y_hi - y_lo < 1e-12) {
        y_lo -= 1.0;
        y_hi += 1.0;
    }
    const double x_pad = 0.05 * (x_hi - x_lo), y_pad = 0.08 * (y_hi - y_lo);
    x_lo -= x_pad;
    x_hi += x_pad;
    y_lo -= y_pad;
    y_hi += y_pad;

    const auto px = [&](double x) {
        return kLeft + (tx(x) - x_lo) / (x_hi - x_lo) * (kRight - kLeft);
    };
    const auto py = [&](double y) {
        return kBottom - (y - y_lo) / (y_hi - y_lo) * (kBottom - kTop);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + tick_label(kWidth) +
           "\" height=\"" + tick_label(kHeight) + "\" viewBox=\"0 0 " + tick_label(kWidth) + " " +
           tick_label(kHeight) + "\">\n";
    svg += "<rect width=\"" + tick_label(kWidth) + "\" height=\"" + tick_label(kHeight) +
           "\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num((kLeft + kRight) / 2) +
           "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
           escape_xml(plot.title) + "</text>\n";

    // Ticks and grid.
    std::vector<double> x_ticks;
    if (plot.log2_x) {
        for (int k = static_cast<int>(std::ceil(x_lo)); k <= static_cast<int>(std::floor(x_hi));
             ++k)
            x_ticks.push_back(std::pow(2.0, k));
    } else {
        x_ticks = nice_ticks(x_lo, x_hi, 6);
    }
    const std::vector<double> y_ticks = nice_ticks(y_lo, y_hi, 6);

    for (double t : x_ticks) {
        const double x = px(t);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(x) + "\" y2=\"" +
               num(kBottom) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(kBottom + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
               tick_label(t) + "</text>\n";
    }
    for (double t : y_ticks) {
        const double y = py(t);
        svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kRight) +
               "\" y2=\"" + num(y) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(y + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
               tick_label(t) + "</text>\n";
    }

    // Axes.
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(kRight) +
           "\" y2=\"" + num(kBottom) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(kBottom) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"" + num((kLeft + kRight) / 2) + "\" y=\"" + num(kHeight - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
           escape_xml(plot.x_label) + "</text>\n";
    svg += "<text x=\"18\" y=\"" + num((kTop + kBottom) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "transform=\"rotate(-90 18 " +
           num((kTop + kBottom) / 2) + ")\">" + escape_xml(plot.y_label) + "</text>\n";

    // Series.
    for (std::size_t s = 0; s < plot.series.size(); ++s) {
        const auto& series = plot.series[s];
        const char* color = kPalette[s % 8];
        std::string points;
        for (const auto& point : series.points) {
            if (!points.empty()) points += " ";
            points += num(px(point.x)) + "," + num(py(point.y));
        }
        svg += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        for (const auto& point : series.points) {
            const double x = px(point.x);
            if (point.err > 0.0) {
                const double y0 = py(point.y - point.err), y1 = py(point.y + point.err);
                svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x) +
                       "\" y2=\"" + num(y1) + "\" stroke=\"" + color + "\" stroke-width=\"1\"/>\n";
                svg += "<line x1=\"" + num(x - 4) + "\" y1=\"" + num(y0) + "\" x2=\"" +
                       num(x + 4) + "\" y2=\"" + num(y0) + "\" stroke=\"" + color +
                       "\" stroke-width=\"1\"/>\n";
                svg += "<line x1=\"" + num(x - 4) + "\" y1=\"" + num(y1) + "\" x2=\"" +
                       num(x + 4) + "\" y2=\"" + num(y1) + "\" stroke=\"" + color +
                       "\" stroke-width=\"1\"/>\n";
            }
            svg += "<circle cx=\"" + num(x) + "\" cy=\"" + num(py(point.y)) +
                   "\" r=\"3\" fill=\"" + color + "\"/>\n";
        }
    }

    // Legend.
    const double legend_x = kRight - 110.0;
    double legend_y = kTop + 8.0;
    for (std::size_t s = 0; s < plot.series.size(); ++s) {
        const char* color = kPalette[s % 8];
        svg += "<line x1=\"" + num(legend_x) + "\" y1=\"" + num(legend_y) + "\" x2=\"" +
               num(legend_x + 22) + "\" y2=\"" + num(legend_y) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + num(legend_x + 28) + "\" y=\"" + num(legend_y + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" +
               escape_xml(plot.series[s].label) + "</text>\n";
        legend_y += 16.0;
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace qlearnlab::expt
