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

#pragma once

#include "qlearnlab/expt/sweep.hpp"

#include <string>
#include <vector>

namespace qlearnlab::expt {

struct SeriesPoint {
    double x = 0.0;
    double y = 0.0;
    double err = 0.0;
};

struct Series {
    std::string label;
    std::vector<SeriesPoint> points;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log2_x = false;
    std::vector<Series> series;
};

/// Mean +- stddev curves from a sweep's aggregates.  Axes depend on the
/// probe: subspace probes plot against sub_dim with one curve per resource
/// value, the entropy probe against the cut, the curvature probe against the
/// resource value.
PlotSpec plot_from_sweep(const SweepResult& result, const std::vector<AggregateRow>& rows);

/// Standalone SVG document.  Output depends only on the input, so repeated
/// renders are byte-identical.
std::string render_svg(const PlotSpec& plot);

}  // namespace qlearnlab::expt
