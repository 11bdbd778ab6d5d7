// Copyright 2026 The spinsbs Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/**
 * @file
 * Minimal static SVG line charts for a quick look at a run.
 */
#pragma once

#include <string>
#include <vector>

namespace spinsbs::cli {

struct LineSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct LineChart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<LineSeries> series;
    int width = 640;
    int height = 400;
};

/// Complete SVG document. Non-finite points are skipped.
[[nodiscard]] std::string render_svg(const LineChart &chart);

} // namespace spinsbs::cli
