// Copyright 2026 The fairanneal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fairanneal/csv.hpp"

namespace fairanneal {

class EmptyPlotError : public SchemaError {
 public:
  using SchemaError::SchemaError;
  const char* kind() const noexcept override { return "empty-plot"; }
};

struct PlotOptions {
  /// Horizontal dashed lines, e.g. {1.0 / 3, 0.5}.
  std::vector<double> reference_lines;
  /// Also draw P_GS per panel.
  bool show_total = false;
  std::string title;
  int panel_width = 480;
  int panel_height = 340;
};

/// One panel per (protocol, beta) in first-appearance order, two panels per
/// row: probability against log tau, one polyline per config_label.
std::string render_svg(const std::vector<CsvRow>& rows, const PlotOptions& options = {});

void plot_csv(const std::filesystem::path& csv, const std::filesystem::path& svg, const PlotOptions& options = {});

}  // namespace fairanneal
