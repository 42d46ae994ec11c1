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

#include "fairanneal/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>

#include <fmt/format.h>

namespace fairanneal {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (tau, probability)
};

struct Panel {
  std::string protocol;
  std::optional<double> beta;
  std::vector<Series> series;
  Series total{"P_GS", {}};

  std::string title() const {
    std::string name = protocol == "qa" ? "QA" : protocol == "sbo" ? "SBO" : protocol == "sboqa" ? "SBO+QA" : protocol;
    if (beta) name += fmt::format(" (beta = {})", format_number(*beta));
    return name;
  }

  Series& series_for(const std::string& label) {
    for (Series& s : series) {
      if (s.label == label) return s;
    }
    series.push_back({label, {}});
    return series.back();
  }
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color, const char* dash,
                     const auto& x_of, const auto& y_of) {
  std::string points;
  for (const auto& [tau, p] : pts) points += fmt::format("{:.2f},{:.2f} ", x_of(tau), y_of(p));
  if (!points.empty()) points.pop_back();
  return fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.8\"{} points=\"{}\"/>\n", color, dash,
                     points);
}

void render_panel(std::string& svg, const Panel& panel, double x0, double y0, const PlotOptions& o) {
  const double left = x0 + 60, right = x0 + o.panel_width - 20;
  const double top = y0 + 36, bottom = y0 + o.panel_height - 46;

  double tau_min = INFINITY, tau_max = -INFINITY, p_max = 0.0;
  auto extend = [&](const Series& s) {
    for (const auto& [tau, p] : s.points) {
      tau_min = std::min(tau_min, tau);
      tau_max = std::max(tau_max, tau);
      p_max = std::max(p_max, p);
    }
  };
  for (const Series& s : panel.series) extend(s);
  if (o.show_total) extend(panel.total);
  for (double r : o.reference_lines) p_max = std::max(p_max, r);
  const double y_top = std::max(0.1, std::ceil(p_max * 10.0 - 1e-9) / 10.0);
  double lx0 = std::floor(std::log10(tau_min)), lx1 = std::ceil(std::log10(tau_max));
  if (lx1 <= lx0) lx1 = lx0 + 1;

  auto x_of = [&](double tau) { return left + (std::log10(tau) - lx0) / (lx1 - lx0) * (right - left); };
  auto y_of = [&](double p) { return bottom - p / y_top * (bottom - top); };

  svg += fmt::format("<g>\n<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
                     (left + right) / 2, y0 + 22, escape(panel.title()));
  svg += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" stroke=\"#000\"/>\n",
                     left, top, right - left, bottom - top);
  for (int d = static_cast<int>(lx0); d <= static_cast<int>(lx1); ++d) {
    const double x = x_of(std::pow(10.0, d));
    svg += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"#000\"/>\n", x, bottom,
                       bottom + 5);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" font-size=\"12\">10^{}</text>\n", x,
                       bottom + 19, d);
  }
  for (int k = 0; k <= 4; ++k) {
    const double p = y_top * k / 4.0;
    const double y = y_of(p);
    svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#000\"/>\n", left - 5, y,
                       left, y);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\" font-size=\"12\">{:.3g}</text>\n", left - 8,
                       y + 4, p);
  }
  svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" font-size=\"13\">tau</text>\n",
                     (left + right) / 2, bottom + 36);
  svg += fmt::format(
      "<text x=\"{0:.2f}\" y=\"{1:.2f}\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 {0:.2f} "
      "{1:.2f})\">probability</text>\n",
      x0 + 18, (top + bottom) / 2);

  for (double r : o.reference_lines) {
    svg += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{2:.2f}\" x2=\"{1:.2f}\" y2=\"{2:.2f}\" stroke=\"#888\" stroke-dasharray=\"5,4\"/>\n",
        left, right, y_of(r));
  }
  std::size_t color = 0;
  for (const Series& s : panel.series) {
    svg += polyline(s.points, kPalette[color % kPalette.size()], "", x_of, y_of);
    ++color;
  }
  if (o.show_total) svg += polyline(panel.total.points, "#000", " stroke-dasharray=\"2,3\"", x_of, y_of);

  // legend
  double ly = top + 16;
  color = 0;
  auto legend = [&](const std::string& label, const char* stroke, const char* dash) {
    svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" stroke-width=\"1.8\"{}/>\n",
                       right - 110, ly - 4, right - 88, ly - 4, stroke, dash);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"12\" font-family=\"monospace\">{}</text>\n",
                       right - 82, ly, escape(label));
    ly += 16;
  };
  for (const Series& s : panel.series) legend(s.label, kPalette[color++ % kPalette.size()], "");
  if (o.show_total) legend("P_GS", "#000", " stroke-dasharray=\"2,3\"");
  svg += "</g>\n";
}

}  // namespace

std::string render_svg(const std::vector<CsvRow>& rows, const PlotOptions& options) {
  std::vector<Panel> panels;
  auto panel_for = [&](const CsvRow& row) -> Panel& {
    for (Panel& p : panels) {
      if (p.protocol == row.protocol && p.beta == row.beta) return p;
    }
    panels.push_back(Panel{row.protocol, row.beta, {}, {"P_GS", {}}});
    return panels.back();
  };
  for (const CsvRow& row : rows) {
    if (row.is_error() || !row.probability) continue;
    if (!(row.tau > 0.0)) throw SchemaError("tau must be positive for a log axis");
    Panel& panel = panel_for(row);
    panel.series_for(row.config_label).points.emplace_back(row.tau, *row.probability);
    if (row.p_gs && (panel.total.points.empty() || panel.total.points.back().first != row.tau)) {
      panel.total.points.emplace_back(row.tau, *row.p_gs);
    }
  }
  if (panels.empty()) throw EmptyPlotError("nothing to plot: no data rows");

  const int columns = panels.size() > 1 ? 2 : 1;
  const int rows_of_panels = static_cast<int>((panels.size() + columns - 1) / columns);
  const int header = options.title.empty() ? 0 : 30;
  const int width = columns * options.panel_width;
  const int height = rows_of_panels * options.panel_height + header;

  std::string svg = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
      "font-family=\"sans-serif\">\n<rect width=\"{0}\" height=\"{1}\" fill=\"#fff\"/>\n",
      width, height);
  if (header) {
    svg += fmt::format("<text x=\"{}\" y=\"20\" text-anchor=\"middle\" font-size=\"16\">{}</text>\n", width / 2,
                       escape(options.title));
  }
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const double x0 = static_cast<double>(k % columns) * options.panel_width;
    const double y0 = header + static_cast<double>(k / columns) * options.panel_height;
    render_panel(svg, panels[k], x0, y0, options);
  }
  svg += "</svg>\n";
  return svg;
}

void plot_csv(const std::filesystem::path& csv, const std::filesystem::path& svg, const PlotOptions& options) {
  const std::string doc = render_svg(read_csv(csv), options);
  std::ofstream out(svg, std::ios::binary);
  if (!out) throw SchemaError("cannot write " + svg.string());
  out << doc;
}

}  // namespace fairanneal
