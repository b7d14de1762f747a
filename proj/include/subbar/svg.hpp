#pragma once

// Deterministic SVG barcode diagrams: one horizontal line per bar, stacked
// by barcode then (dimension, birth, death, id); infinite bars run to the
// right margin and end in an arrowhead; matched pairs between the first
// two barcodes get dashed vertical connectors at the shared birth column
// and, when both deaths are finite, at the shared death column. Identical
// inputs yield byte-identical output.

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "subbar/barcode.hpp"
#include "subbar/io.hpp"
#include "subbar/matching.hpp"

namespace subbar {
namespace detail {

inline std::string svg_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace detail

inline std::string render_svg(const std::vector<const barcode*>& barcodes,
                              const std::vector<id_pair>& links = {}) {
  const double width = 640;
  const double ml = 40, mr = 40, mt = 20, mb = 34;
  const double row_h = 18, group_gap = 10;

  // Rows in display order, remembering each bar's center line.
  struct row_t {
    const bar* b;
    double y;
  };
  std::vector<row_t> rows;
  std::vector<std::map<bar_id, double>> y_of(barcodes.size());
  double cursor = mt;
  for (std::size_t bi = 0; bi < barcodes.size(); ++bi) {
    if (bi > 0) cursor += group_gap;
    for (const bar* x : detail::display_order(*barcodes[bi])) {
      rows.push_back({x, cursor + row_h / 2});
      y_of[bi][x->id] = cursor + row_h / 2;
      cursor += row_h;
    }
  }
  const double height = (rows.empty() ? mt + row_h : cursor) + mb;

  value_t vmin = 0, vmax = 1;
  bool seen = false;
  for (const row_t& r : rows) {
    const interval& iv = r.b->iv;
    vmin = seen ? std::min(vmin, iv.birth) : iv.birth;
    value_t hi = iv.has_infinite_death() ? iv.birth : iv.death;
    vmax = seen ? std::max(vmax, hi) : hi;
    seen = true;
  }
  if (!(vmax > vmin)) vmax = vmin + 1;

  const double plot_w = width - ml - mr;
  auto x_of = [&](value_t v) { return ml + (double(v) - double(vmin)) / (double(vmax) - double(vmin)) * plot_w; };
  const double x_right = ml + plot_w;
  const double axis_y = height - mb + 8;

  std::string svg;
  auto line = [&](const std::string& cls, double x1, double y1, double x2, double y2) {
    svg += "<line class=\"" + cls + "\" x1=\"" + detail::svg_coord(x1) + "\" y1=\"" +
           detail::svg_coord(y1) + "\" x2=\"" + detail::svg_coord(x2) + "\" y2=\"" +
           detail::svg_coord(y2) + "\"/>\n";
  };

  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::svg_coord(width) +
         "\" height=\"" + detail::svg_coord(height) + "\" viewBox=\"0 0 " +
         detail::svg_coord(width) + " " + detail::svg_coord(height) + "\">\n";
  svg +=
      "<style>\n"
      ".bar{stroke:#333;stroke-width:4}\n"
      ".arrow{fill:#333}\n"
      ".dim0{stroke:#1b9e77;fill:#1b9e77}\n"
      ".dim1{stroke:#d95f02;fill:#d95f02}\n"
      ".dim2{stroke:#7570b3;fill:#7570b3}\n"
      ".axis{stroke:#444;stroke-width:1}\n"
      ".tick{font:10px sans-serif;fill:#444}\n"
      ".link{stroke:#888;stroke-width:1;stroke-dasharray:4 3}\n"
      "</style>\n";

  line("axis", ml, axis_y, x_right, axis_y);
  svg += "<text class=\"tick\" x=\"" + detail::svg_coord(ml) + "\" y=\"" +
         detail::svg_coord(axis_y + 12) + "\" text-anchor=\"middle\">" + format_value(vmin) +
         "</text>\n";
  svg += "<text class=\"tick\" x=\"" + detail::svg_coord(x_right) + "\" y=\"" +
         detail::svg_coord(axis_y + 12) + "\" text-anchor=\"middle\">" + format_value(vmax) +
         "</text>\n";

  for (const row_t& r : rows) {
    const interval& iv = r.b->iv;
    std::string cls = "bar dim" + std::to_string(r.b->dim);
    double x1 = x_of(iv.birth);
    double x2 = iv.has_infinite_death() ? x_right : x_of(iv.death);
    line(cls, x1, r.y, x2, r.y);
    if (iv.has_infinite_death()) {
      svg += "<polygon class=\"arrow dim" + std::to_string(r.b->dim) + "\" points=\"" +
             detail::svg_coord(x_right + 9) + "," + detail::svg_coord(r.y) + " " +
             detail::svg_coord(x_right) + "," + detail::svg_coord(r.y - 4.5) + " " +
             detail::svg_coord(x_right) + "," + detail::svg_coord(r.y + 4.5) + "\"/>\n";
    }
  }

  for (const auto& [l, r] : links) {
    const interval& a = barcodes.at(0)->at(l).iv;
    const interval& b = barcodes.at(1)->at(r).iv;
    double ya = y_of.at(0).at(l), yb = y_of.at(1).at(r);
    line("link", x_of(std::max(a.birth, b.birth)), ya, x_of(std::max(a.birth, b.birth)), yb);
    if (!a.has_infinite_death() && !b.has_infinite_death())
      line("link", x_of(std::min(a.death, b.death)), ya, x_of(std::min(a.death, b.death)), yb);
  }

  svg += "</svg>\n";
  return svg;
}

inline std::string render_svg(const barcode& b) {
  return render_svg(std::vector<const barcode*>{&b});
}

}  // namespace subbar
