// Copyright 2026 The sortnet Authors.
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

// Network diagrams: one horizontal line per wire, comparators as
// vertical bridges grouped into their ASAP layer. Wire 0 is drawn at the
// bottom unless `flip` is set.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sortnet/network.hpp"
#include "sortnet/schedule.hpp"

namespace sortnet {

inline constexpr std::size_t kMaxDiagramWidth = 64;

enum class DiagramFormat { ascii, svg };

struct DiagramOptions {
  /// Draw wire 0 at the top instead of the bottom.
  bool flip = false;
  /// Number the layer-sorter, tetrad, and merge blocks 1..5.
  bool block_labels = true;
  /// Colour bridges by phase tag (SVG only).
  bool color = true;
};

/// Block number printed next to a tagged block, if it has one.
constexpr std::optional<int> block_label(PhaseTag tag) {
  switch (tag) {
    case PhaseTag::layer1: return 1;
    case PhaseTag::layer3: return 2;
    case PhaseTag::tetradA: return 3;
    case PhaseTag::tetradB: return 4;
    case PhaseTag::merge: return 5;
    default: return std::nullopt;
  }
}

/// Column placement shared by both renderers.
struct DiagramLayout {
  LayeredSchedule schedule;
  /// Global column of each comparator.
  std::vector<std::size_t> column_of;
  /// First column and column count of each layer (index 0 = layer 1).
  std::vector<std::size_t> layer_first_column;
  std::vector<std::size_t> layer_columns;
  std::size_t columns = 0;
  /// Layer after which the approximate phase ends, when tags say so.
  std::optional<std::size_t> separator_after_layer;
};

/// Within a layer, bridges are taken by ascending (low, high) and each goes
/// to the leftmost sub-column where its span overlaps no other bridge.
inline DiagramLayout layout_diagram(const Network& net) {
  DiagramLayout L;
  L.schedule = asap_schedule(net);
  L.column_of.assign(net.size(), 0);
  const auto layers = L.schedule.layers();
  std::size_t next = 0;
  for (const auto& members : layers) {
    std::vector<std::size_t> order = members;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::pair(net[a].low, net[a].high) < std::pair(net[b].low, net[b].high);
    });
    std::vector<std::vector<std::size_t>> sub;
    for (std::size_t i : order) {
      std::size_t s = 0;
      for (; s < sub.size(); ++s) {
        const bool clash = std::any_of(sub[s].begin(), sub[s].end(), [&](std::size_t j) {
          return !(net[i].high < net[j].low || net[j].high < net[i].low);
        });
        if (!clash) break;
      }
      if (s == sub.size()) sub.emplace_back();
      sub[s].push_back(i);
      L.column_of[i] = next + s;
    }
    L.layer_first_column.push_back(next);
    L.layer_columns.push_back(sub.size());
    next += sub.size();
  }
  L.columns = next;

  std::size_t approx_end = 0;
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (net[i].tag == PhaseTag::approx) {
      approx_end = std::max(approx_end, L.schedule.layer_of[i]);
    }
  }
  if (approx_end > 0 && approx_end < L.schedule.depth) {
    L.separator_after_layer = approx_end;
  }
  return L;
}

namespace detail {

inline void check_diagram_width(const Network& net) {
  if (net.width() > kMaxDiagramWidth) {
    throw network_error("diagram width " + std::to_string(net.width()) +
                        " exceeds " + std::to_string(kMaxDiagramWidth));
  }
}

/// First comparator column of each labelled block, by label 1..5.
inline std::vector<std::pair<int, std::size_t>> block_starts(const Network& net,
                                                             const DiagramLayout& L) {
  std::vector<std::pair<int, std::size_t>> out;
  for (PhaseTag t : kAllPhaseTags) {
    const auto label = block_label(t);
    if (!label) continue;
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < net.size(); ++i) {
      if (net[i].tag == t) first = std::min(first.value_or(L.column_of[i]), L.column_of[i]);
    }
    if (first) out.emplace_back(*label, *first);
  }
  return out;
}

inline std::string_view tag_color(std::optional<PhaseTag> tag) {
  if (!tag) return "#000000";
  switch (*tag) {
    case PhaseTag::approx: return "#555555";
    case PhaseTag::layer1: return "#1f77b4";
    case PhaseTag::layer3: return "#2ca02c";
    case PhaseTag::pairs: return "#9467bd";
    case PhaseTag::pairs2: return "#8c564b";
    case PhaseTag::tetradA: return "#d62728";
    case PhaseTag::tetradB: return "#ff7f0e";
    case PhaseTag::merge: return "#e377c2";
    case PhaseTag::final: return "#17becf";
  }
  return "#000000";
}

}  // namespace detail

/// ASCII rendering. First line: block labels (if any); second: layer
/// numbers above each layer's first column; then wire and gap rows.
inline std::string render_ascii(const Network& net, const DiagramOptions& opts = {}) {
  detail::check_diagram_width(net);
  const DiagramLayout L = layout_diagram(net);
  const std::size_t width = net.width();

  // Character x-offset of every column; layers are separated by one '-'
  // and the approximate phase is closed by a ':' column.
  std::vector<std::size_t> xcol(L.columns, 0);
  std::vector<std::size_t> layer_x(L.layer_first_column.size(), 0);
  std::optional<std::size_t> sep_x;
  std::size_t x = 1;
  for (std::size_t l = 0; l < L.layer_first_column.size(); ++l) {
    layer_x[l] = x;
    for (std::size_t c = 0; c < L.layer_columns[l]; ++c) {
      xcol[L.layer_first_column[l] + c] = x;
      x += 3;
    }
    x += 1;
    if (L.separator_after_layer && *L.separator_after_layer == l + 1) {
      sep_x = x;
      x += 2;
    }
  }
  const std::size_t line_len = x;

  const std::size_t rows = 2 * width - 1;
  auto row_of_wire = [&](std::size_t w) { return opts.flip ? 2 * w : 2 * (width - 1 - w); };
  std::vector<std::string> grid(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    grid[r].assign(line_len, r % 2 == 0 ? '-' : ' ');
  }
  if (sep_x) {
    for (auto& row : grid) row[*sep_x] = ':';
  }
  for (std::size_t i = 0; i < net.size(); ++i) {
    const std::size_t cx = xcol[L.column_of[i]] + 1;
    const std::size_t r0 = std::min(row_of_wire(net[i].low), row_of_wire(net[i].high));
    const std::size_t r1 = std::max(row_of_wire(net[i].low), row_of_wire(net[i].high));
    for (std::size_t r = r0; r <= r1; ++r) grid[r][cx] = '|';
    grid[r0][cx] = 'o';
    grid[r1][cx] = 'o';
  }

  std::ostringstream os;
  const std::string pad(4, ' ');
  if (opts.block_labels) {
    const auto starts = detail::block_starts(net, L);
    if (!starts.empty()) {
      std::string labels(line_len, ' ');
      for (auto [label, col] : starts) {
        std::size_t at = xcol[col] + 1;
        while (at < labels.size() && labels[at] != ' ') ++at;
        if (at >= labels.size()) labels.push_back(' '), at = labels.size() - 1;
        labels[at] = static_cast<char>('0' + label);
      }
      while (!labels.empty() && labels.back() == ' ') labels.pop_back();
      os << pad << labels << '\n';
    }
  }
  std::string header(line_len + 2, ' ');
  for (std::size_t l = 0; l < layer_x.size(); ++l) {
    const std::string n = std::to_string(l + 1);
    header.replace(layer_x[l] + 1, n.size(), n);
  }
  while (!header.empty() && header.back() == ' ') header.pop_back();
  os << pad << header << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    std::string prefix(4, ' ');
    if (r % 2 == 0) {
      const std::size_t w = opts.flip ? r / 2 : width - 1 - r / 2;
      const std::string n = std::to_string(w);
      prefix.replace(3 - n.size(), n.size(), n);
    }
    std::string line = grid[r];
    if (r % 2 == 1) {
      while (!line.empty() && line.back() == ' ') line.pop_back();
    }
    os << prefix << line << '\n';
  }
  return os.str();
}

/// SVG 1.1 rendering. Each layer is a <g class="layer" data-layer="k">
/// holding one <g class="bridge"> per comparator.
inline std::string render_svg(const Network& net, const DiagramOptions& opts = {}) {
  detail::check_diagram_width(net);
  const DiagramLayout L = layout_diagram(net);
  const std::size_t width = net.width();
  constexpr int kMargin = 40, kCol = 18, kLayerGap = 12, kSepGap = 16, kRow = 20;

  std::vector<int> xcol(L.columns, 0);
  std::optional<int> sep_x;
  int x = kMargin;
  for (std::size_t l = 0; l < L.layer_first_column.size(); ++l) {
    for (std::size_t c = 0; c < L.layer_columns[l]; ++c) {
      xcol[L.layer_first_column[l] + c] = x;
      x += kCol;
    }
    x += kLayerGap;
    if (L.separator_after_layer && *L.separator_after_layer == l + 1) {
      sep_x = x - kLayerGap / 2 + kSepGap / 2;
      x += kSepGap;
    }
  }
  const int total_w = x + kMargin / 2;
  const int top = 30;
  auto y_of = [&](std::size_t w) {
    const std::size_t row = opts.flip ? w : width - 1 - w;
    return top + static_cast<int>(row) * kRow;
  };
  const int total_h = y_of(opts.flip ? width - 1 : 0) + kRow + 10;
  const int bottom = top + static_cast<int>(width - 1) * kRow;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << total_w
     << "\" height=\"" << total_h << "\" viewBox=\"0 0 " << total_w << ' ' << total_h
     << "\">\n";
  os << "  <g class=\"wires\" stroke=\"#000000\" stroke-width=\"1\">\n";
  for (std::size_t w = 0; w < width; ++w) {
    os << "    <line class=\"wire\" x1=\"" << kMargin - 12 << "\" y1=\"" << y_of(w)
       << "\" x2=\"" << x << "\" y2=\"" << y_of(w) << "\"/>\n";
  }
  os << "  </g>\n";
  os << "  <g class=\"wire-labels\" font-family=\"monospace\" font-size=\"10\" "
        "text-anchor=\"end\">\n";
  for (std::size_t w = 0; w < width; ++w) {
    os << "    <text x=\"" << kMargin - 16 << "\" y=\"" << y_of(w) + 3 << "\">" << w
       << "</text>\n";
  }
  os << "  </g>\n";

  const auto layers = L.schedule.layers();
  for (std::size_t l = 0; l < layers.size(); ++l) {
    os << "  <g class=\"layer\" data-layer=\"" << l + 1 << "\">\n";
    std::vector<std::size_t> members = layers[l];
    std::sort(members.begin(), members.end());
    for (std::size_t i : members) {
      const auto& c = net[i];
      const int cx = xcol[L.column_of[i]] + kCol / 2;
      const std::string_view color = opts.color ? detail::tag_color(c.tag) : "#000000";
      os << "    <g class=\"bridge\"";
      if (c.tag) os << " data-tag=\"" << to_string(*c.tag) << '"';
      os << " stroke=\"" << color << "\" fill=\"" << color << "\">";
      os << "<line x1=\"" << cx << "\" y1=\"" << y_of(c.low) << "\" x2=\"" << cx
         << "\" y2=\"" << y_of(c.high) << "\" stroke-width=\"2\"/>";
      os << "<circle cx=\"" << cx << "\" cy=\"" << y_of(c.low) << "\" r=\"3\"/>";
      os << "<circle cx=\"" << cx << "\" cy=\"" << y_of(c.high) << "\" r=\"3\"/>";
      os << "</g>\n";
    }
    os << "  </g>\n";
  }

  if (sep_x) {
    os << "  <line class=\"separator\" data-after-layer=\"" << *L.separator_after_layer
       << "\" x1=\"" << *sep_x << "\" y1=\"" << top - 12 << "\" x2=\"" << *sep_x
       << "\" y2=\"" << bottom + 12
       << "\" stroke=\"#000000\" stroke-width=\"1.5\" stroke-dasharray=\"4,3\"/>\n";
  }
  if (opts.block_labels) {
    std::vector<std::size_t> used;
    for (auto [label, col] : detail::block_starts(net, L)) {
      // Blocks starting in the same column stack their labels sideways.
      const auto stacked = static_cast<int>(std::count(used.begin(), used.end(), col));
      used.push_back(col);
      os << "  <text class=\"block-label\" x=\"" << xcol[col] + kCol / 2 + 10 * stacked
         << "\" y=\""
         << top - 16 << "\" font-family=\"sans-serif\" font-size=\"12\" "
            "text-anchor=\"middle\">"
         << label << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

inline std::string render_diagram(const Network& net, DiagramFormat format,
                                  const DiagramOptions& opts = {}) {
  return format == DiagramFormat::ascii ? render_ascii(net, opts) : render_svg(net, opts);
}

}  // namespace sortnet
