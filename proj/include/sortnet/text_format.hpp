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

// Plain-text network format:
//
//   width <w>
//   # phase:<tag>        comparators below carry <tag> ("none" clears it)
//   <low> <high>
//   ;                    optional layer separator
//
// Other lines starting with '#' are comments. Blank lines are ignored.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sortnet/network.hpp"

namespace sortnet {

/// Syntax or invariant error while reading the text format.
class parse_error : public network_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : network_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct TextOptions {
  /// Insert ';' between greedy groups of wire-disjoint comparators.
  bool layer_separators = false;
};

inline std::string render_text(const Network& net, const TextOptions& opts = {}) {
  std::ostringstream os;
  os << "width " << net.width() << '\n';
  std::optional<PhaseTag> current;
  std::vector<bool> busy(net.width(), false);
  for (const Comparator& c : net) {
    if (opts.layer_separators) {
      if (busy[c.low] || busy[c.high]) {
        os << ";\n";
        std::fill(busy.begin(), busy.end(), false);
      }
      busy[c.low] = busy[c.high] = true;
    }
    if (c.tag != current) {
      os << "# phase:" << (c.tag ? to_string(*c.tag) : std::string_view("none")) << '\n';
      current = c.tag;
    }
    os << c.low << ' ' << c.high << '\n';
  }
  return os.str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

inline std::optional<std::size_t> to_index(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

/// Parses the text format. Rejects degenerate or out-of-range comparators,
/// unknown phase tags, and separators that do not describe a valid layering
/// (two comparators of one group sharing a wire).
inline Network parse_text(std::string_view text) {
  std::optional<Network> net;
  // Current tag as an index into kAllPhaseTags; -1 for none.
  int tag = -1;
  // Per group: wire -> line of the comparator using it (0 = free).
  std::vector<std::size_t> busy;
  std::size_t line_no = 0;
  bool saw_separator = false;
  std::optional<std::size_t> clash_line;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::string_view line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string_view body = detail::trim(line.substr(1));
      constexpr std::string_view kPhase = "phase:";
      if (body.substr(0, kPhase.size()) == kPhase) {
        const std::string_view name = detail::trim(body.substr(kPhase.size()));
        if (name == "none") {
          tag = -1;
        } else if (auto t = phase_from_string(name)) {
          tag = static_cast<int>(*t);
        } else {
          throw parse_error(line_no, "unknown phase tag '" + std::string(name) + "'");
        }
      }
      continue;
    }

    const auto fields = detail::split_ws(line);
    if (!net) {
      if (fields.size() != 2 || fields[0] != "width") {
        throw parse_error(line_no, "expected 'width <w>' header");
      }
      const auto w = detail::to_index(fields[1]);
      if (!w || *w == 0) throw parse_error(line_no, "width must be a positive integer");
      net.emplace(*w);
      busy.assign(*w, 0);
      continue;
    }
    if (line == ";") {
      saw_separator = true;
      std::fill(busy.begin(), busy.end(), 0);
      continue;
    }
    if (fields.size() != 2) {
      throw parse_error(line_no, "expected '<low> <high>'");
    }
    const auto low = detail::to_index(fields[0]);
    const auto high = detail::to_index(fields[1]);
    if (!low || !high) throw parse_error(line_no, "wire indices must be integers");
    if (*low >= *high) throw parse_error(line_no, "comparator needs low < high");
    if (*high >= net->width()) throw parse_error(line_no, "wire index out of range");
    if (!clash_line && (busy[*low] || busy[*high])) clash_line = line_no;
    busy[*low] = busy[*high] = line_no;
    net->add(*low, *high,
             tag < 0 ? std::nullopt : std::optional(static_cast<PhaseTag>(tag)));
  }
  if (!net) throw parse_error(line_no, "missing 'width <w>' header");
  // Without separators the comparator order alone defines the network.
  if (saw_separator && clash_line) {
    throw parse_error(*clash_line, "comparator shares a wire within its layer group");
  }
  return *net;
}

}  // namespace sortnet
