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

#include <sstream>
#include <string>

#include "sortnet/poset.hpp"

namespace sortnet {

/// Hasse diagram of `p` as a DOT digraph. Nodes are named by 1-based line
/// numbers (label + 1); edges run from covered to covering element and the
/// graph is laid out bottom-to-top, so maxima are drawn on top.
inline std::string render_poset_dot(const Poset& p, std::string_view name = "poset") {
  const auto edges = hasse_edges(p);
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << "  n" << p.label(i) + 1 << " [label=\"" << p.label(i) + 1 << "\"];\n";
  }
  for (auto [lo, hi] : edges) {
    os << "  n" << p.label(lo) + 1 << " -> n" << p.label(hi) + 1 << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace sortnet
