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

#include <algorithm>
#include <cstddef>
#include <vector>

#include "sortnet/network.hpp"

namespace sortnet {

/// Parallel layering of a network. `layer_of[i]` is the 1-based layer of
/// comparator i.
struct LayeredSchedule {
  std::vector<std::size_t> layer_of;
  std::size_t depth = 0;

  /// Comparator positions grouped by layer; entry 0 is layer 1.
  std::vector<std::vector<std::size_t>> layers() const {
    std::vector<std::vector<std::size_t>> out(depth);
    for (std::size_t i = 0; i < layer_of.size(); ++i) {
      out[layer_of[i] - 1].push_back(i);
    }
    return out;
  }
};

/// Places every comparator at the earliest layer after the last comparator
/// touching either of its wires.
inline LayeredSchedule asap_schedule(const Network& net) {
  LayeredSchedule s;
  s.layer_of.reserve(net.size());
  std::vector<std::size_t> ready(net.width(), 0);
  for (const Comparator& c : net) {
    const std::size_t layer = std::max(ready[c.low], ready[c.high]) + 1;
    ready[c.low] = ready[c.high] = layer;
    s.layer_of.push_back(layer);
    s.depth = std::max(s.depth, layer);
  }
  return s;
}

inline std::size_t depth(const Network& net) { return asap_schedule(net).depth; }

/// Checks the structural invariants: no shared wire inside a layer, and
/// wire-sharing comparators keep their sequence order across layers.
inline bool is_valid_schedule(const Network& net, const LayeredSchedule& s) {
  if (s.layer_of.size() != net.size()) return false;
  std::size_t max_layer = 0;
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (s.layer_of[i] == 0) return false;
    max_layer = std::max(max_layer, s.layer_of[i]);
    for (std::size_t j = 0; j < i; ++j) {
      const Comparator& a = net[j];
      const Comparator& b = net[i];
      const bool shares = a.low == b.low || a.low == b.high ||
                          a.high == b.low || a.high == b.high;
      if (shares && s.layer_of[j] >= s.layer_of[i]) return false;
    }
  }
  return max_layer == s.depth;
}

/// Length of the longest chain of comparators in which each consecutive
/// pair shares a wire. Quadratic; used as an independent check on depth.
inline std::size_t longest_dependency_chain(const Network& net) {
  std::vector<std::size_t> chain(net.size(), 1);
  std::size_t best = 0;
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Comparator& a = net[j];
      const Comparator& b = net[i];
      if (a.low == b.low || a.low == b.high || a.high == b.low ||
          a.high == b.high) {
        chain[i] = std::max(chain[i], chain[j] + 1);
      }
    }
    best = std::max(best, chain[i]);
  }
  return best;
}

}  // namespace sortnet
