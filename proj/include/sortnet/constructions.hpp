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

// The 16-input sorters of Green (60 comparators, depth 10) and van Voorhis
// (61 comparators, depth 9), assembled block by block, plus the hypercube
// approximate-sorting phase they share and a Batcher baseline.
//
// Wire k here is line k+1 of the usual drawing; the maximum ends on wire 15.
// After the cube phase wire w holds the element at cube vertex w, so cube
// layer r is the set of wires with popcount r.

#include <array>
#include <bit>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "sortnet/network.hpp"

namespace sortnet {

inline constexpr std::size_t kWidth16 = 16;

/// Named wire sets of the 16-wire cube after the approximate phase.
namespace cube16 {

/// Popcount-1 wires (cube layer I).
inline constexpr std::array<std::size_t, 4> kLayer1 = {1, 2, 4, 8};
/// Popcount-3 wires (cube layer III).
inline constexpr std::array<std::size_t, 4> kLayer3 = {7, 11, 13, 14};
/// Popcount-2 wires (middle layer).
inline constexpr std::array<std::size_t, 6> kMiddle = {3, 5, 6, 9, 10, 12};
/// Candidates for the six medial ranks: the middle layer, plus wire 7
/// (minimum of layer III once sorted) and wire 8 (maximum of layer I).
inline constexpr std::array<std::size_t, 8> kM = {3, 5, 6, 7, 8, 9, 10, 12};

/// Winners and losers of the first M-phase comparisons.
inline constexpr std::array<std::size_t, 3> kPairWinners = {9, 10, 12};
inline constexpr std::array<std::size_t, 3> kPairLosers = {3, 5, 6};

/// The two tetrads M splits into.
inline constexpr std::array<std::size_t, 4> kUpperTetrad = {7, 9, 10, 12};
inline constexpr std::array<std::size_t, 4> kLowerTetrad = {3, 5, 6, 8};

inline constexpr std::size_t layer_of_wire(std::size_t wire) {
  return static_cast<std::size_t>(std::popcount(wire));
}

}  // namespace cube16

/// Hypercube approximate sorter on 2^n wires. Round k compares wires i and
/// i + 2^k for every i with bit k clear. `dimension_order` lists the bits
/// in the order their rounds run; empty means 0, 1, ..., n-1.
inline Network hypercube_phase(std::size_t n,
                               std::span<const std::size_t> dimension_order = {}) {
  if (n == 0) throw network_error("hypercube_phase needs n >= 1");
  if (n > 20) throw network_error("hypercube_phase: n too large");
  std::vector<std::size_t> order(dimension_order.begin(), dimension_order.end());
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  std::vector<bool> seen(n, false);
  if (order.size() != n) throw network_error("dimension order must list n bits");
  for (std::size_t d : order) {
    if (d >= n || seen[d]) throw network_error("dimension order must be a permutation");
    seen[d] = true;
  }

  const std::size_t width = std::size_t{1} << n;
  Network net(width);
  for (std::size_t d : order) {
    const std::size_t step = std::size_t{1} << d;
    for (std::size_t i = 0; i < width; ++i) {
      if ((i & step) == 0) net.add(i, i + step, PhaseTag::approx);
    }
  }
  return net;
}

/// Five-comparator, depth-3 sorter of four inputs. After its first four
/// comparators wire 0 already holds the minimum and wire 3 the maximum.
inline Network sorter4(std::optional<PhaseTag> tag = std::nullopt) {
  Network net(4);
  net.add(0, 1, tag).add(2, 3, tag).add(0, 2, tag).add(1, 3, tag).add(1, 2, tag);
  return net;
}

namespace detail {

inline void append_sorter4(Network& host, std::span<const std::size_t> wires,
                           PhaseTag tag) {
  for (const Comparator& c : embed(sorter4(tag), wires, host.width())) {
    host.add(c);
  }
}

/// Shared first 45 comparators: cube phase, layer I/III sorts, and the
/// pairs (3,12), (5,10), (6,9) that seed the M phase.
inline Network common_prefix16() {
  Network net = hypercube_phase(4);
  append_sorter4(net, cube16::kLayer1, PhaseTag::layer1);
  append_sorter4(net, cube16::kLayer3, PhaseTag::layer3);
  net.add(3, 12, PhaseTag::pairs).add(5, 10, PhaseTag::pairs).add(6, 9, PhaseTag::pairs);
  return net;
}

inline void append_final16(Network& net) {
  // min(M) against the third smallest of layer I, max(M) against the third
  // largest of layer III.
  net.add(3, 4, PhaseTag::final).add(11, 12, PhaseTag::final);
}

inline Network green16_with_merge(bool pairwise_first) {
  Network net = common_prefix16();
  append_sorter4(net, cube16::kUpperTetrad, PhaseTag::tetradA);
  append_sorter4(net, cube16::kLowerTetrad, PhaseTag::tetradB);
  // The middle four of M sit on wires 6..9; wires 7 and 8 finish a layer
  // earlier than 6 and 9.
  if (pairwise_first) {
    net.add(6, 7, PhaseTag::merge).add(7, 8, PhaseTag::merge).add(8, 9, PhaseTag::merge);
  } else {
    net.add(7, 8, PhaseTag::merge).add(6, 7, PhaseTag::merge).add(8, 9, PhaseTag::merge);
  }
  append_final16(net);
  return net;
}

}  // namespace detail

/// Green's 16-sorter: 60 comparators, depth 10.
inline Network green16() { return detail::green16_with_merge(false); }

/// Green's network with the merge comparators in the order (6,7), (7,8),
/// (8,9). Still sorts, but costs extra depth.
inline Network green16_naive_merge() { return detail::green16_with_merge(true); }

/// van Voorhis' 16-sorter: 61 comparators, depth 9.
inline Network van_voorhis16() {
  Network net = detail::common_prefix16();
  net.add(5, 12, PhaseTag::pairs2).add(6, 10, PhaseTag::pairs2).add(3, 9, PhaseTag::pairs2);
  detail::append_sorter4(net, cube16::kUpperTetrad, PhaseTag::tetradA);
  detail::append_sorter4(net, cube16::kLowerTetrad, PhaseTag::tetradB);
  net.add(7, 8, PhaseTag::merge);
  detail::append_final16(net);
  return net;
}

/// Batcher's odd-even merge sort for n in {2, 4, 8, 16, 32}.
inline Network batcher_sorter(std::size_t n) {
  if (n < 2 || n > 32 || !std::has_single_bit(n)) {
    throw network_error("batcher_sorter supports n in {2, 4, 8, 16, 32}, got " +
                        std::to_string(n));
  }
  Network net(n);
  for (std::size_t p = 1; p < n; p *= 2) {
    for (std::size_t k = p; k >= 1; k /= 2) {
      for (std::size_t j = k % p; j + k < n; j += 2 * k) {
        for (std::size_t i = 0; i < k && i + j + k < n; ++i) {
          if ((i + j) / (2 * p) == (i + j + k) / (2 * p)) {
            net.add(i + j, i + j + k);
          }
        }
      }
    }
  }
  return net;
}

/// Cube phase, layer sorts, any sorter of the eight M wires, and the two
/// closing comparators. With a correct `m_sorter` the result sorts 16
/// inputs whatever method orders M.
inline Network strategy16(const Network& m_sorter) {
  if (m_sorter.width() != cube16::kM.size()) {
    throw network_error("M sorter must have width 8");
  }
  Network net = hypercube_phase(4);
  detail::append_sorter4(net, cube16::kLayer1, PhaseTag::layer1);
  detail::append_sorter4(net, cube16::kLayer3, PhaseTag::layer3);
  for (const Comparator& c : embed(m_sorter, cube16::kM, kWidth16)) net.add(c);
  detail::append_final16(net);
  return net;
}

}  // namespace sortnet
