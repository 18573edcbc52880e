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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "sortnet/bitslice.hpp"
#include "sortnet/network.hpp"
#include "sortnet/poset.hpp"

namespace sortnet {

/// Outcome of a sorting check. `counterexample` is empty when the network
/// sorts; otherwise it is the lexicographically least binary input the
/// network leaves unsorted.
struct SortVerdict {
  std::optional<std::vector<std::uint8_t>> counterexample;

  bool sorts() const noexcept { return !counterexample.has_value(); }
  explicit operator bool() const noexcept { return sorts(); }
};

namespace detail {

/// Index of the first input in `chunk` whose output has a 1 directly below
/// a 0, or nullopt.
inline std::optional<std::uint64_t> first_unsorted(const BitsliceSpace& space,
                                                   std::size_t chunk,
                                                   const WireSlices& out) {
  const std::size_t width = space.width();
  const std::uint64_t mask = space.valid_mask();
  for (std::size_t k = 0; k < space.words(); ++k) {
    std::uint64_t bad = 0;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      bad |= out[j][k] & ~out[j + 1][k];
    }
    bad &= mask;
    if (bad) {
      return space.input_index(chunk, k,
                               static_cast<unsigned>(std::countr_zero(bad)));
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Zero-one check of `net`, bit-parallel across all 2^width binary inputs.
inline SortVerdict verify_sorts_binary(const Network& net,
                                       const ExhaustiveOptions& opts = {}) {
  detail::check_cap(net.width(), opts);
  const BitsliceSpace space(net.width());
  const unsigned workers = detail::worker_count(opts, space.chunks());
  std::vector<std::optional<std::uint64_t>> found(workers);

  detail::partition_chunks(
      space.chunks(), workers,
      [&](unsigned worker, std::size_t begin, std::size_t end) {
        WireSlices slices(net.width(), space.words());
        for (std::size_t chunk = begin; chunk < end; ++chunk) {
          evaluate_chunk(net, space, chunk, slices);
          if (auto hit = detail::first_unsorted(space, chunk, slices)) {
            found[worker] = hit;
            return;
          }
        }
      });

  // Workers own ascending chunk ranges, so the first hit in worker order is
  // the least failing index.
  for (const auto& hit : found) {
    if (hit) return {decode_input(*hit, net.width())};
  }
  return {};
}

/// Reference checker: applies the network to one vector at a time.
inline SortVerdict verify_sorts_binary_naive(const Network& net,
                                             const ExhaustiveOptions& opts = {}) {
  detail::check_cap(net.width(), opts);
  const std::uint64_t total = std::uint64_t{1} << net.width();
  for (std::uint64_t x = 0; x < total; ++x) {
    auto out = apply(net, decode_input(x, net.width()));
    if (!std::is_sorted(out.begin(), out.end())) {
      return {decode_input(x, net.width())};
    }
  }
  return {};
}

/// Lifts a failing binary input to a failing permutation of 0..width-1:
/// zeros receive the smallest labels in wire order, ones the largest.
/// Every comparator acts on the permutation exactly as on the thresholded
/// bits, so the permutation fails wherever the binary vector fails.
inline std::vector<std::size_t> counterexample_permutation(
    const Network& net, std::span<const std::uint8_t> bad) {
  if (bad.size() != net.width()) {
    throw network_error("counterexample length does not match network width");
  }
  const std::vector<std::uint8_t> bits(bad.begin(), bad.end());
  const auto out = apply(net, bits);
  if (std::is_sorted(out.begin(), out.end())) {
    throw network_error("the network sorts this input; no witness to lift");
  }
  const auto zeros = static_cast<std::size_t>(
      std::count(bits.begin(), bits.end(), std::uint8_t{0}));
  std::vector<std::size_t> perm(net.width());
  std::size_t next_zero = 0;
  std::size_t next_one = zeros;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    perm[j] = bits[j] ? next_one++ : next_zero++;
  }
  return perm;
}

/// Infers which output wires are ordered for every input. leq(a, b) holds
/// iff no binary input leaves a 1 on wire a and a 0 on wire b. Throws if
/// two distinct wires are forced equal.
inline Poset infer_poset(const Network& net, const ExhaustiveOptions& opts = {}) {
  detail::check_cap(net.width(), opts);
  const std::size_t width = net.width();
  const BitsliceSpace space(width);
  const unsigned workers = detail::worker_count(opts, space.chunks());
  const std::uint64_t mask = space.valid_mask();
  // violated[w][a * width + b]: some input puts 1 on a and 0 on b.
  std::vector<std::vector<std::uint8_t>> violated(
      workers, std::vector<std::uint8_t>(width * width, 0));

  detail::partition_chunks(
      space.chunks(), workers,
      [&](unsigned worker, std::size_t begin, std::size_t end) {
        auto& seen = violated[worker];
        WireSlices slices(width, space.words());
        for (std::size_t chunk = begin; chunk < end; ++chunk) {
          evaluate_chunk(net, space, chunk, slices);
          for (std::size_t a = 0; a < width; ++a) {
            for (std::size_t b = 0; b < width; ++b) {
              if (a == b || seen[a * width + b]) continue;
              const auto sa = slices[a];
              const auto sb = slices[b];
              for (std::size_t k = 0; k < space.words(); ++k) {
                if ((sa[k] & ~sb[k]) & mask) {
                  seen[a * width + b] = 1;
                  break;
                }
              }
            }
          }
        }
      });

  Poset p(width);
  for (std::size_t a = 0; a < width; ++a) {
    for (std::size_t b = 0; b < width; ++b) {
      if (a == b) continue;
      const bool any = std::any_of(
          violated.begin(), violated.end(),
          [&](const auto& v) { return v[a * width + b] != 0; });
      p.set(a, b, !any);
    }
  }
  if (!p.is_antisymmetric()) {
    throw network_error("inferred relation forces two distinct wires equal");
  }
  return p;
}

/// True when `p` is the chain 0 <= 1 <= ... <= size-1.
inline bool is_total_order_by_index(const Poset& p) {
  return p == chain_order(p.size());
}

}  // namespace sortnet
