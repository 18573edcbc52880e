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

// Bit-parallel evaluation over the whole binary input space.
//
// Input vector v of width w is numbered x = sum v[j] << (w - 1 - j), so wire
// 0 is the most significant bit and increasing x is lexicographic order on
// vectors. The space of 2^w inputs is cut into chunks of at most 2^16
// inputs; inside a chunk every wire is a slice of 64-bit words whose bit t
// of word k belongs to input (chunk << chunk_bits) | (64 k + t).

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "sortnet/network.hpp"

namespace sortnet {

inline constexpr std::size_t kDefaultVerifyCap = 24;

struct ExhaustiveOptions {
  /// Largest width accepted by exhaustive operations.
  std::size_t cap = kDefaultVerifyCap;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Layout of the 2^width binary input space as chunks of word slices.
class BitsliceSpace {
 public:
  static constexpr std::size_t kMaxChunkBits = 16;

  explicit BitsliceSpace(std::size_t width)
      : width_(width),
        chunk_bits_(std::min(width, kMaxChunkBits)),
        words_(chunk_bits_ >= 6 ? (std::size_t{1} << (chunk_bits_ - 6)) : 1),
        chunks_(std::size_t{1} << (width - chunk_bits_)) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t chunk_bits() const noexcept { return chunk_bits_; }
  std::size_t words() const noexcept { return words_; }
  std::size_t chunks() const noexcept { return chunks_; }

  /// Mask of live bits in a word (only short of all-ones when width < 6).
  std::uint64_t valid_mask() const noexcept {
    return chunk_bits_ >= 6 ? ~std::uint64_t{0}
                            : (std::uint64_t{1} << (std::size_t{1} << chunk_bits_)) - 1;
  }

  std::uint64_t input_index(std::size_t chunk, std::size_t word,
                            unsigned bit) const noexcept {
    return (static_cast<std::uint64_t>(chunk) << chunk_bits_) |
           (static_cast<std::uint64_t>(word) * 64 + bit);
  }

  /// Writes the input pattern of `wire` for `chunk` into `out` (words()).
  void fill_input(std::size_t wire, std::size_t chunk,
                  std::span<std::uint64_t> out) const noexcept {
    static constexpr std::uint64_t kLowPatterns[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
    };
    const std::size_t bit = width_ - 1 - wire;
    if (bit >= chunk_bits_) {
      const bool one = (chunk >> (bit - chunk_bits_)) & 1u;
      std::fill(out.begin(), out.end(), one ? ~std::uint64_t{0} : 0);
    } else if (bit < 6) {
      std::fill(out.begin(), out.end(), kLowPatterns[bit]);
    } else {
      for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = ((k >> (bit - 6)) & 1u) ? ~std::uint64_t{0} : 0;
      }
    }
  }

 private:
  std::size_t width_;
  std::size_t chunk_bits_;
  std::size_t words_;
  std::size_t chunks_;
};

/// One word slice per wire for a single chunk.
class WireSlices {
 public:
  WireSlices(std::size_t wires, std::size_t words)
      : words_(words), data_(wires * words) {}

  std::span<std::uint64_t> operator[](std::size_t wire) noexcept {
    return {data_.data() + wire * words_, words_};
  }
  std::span<const std::uint64_t> operator[](std::size_t wire) const noexcept {
    return {data_.data() + wire * words_, words_};
  }
  std::size_t words() const noexcept { return words_; }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

/// Fills `slices` with the chunk's inputs and runs every comparator as one
/// AND (low) and one OR (high) per word.
inline void evaluate_chunk(const Network& net, const BitsliceSpace& space,
                           std::size_t chunk, WireSlices& slices) {
  for (std::size_t w = 0; w < net.width(); ++w) {
    space.fill_input(w, chunk, slices[w]);
  }
  for (const Comparator& c : net) {
    auto lo = slices[c.low];
    auto hi = slices[c.high];
    for (std::size_t k = 0; k < lo.size(); ++k) {
      const std::uint64_t a = lo[k];
      const std::uint64_t b = hi[k];
      lo[k] = a & b;
      hi[k] = a | b;
    }
  }
}

inline std::vector<std::uint8_t> decode_input(std::uint64_t index,
                                              std::size_t width) {
  std::vector<std::uint8_t> v(width);
  for (std::size_t j = 0; j < width; ++j) {
    v[j] = static_cast<std::uint8_t>((index >> (width - 1 - j)) & 1u);
  }
  return v;
}

inline std::uint64_t encode_input(std::span<const std::uint8_t> bits) {
  std::uint64_t x = 0;
  for (std::uint8_t b : bits) x = (x << 1) | (b ? 1u : 0u);
  return x;
}

namespace detail {

inline unsigned worker_count(const ExhaustiveOptions& opts, std::size_t chunks) {
  unsigned n = opts.threads ? opts.threads : std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  return static_cast<unsigned>(std::min<std::size_t>(n, chunks));
}

/// Splits [0, chunks) into contiguous ranges, one per worker, and calls
/// body(worker, begin, end). Range boundaries depend only on the worker
/// count, and callers combine per-worker results in worker order.
template <typename Body>
void partition_chunks(std::size_t chunks, unsigned workers, Body&& body) {
  if (workers <= 1) {
    body(0u, std::size_t{0}, chunks);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = chunks * w / workers;
    const std::size_t end = chunks * (w + 1) / workers;
    pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
  }
}

inline void check_cap(std::size_t width, const ExhaustiveOptions& opts) {
  if (width > opts.cap) {
    throw network_error("width " + std::to_string(width) +
                        " exceeds exhaustive verification cap " +
                        std::to_string(opts.cap));
  }
  if (width > 63) throw network_error("width too large for exhaustive search");
}

}  // namespace detail

/// Calls fn(chunk, slices) with the network outputs for every chunk of the
/// input space, in ascending chunk order, on the calling thread.
template <typename Fn>
void for_each_output_chunk(const Network& net, Fn&& fn) {
  const BitsliceSpace space(net.width());
  WireSlices slices(net.width(), space.words());
  for (std::size_t chunk = 0; chunk < space.chunks(); ++chunk) {
    evaluate_chunk(net, space, chunk, slices);
    fn(chunk, static_cast<const WireSlices&>(slices));
  }
}

}  // namespace sortnet
