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
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sortnet {

/// Thrown when a network, comparator, or argument violates its contract.
class network_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Structural block a comparator belongs to. Used for rendering and for
/// block-level tests; carries no semantics for evaluation.
enum class PhaseTag : std::uint8_t {
  approx,
  layer1,
  layer3,
  pairs,
  pairs2,
  tetradA,
  tetradB,
  merge,
  final,
};

inline constexpr PhaseTag kAllPhaseTags[] = {
    PhaseTag::approx,  PhaseTag::layer1,  PhaseTag::layer3,
    PhaseTag::pairs,   PhaseTag::pairs2,  PhaseTag::tetradA,
    PhaseTag::tetradB, PhaseTag::merge,   PhaseTag::final,
};

constexpr std::string_view to_string(PhaseTag tag) {
  switch (tag) {
    case PhaseTag::approx: return "approx";
    case PhaseTag::layer1: return "layer1";
    case PhaseTag::layer3: return "layer3";
    case PhaseTag::pairs: return "pairs";
    case PhaseTag::pairs2: return "pairs2";
    case PhaseTag::tetradA: return "tetradA";
    case PhaseTag::tetradB: return "tetradB";
    case PhaseTag::merge: return "merge";
    case PhaseTag::final: return "final";
  }
  return "?";
}

constexpr std::optional<PhaseTag> phase_from_string(std::string_view name) {
  for (PhaseTag t : kAllPhaseTags) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

/// A standard comparator: after it fires, the smaller value sits on `low`
/// and the larger on `high`.
struct Comparator {
  std::size_t low = 0;
  std::size_t high = 0;
  std::optional<PhaseTag> tag;

  friend bool operator==(const Comparator&, const Comparator&) = default;
};

/// Ordered sequence of comparators over a fixed number of wires.
class Network {
 public:
  explicit Network(std::size_t width) : width_(width) {
    if (width == 0) throw network_error("network width must be at least 1");
  }

  Network(std::size_t width, std::vector<Comparator> comparators)
      : Network(width) {
    comparators_.reserve(comparators.size());
    for (auto& c : comparators) add(c);
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return comparators_.size(); }
  bool empty() const noexcept { return comparators_.empty(); }

  std::span<const Comparator> comparators() const noexcept {
    return comparators_;
  }
  const Comparator& operator[](std::size_t i) const { return comparators_[i]; }

  auto begin() const noexcept { return comparators_.begin(); }
  auto end() const noexcept { return comparators_.end(); }

  Network& add(Comparator c) {
    if (c.low >= c.high) {
      throw network_error("comparator (" + std::to_string(c.low) + ", " +
                          std::to_string(c.high) + ") must have low < high");
    }
    if (c.high >= width_) {
      throw network_error("comparator (" + std::to_string(c.low) + ", " +
                          std::to_string(c.high) +
                          ") exceeds network width " + std::to_string(width_));
    }
    comparators_.push_back(c);
    return *this;
  }

  Network& add(std::size_t low, std::size_t high,
               std::optional<PhaseTag> tag = std::nullopt) {
    return add(Comparator{low, high, tag});
  }

  /// First `count` comparators (clamped to size()).
  Network prefix(std::size_t count) const {
    Network out(width_);
    count = std::min(count, comparators_.size());
    out.comparators_.assign(comparators_.begin(),
                            comparators_.begin() + static_cast<long>(count));
    return out;
  }

  /// Same comparators, every tag replaced by `tag`.
  Network retagged(std::optional<PhaseTag> tag) const {
    Network out = *this;
    for (auto& c : out.comparators_) c.tag = tag;
    return out;
  }

  std::size_t count_tag(std::optional<PhaseTag> tag) const {
    return static_cast<std::size_t>(
        std::count_if(comparators_.begin(), comparators_.end(),
                      [&](const Comparator& c) { return c.tag == tag; }));
  }

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::size_t width_;
  std::vector<Comparator> comparators_;
};

/// Runs `net` over `values` in place.
template <typename T>
void apply_in_place(const Network& net, std::span<T> values) {
  if (values.size() != net.width()) {
    throw network_error("input length " + std::to_string(values.size()) +
                        " does not match network width " +
                        std::to_string(net.width()));
  }
  for (const Comparator& c : net) {
    T& lo = values[c.low];
    T& hi = values[c.high];
    if (hi < lo) std::swap(lo, hi);
  }
}

namespace detail {

struct apply_fn {
  template <typename T>
  std::vector<T> operator()(const Network& net, std::vector<T> values) const {
    apply_in_place(net, std::span<T>(values));
    return values;
  }
};

}  // namespace detail

/// Runs `net` over a copy of `values`. A function object, so unqualified
/// calls with std::vector arguments never find std::apply.
inline constexpr detail::apply_fn apply{};

/// Comparators of `a` followed by those of `b`.
inline Network concat(const Network& a, const Network& b) {
  if (a.width() != b.width()) {
    throw network_error("cannot concatenate networks of width " +
                        std::to_string(a.width()) + " and " +
                        std::to_string(b.width()));
  }
  Network out = a;
  for (const Comparator& c : b) out.add(c);
  return out;
}

/// Relabels `block` onto the host wires `wires`. The list must be strictly
/// ascending so that every embedded comparator still sends its maximum to
/// the higher index.
inline Network embed(const Network& block, std::span<const std::size_t> wires,
                     std::size_t host_width) {
  if (wires.size() != block.width()) {
    throw network_error("embedding needs " + std::to_string(block.width()) +
                        " target wires, got " + std::to_string(wires.size()));
  }
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] >= host_width) {
      throw network_error("target wire " + std::to_string(wires[i]) +
                          " outside host width " + std::to_string(host_width));
    }
    if (i > 0 && wires[i - 1] >= wires[i]) {
      throw network_error("target wires must be strictly ascending");
    }
  }
  Network out(host_width);
  for (const Comparator& c : block) {
    out.add(wires[c.low], wires[c.high], c.tag);
  }
  return out;
}

inline Network embed(const Network& block,
                     std::initializer_list<std::size_t> wires,
                     std::size_t host_width) {
  return embed(block, std::span<const std::size_t>(wires.begin(), wires.size()),
               host_width);
}

}  // namespace sortnet
