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

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "sortnet/network.hpp"

namespace sortnet {

/// "Known <=" relation between wires. `leq(a, b)` holds when the value on
/// wire a can never exceed the value on wire b. Elements carry labels (the
/// original wire indices) so restricted posets still name their wires.
class Poset {
 public:
  explicit Poset(std::size_t size) : Poset(identity_labels(size)) {}

  explicit Poset(std::vector<std::size_t> labels)
      : labels_(std::move(labels)), leq_(labels_.size() * labels_.size(), 0) {
    for (std::size_t i = 0; i < size(); ++i) set(i, i, true);
  }

  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const std::size_t> labels() const noexcept { return labels_; }
  std::size_t label(std::size_t i) const { return labels_[i]; }

  bool leq(std::size_t a, std::size_t b) const {
    return leq_[a * size() + b] != 0;
  }
  void set(std::size_t a, std::size_t b, bool value) {
    leq_[a * size() + b] = value ? 1 : 0;
  }

  /// Strictly below: a <= b and a != b.
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const {
    return leq(a, b) || leq(b, a);
  }

  /// Index of the element carrying `label`, or size() if absent.
  std::size_t index_of(std::size_t label) const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (labels_[i] == label) return i;
    }
    return size();
  }

  /// Sub-poset on the elements whose labels are listed, in list order.
  Poset restrict_to(std::span<const std::size_t> keep) const {
    std::vector<std::size_t> idx;
    idx.reserve(keep.size());
    for (std::size_t label : keep) {
      const std::size_t i = index_of(label);
      if (i == size()) {
        throw network_error("restrict: unknown element " + std::to_string(label));
      }
      idx.push_back(i);
    }
    Poset out(std::vector<std::size_t>(keep.begin(), keep.end()));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = 0; b < idx.size(); ++b) {
        out.set(a, b, leq(idx[a], idx[b]));
      }
    }
    return out;
  }

  bool is_reflexive() const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (!leq(i, i)) return false;
    }
    return true;
  }

  bool is_transitive() const {
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (leq(a, b))
          for (std::size_t c = 0; c < n; ++c)
            if (leq(b, c) && !leq(a, c)) return false;
    return true;
  }

  bool is_antisymmetric() const {
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = a + 1; b < size(); ++b)
        if (leq(a, b) && leq(b, a)) return false;
    return true;
  }

  /// True when every pair of elements is comparable.
  bool is_chain() const {
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = a + 1; b < size(); ++b)
        if (!comparable(a, b)) return false;
    return true;
  }

  std::size_t relation_count() const {
    return static_cast<std::size_t>(std::accumulate(leq_.begin(), leq_.end(), 0));
  }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  static std::vector<std::size_t> identity_labels(std::size_t n) {
    std::vector<std::size_t> l(n);
    std::iota(l.begin(), l.end(), std::size_t{0});
    return l;
  }

  std::vector<std::size_t> labels_;
  std::vector<std::uint8_t> leq_;
};

/// Covering pair (lower, upper) by element index.
using HasseEdge = std::pair<std::size_t, std::size_t>;

/// Transitive reduction: a < b with no c strictly between. Edges come out
/// sorted by (lower, upper). Throws on a non-antisymmetric relation.
inline std::vector<HasseEdge> hasse_edges(const Poset& p) {
  if (!p.is_antisymmetric()) {
    throw network_error("relation is not antisymmetric; no Hasse diagram");
  }
  std::vector<HasseEdge> edges;
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c) {
        if (p.less(a, c) && p.less(c, b)) covered = false;
      }
      if (covered) edges.emplace_back(a, b);
    }
  }
  return edges;
}

/// Reflexive-transitive closure of `edges` over elements labelled `labels`.
inline Poset transitive_closure(std::vector<std::size_t> labels,
                                std::span<const HasseEdge> edges) {
  Poset p(std::move(labels));
  for (auto [a, b] : edges) p.set(a, b, true);
  const std::size_t n = p.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq(i, k))
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq(k, j)) p.set(i, j, true);
  return p;
}

/// Subset-inclusion order on the bitmasks 0 .. 2^n - 1.
inline Poset cube_order(std::size_t n) {
  const std::size_t size = std::size_t{1} << n;
  Poset p(size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      p.set(a, b, (a & ~b) == 0);
  return p;
}

/// Total order by index.
inline Poset chain_order(std::size_t n) {
  Poset p(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) p.set(a, b, true);
  return p;
}

}  // namespace sortnet
