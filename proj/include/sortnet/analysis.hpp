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

// Machine checks for the structure of the 16-input sorters: the cube poset
// left by the approximate phase, the rank observations it enables, and the
// orderings on M produced by the two M-sorting methods.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include "sortnet/bitslice.hpp"
#include "sortnet/constructions.hpp"
#include "sortnet/network.hpp"
#include "sortnet/poset.hpp"
#include "sortnet/schedule.hpp"
#include "sortnet/verify.hpp"

namespace sortnet {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;
inline constexpr std::size_t kDefaultSamples = 10000;

/// True iff the poset inferred from `net` is subset inclusion on the 2^n
/// wire bitmasks.
inline bool check_cube_poset(const Network& net, std::size_t n,
                             const ExhaustiveOptions& opts = {}) {
  if (n >= 64 || net.width() != (std::size_t{1} << n)) {
    throw network_error("check_cube_poset: width " + std::to_string(net.width()) +
                        " is not 2^" + std::to_string(n));
  }
  return infer_poset(net, opts) == cube_order(n);
}

/// Comparators scheduled at ASAP layer <= max_layer, in sequence order.
inline Network layer_prefix(const Network& net, std::size_t max_layer) {
  const LayeredSchedule s = asap_schedule(net);
  Network out(net.width());
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (s.layer_of[i] <= max_layer) out.add(net[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rank observations after the cube phase.

enum class ObservationMode { exhaustive_binary, sampled_permutations };

constexpr std::string_view to_string(ObservationMode m) {
  return m == ObservationMode::exhaustive_binary ? "exhaustive-binary"
                                                 : "sampled-permutations";
}

struct ClaimVerdict {
  char claim = 'a';
  bool holds = true;
  /// First input (binary vector or permutation) that breaks the claim.
  std::optional<std::vector<std::size_t>> counterexample;
};

struct ObservationReport {
  ObservationMode mode = ObservationMode::exhaustive_binary;
  std::size_t inputs_checked = 0;
  std::uint64_t seed = 0;
  std::array<ClaimVerdict, 4> claims{
      ClaimVerdict{'a', true, std::nullopt}, ClaimVerdict{'b', true, std::nullopt},
      ClaimVerdict{'c', true, std::nullopt}, ClaimVerdict{'d', true, std::nullopt}};

  bool all_hold() const {
    return std::all_of(claims.begin(), claims.end(),
                       [](const ClaimVerdict& c) { return c.holds; });
  }
};

/// Evaluates claims a)-d) on one output vector of a 16-wire prefix. Values
/// may repeat (binary inputs); ranks refer to the sorted copy of `out`.
///  a) wire 15 holds a maximum, wire 0 a minimum;
///  b) ranks 13,14 are the two largest layer III values; ranks 1,2 the two
///     smallest layer I values;
///  c) ranks 5..10 form a sub-multiset of the M values, where the M slots
///     of wires 7 and 8 hold min(layer III) and max(layer I);
///  d) ranks 11,12 are {3rd largest of layer III, max M}; ranks 3,4 are
///     {3rd smallest of layer I, min M}.
template <typename T>
std::array<bool, 4> evaluate_observations(std::span<const T, 16> out) {
  std::array<T, 16> sorted;
  std::copy(out.begin(), out.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.end());

  auto gather = [&](auto const& wires) {
    std::array<T, std::tuple_size_v<std::decay_t<decltype(wires)>>> v;
    for (std::size_t i = 0; i < wires.size(); ++i) v[i] = out[wires[i]];
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto l1 = gather(cube16::kLayer1);
  const auto l3 = gather(cube16::kLayer3);

  std::array<T, 8> m;
  for (std::size_t i = 0; i < cube16::kMiddle.size(); ++i) m[i] = out[cube16::kMiddle[i]];
  m[6] = l3.front();
  m[7] = l1.back();
  std::sort(m.begin(), m.end());

  auto same_pair = [](T x0, T x1, T y0, T y1) {
    if (x1 < x0) std::swap(x0, x1);
    if (y1 < y0) std::swap(y0, y1);
    return x0 == y0 && x1 == y1;
  };

  std::array<bool, 4> holds{};
  holds[0] = out[15] == sorted[15] && out[0] == sorted[0];
  holds[1] = same_pair(sorted[13], sorted[14], l3[2], l3[3]) &&
             same_pair(sorted[1], sorted[2], l1[0], l1[1]);
  holds[2] = std::includes(m.begin(), m.end(), sorted.begin() + 5,
                           sorted.begin() + 11);
  holds[3] = same_pair(sorted[11], sorted[12], l3[1], m.back()) &&
             same_pair(sorted[3], sorted[4], l1[2], m.front());
  return holds;
}

namespace detail {

inline void record(ObservationReport& r, const std::array<bool, 4>& holds,
                   const std::vector<std::size_t>& input) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!holds[i] && r.claims[i].holds) {
      r.claims[i].holds = false;
      r.claims[i].counterexample = input;
    }
  }
}

}  // namespace detail

/// Exhaustive check over every binary input. Counterexamples are the
/// lexicographically least failing inputs.
inline ObservationReport check_observations_exhaustive(const Network& prefix) {
  if (prefix.width() != kWidth16) {
    throw network_error("observations are defined for 16-wire prefixes");
  }
  ObservationReport r;
  r.mode = ObservationMode::exhaustive_binary;
  const BitsliceSpace space(kWidth16);
  for_each_output_chunk(prefix, [&](std::size_t chunk, const WireSlices& out) {
    std::array<std::uint8_t, 16> values{};
    for (std::size_t k = 0; k < space.words(); ++k) {
      for (unsigned t = 0; t < 64; ++t) {
        for (std::size_t w = 0; w < kWidth16; ++w) {
          values[w] = static_cast<std::uint8_t>((out[w][k] >> t) & 1u);
        }
        const auto holds = evaluate_observations<std::uint8_t>(values);
        if (!(holds[0] && holds[1] && holds[2] && holds[3])) {
          const auto in = decode_input(space.input_index(chunk, k, t), kWidth16);
          detail::record(r, holds, std::vector<std::size_t>(in.begin(), in.end()));
        }
        ++r.inputs_checked;
      }
    }
  });
  return r;
}

/// Diagnostic check over `samples` seeded random permutations of 0..15.
inline ObservationReport check_observations_sampled(
    const Network& prefix, std::size_t samples = kDefaultSamples,
    std::uint64_t seed = kDefaultSeed) {
  if (prefix.width() != kWidth16) {
    throw network_error("observations are defined for 16-wire prefixes");
  }
  ObservationReport r;
  r.mode = ObservationMode::sampled_permutations;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> input(kWidth16);
  for (std::size_t s = 0; s < samples; ++s) {
    std::iota(input.begin(), input.end(), std::size_t{0});
    std::shuffle(input.begin(), input.end(), rng);
    const auto out = apply(prefix, input);
    const auto holds =
        evaluate_observations<std::size_t>(std::span<const std::size_t, 16>(out.data(), 16));
    detail::record(r, holds, input);
    ++r.inputs_checked;
  }
  return r;
}

inline ObservationReport check_observations(
    const Network& prefix,
    ObservationMode mode = ObservationMode::exhaustive_binary,
    std::size_t samples = kDefaultSamples, std::uint64_t seed = kDefaultSeed) {
  return mode == ObservationMode::exhaustive_binary
             ? check_observations_exhaustive(prefix)
             : check_observations_sampled(prefix, samples, seed);
}

/// Line-oriented verdict text: a header line, then one line per claim.
inline std::string format_report(const ObservationReport& r) {
  std::ostringstream os;
  os << "observations mode=" << to_string(r.mode) << " inputs=" << r.inputs_checked;
  if (r.mode == ObservationMode::sampled_permutations) {
    os << " seed=0x" << std::hex << r.seed << std::dec;
  }
  os << '\n';
  for (const ClaimVerdict& c : r.claims) {
    os << c.claim << ' ' << (c.holds ? "holds" : "fails");
    if (c.counterexample) {
      os << " input=";
      for (std::size_t i = 0; i < c.counterexample->size(); ++i) {
        os << (i ? "," : "") << (*c.counterexample)[i];
      }
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Orderings on M after the M-phase preparations.

/// How often each tetrad member is ordered against the other tetrad.
struct TetradDominance {
  /// upper_beats[i]: lower-tetrad wires known <= kUpperTetrad[i].
  std::array<std::size_t, 4> upper_beats{};
  /// lower_beaten_by[i]: upper-tetrad wires known >= kLowerTetrad[i].
  std::array<std::size_t, 4> lower_beaten_by{};
};

inline TetradDominance tetrad_dominance(const Poset& p) {
  TetradDominance d;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t u = p.index_of(cube16::kUpperTetrad[i]);
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t l = p.index_of(cube16::kLowerTetrad[j]);
      if (p.leq(l, u)) {
        ++d.upper_beats[i];
        ++d.lower_beaten_by[j];
      }
    }
  }
  return d;
}

/// Poset of `prefix` restricted to the M wires.
inline Poset m_poset(const Network& prefix, const ExhaustiveOptions& opts = {}) {
  if (prefix.width() != kWidth16) throw network_error("M poset needs 16 wires");
  return infer_poset(prefix, opts).restrict_to(cube16::kM);
}

namespace detail {

/// `top` is >= every element of `pool` (by label).
inline bool dominates_all(const Poset& p, std::size_t top,
                          std::span<const std::size_t> pool) {
  const std::size_t t = p.index_of(top);
  return std::all_of(pool.begin(), pool.end(), [&](std::size_t x) {
    return p.leq(p.index_of(x), t);
  });
}

inline bool below_all(const Poset& p, std::size_t bottom,
                      std::span<const std::size_t> pool) {
  const std::size_t b = p.index_of(bottom);
  return std::all_of(pool.begin(), pool.end(), [&](std::size_t x) {
    return p.leq(b, p.index_of(x));
  });
}

}  // namespace detail

/// After Green's tetrad sorts: each upper wire beats at least two lower
/// wires, wire 9 beats at least three, each lower wire loses to at least two
/// upper wires, and so wires 12, 10 are the two largest and wires 3, 5 the
/// two smallest of M.
inline bool check_green_m_poset(const Network& prefix,
                                const ExhaustiveOptions& opts = {}) {
  const Poset p = m_poset(prefix, opts);
  const TetradDominance d = tetrad_dominance(p);
  for (std::size_t i = 0; i < 4; ++i) {
    if (d.upper_beats[i] < 2 || d.lower_beaten_by[i] < 2) return false;
  }
  // kUpperTetrad[1] is wire 9, third largest of its tetrad.
  if (d.upper_beats[1] < 3) return false;

  const std::array<std::size_t, 7> below12 = {3, 5, 6, 7, 8, 9, 10};
  const std::array<std::size_t, 6> below10 = {3, 5, 6, 7, 8, 9};
  const std::array<std::size_t, 7> above3 = {5, 6, 7, 8, 9, 10, 12};
  const std::array<std::size_t, 6> above5 = {6, 7, 8, 9, 10, 12};
  return detail::dominates_all(p, 12, below12) &&
         detail::dominates_all(p, 10, below10) && detail::below_all(p, 3, above3) &&
         detail::below_all(p, 5, above5);
}

/// After van Voorhis' second round of pairs: every upper-tetrad wire beats
/// at least three lower-tetrad wires and every lower wire loses to at least
/// three upper wires.
inline bool check_vv_m_poset(const Network& prefix,
                             const ExhaustiveOptions& opts = {}) {
  const TetradDominance d = tetrad_dominance(m_poset(prefix, opts));
  for (std::size_t i = 0; i < 4; ++i) {
    if (d.upper_beats[i] < 3 || d.lower_beaten_by[i] < 3) return false;
  }
  return true;
}

/// Index one past the last comparator carrying `tag`, or 0.
inline std::size_t end_of_phase(const Network& net, PhaseTag tag) {
  std::size_t end = 0;
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (net[i].tag == tag) end = i + 1;
  }
  return end;
}

/// Approximate phase, layer sorts, a Batcher 8-sorter on M, final pair.
inline Network strategy_with_batcher_m() { return strategy16(batcher_sorter(8)); }

}  // namespace sortnet
