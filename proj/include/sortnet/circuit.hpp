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

// Monotone AND/OR circuits read off comparator networks. On bits a
// comparator computes min = AND and max = OR, so each comparator becomes two
// gates and the circuit depth per output never exceeds the network depth.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "sortnet/bitslice.hpp"
#include "sortnet/network.hpp"

namespace sortnet {

enum class GateKind : std::uint8_t { And, Or };

/// Operand of a gate or an output: a circuit input, an earlier gate, or a
/// constant bit.
struct Ref {
  enum class Kind : std::uint8_t { input, gate, constant };
  Kind kind = Kind::constant;
  std::size_t index = 0;

  static constexpr Ref input(std::size_t i) { return {Kind::input, i}; }
  static constexpr Ref gate(std::size_t g) { return {Kind::gate, g}; }
  static constexpr Ref constant(bool bit) { return {Kind::constant, bit ? 1u : 0u}; }

  bool is_constant() const noexcept { return kind == Kind::constant; }
  bool is_constant(bool bit) const noexcept {
    return kind == Kind::constant && index == (bit ? 1u : 0u);
  }

  friend bool operator==(const Ref&, const Ref&) = default;
};

struct Gate {
  GateKind kind = GateKind::And;
  Ref lhs;
  Ref rhs;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gate DAG with one named output per wire. Operands always refer to
/// strictly earlier gates. Inputs pinned by `specialize` keep their index
/// but no longer feed any gate.
class MonotoneCircuit {
 public:
  explicit MonotoneCircuit(std::size_t inputs)
      : inputs_(inputs), pinned_(inputs), outputs_(inputs) {
    for (std::size_t i = 0; i < inputs; ++i) outputs_[i] = Ref::input(i);
  }

  std::size_t input_count() const noexcept { return inputs_; }
  std::span<const Gate> gates() const noexcept { return gates_; }
  std::span<const Ref> outputs() const noexcept { return outputs_; }
  const Ref& output(std::size_t wire) const {
    if (wire >= outputs_.size()) {
      throw network_error("unknown circuit output " + std::to_string(wire));
    }
    return outputs_[wire];
  }
  std::optional<bool> pinned(std::size_t input) const { return pinned_.at(input); }

  /// Unpinned inputs, ascending.
  std::vector<std::size_t> live_inputs() const {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < inputs_; ++i) {
      if (!pinned_[i]) live.push_back(i);
    }
    return live;
  }

  Ref add_gate(GateKind kind, Ref lhs, Ref rhs) {
    check_ref(lhs);
    check_ref(rhs);
    gates_.push_back({kind, lhs, rhs});
    return Ref::gate(gates_.size() - 1);
  }

  void set_output(std::size_t wire, Ref r) {
    check_ref(r);
    outputs_.at(wire) = r;
  }

  /// Keeps only the listed outputs; the others become constant 0 and their
  /// exclusive gates are dropped by the next prune().
  void keep_outputs(std::span<const std::size_t> wires) {
    std::vector<bool> keep(outputs_.size(), false);
    for (std::size_t w : wires) keep.at(w) = true;
    for (std::size_t w = 0; w < outputs_.size(); ++w) {
      if (!keep[w]) outputs_[w] = Ref::constant(false);
    }
    prune();
  }

  /// Removes gates unreachable from any output and renumbers the rest.
  void prune() {
    std::vector<bool> live(gates_.size(), false);
    for (const Ref& r : outputs_) {
      if (r.kind == Ref::Kind::gate) live[r.index] = true;
    }
    for (std::size_t g = gates_.size(); g-- > 0;) {
      if (!live[g]) continue;
      for (const Ref& r : {gates_[g].lhs, gates_[g].rhs}) {
        if (r.kind == Ref::Kind::gate) live[r.index] = true;
      }
    }
    std::vector<std::size_t> renumber(gates_.size());
    std::vector<Gate> kept;
    auto remap = [&](Ref r) {
      return r.kind == Ref::Kind::gate ? Ref::gate(renumber[r.index]) : r;
    };
    for (std::size_t g = 0; g < gates_.size(); ++g) {
      if (!live[g]) continue;
      renumber[g] = kept.size();
      kept.push_back({gates_[g].kind, remap(gates_[g].lhs), remap(gates_[g].rhs)});
    }
    for (Ref& r : outputs_) r = remap(r);
    gates_ = std::move(kept);
  }

  void mark_pinned(std::size_t input, bool bit) { pinned_.at(input) = bit; }

  friend bool operator==(const MonotoneCircuit&, const MonotoneCircuit&) = default;

 private:
  void check_ref(const Ref& r) const {
    const bool ok = (r.kind == Ref::Kind::input && r.index < inputs_) ||
                    (r.kind == Ref::Kind::gate && r.index < gates_.size()) ||
                    (r.kind == Ref::Kind::constant && r.index <= 1);
    if (!ok) throw network_error("gate operand does not precede the gate");
  }

  std::size_t inputs_;
  std::vector<std::optional<bool>> pinned_;
  std::vector<Gate> gates_;
  std::vector<Ref> outputs_;
};

/// One AND (low output) and one OR (high output) per comparator, following
/// the network wiring exactly.
inline MonotoneCircuit network_to_circuit(const Network& net) {
  MonotoneCircuit c(net.width());
  std::vector<Ref> wire(net.width());
  for (std::size_t i = 0; i < net.width(); ++i) wire[i] = Ref::input(i);
  for (const Comparator& cmp : net) {
    const Ref a = wire[cmp.low];
    const Ref b = wire[cmp.high];
    wire[cmp.low] = c.add_gate(GateKind::And, a, b);
    wire[cmp.high] = c.add_gate(GateKind::Or, a, b);
  }
  for (std::size_t i = 0; i < net.width(); ++i) c.set_output(i, wire[i]);
  return c;
}

/// Gate level of every gate; inputs and constants sit at level 0.
inline std::vector<std::size_t> gate_levels(const MonotoneCircuit& c) {
  std::vector<std::size_t> level(c.gates().size(), 0);
  auto of = [&](const Ref& r) {
    return r.kind == Ref::Kind::gate ? level[r.index] : std::size_t{0};
  };
  for (std::size_t g = 0; g < c.gates().size(); ++g) {
    level[g] = 1 + std::max(of(c.gates()[g].lhs), of(c.gates()[g].rhs));
  }
  return level;
}

/// Longest input-to-output path of `wire`, counted in gates.
inline std::size_t cone_depth(const MonotoneCircuit& c, std::size_t wire) {
  const Ref& r = c.output(wire);
  if (r.kind != Ref::Kind::gate) return 0;
  return gate_levels(c)[r.index];
}

/// Number of gates feeding `wire`, directly or transitively.
inline std::size_t cone_size(const MonotoneCircuit& c, std::size_t wire) {
  const Ref& r = c.output(wire);
  if (r.kind != Ref::Kind::gate) return 0;
  std::vector<bool> seen(c.gates().size(), false);
  seen[r.index] = true;
  std::size_t count = 0;
  for (std::size_t g = r.index + 1; g-- > 0;) {
    if (!seen[g]) continue;
    ++count;
    for (const Ref& op : {c.gates()[g].lhs, c.gates()[g].rhs}) {
      if (op.kind == Ref::Kind::gate) seen[op.index] = true;
    }
  }
  return count;
}

/// Pins `input` to `bit`, folds constants (x&0=0, x&1=x, x|1=1, x|0=x) and
/// drops gates no output reaches.
inline MonotoneCircuit specialize(const MonotoneCircuit& c, std::size_t input,
                                  bool bit) {
  if (input >= c.input_count()) {
    throw network_error("specialize: no input " + std::to_string(input));
  }
  MonotoneCircuit out(c.input_count());
  for (std::size_t i = 0; i < c.input_count(); ++i) {
    if (auto p = c.pinned(i)) out.mark_pinned(i, *p);
  }
  out.mark_pinned(input, bit);

  std::vector<Ref> image(c.gates().size());
  auto map = [&](const Ref& r) -> Ref {
    if (r.kind == Ref::Kind::gate) return image[r.index];
    if (r.kind == Ref::Kind::input && r.index == input) return Ref::constant(bit);
    return r;
  };
  for (std::size_t g = 0; g < c.gates().size(); ++g) {
    const Gate& gate = c.gates()[g];
    Ref a = map(gate.lhs);
    Ref b = map(gate.rhs);
    if (b.is_constant()) std::swap(a, b);
    if (gate.kind == GateKind::And) {
      if (a.is_constant(false)) image[g] = Ref::constant(false);
      else if (a.is_constant(true)) image[g] = b;
      else image[g] = out.add_gate(GateKind::And, a, b);
    } else {
      if (a.is_constant(true)) image[g] = Ref::constant(true);
      else if (a.is_constant(false)) image[g] = b;
      else image[g] = out.add_gate(GateKind::Or, a, b);
    }
  }
  for (std::size_t w = 0; w < c.outputs().size(); ++w) {
    out.set_output(w, map(c.outputs()[w]));
  }
  out.prune();
  return out;
}

/// Scalar evaluation; `bits[i]` is the value of input i. Pinned inputs use
/// their pinned value regardless of `bits`.
inline std::vector<std::uint8_t> evaluate(const MonotoneCircuit& c,
                                          std::span<const std::uint8_t> bits) {
  if (bits.size() != c.input_count()) {
    throw network_error("evaluate: expected " + std::to_string(c.input_count()) +
                        " input bits");
  }
  std::vector<std::uint8_t> value(c.gates().size());
  auto get = [&](const Ref& r) -> std::uint8_t {
    switch (r.kind) {
      case Ref::Kind::input:
        if (auto p = c.pinned(r.index)) return *p ? 1 : 0;
        return bits[r.index] ? 1 : 0;
      case Ref::Kind::gate: return value[r.index];
      case Ref::Kind::constant: return static_cast<std::uint8_t>(r.index);
    }
    return 0;
  };
  for (std::size_t g = 0; g < c.gates().size(); ++g) {
    const Gate& gate = c.gates()[g];
    value[g] = gate.kind == GateKind::And ? (get(gate.lhs) & get(gate.rhs))
                                          : (get(gate.lhs) | get(gate.rhs));
  }
  std::vector<std::uint8_t> out(c.outputs().size());
  for (std::size_t w = 0; w < out.size(); ++w) out[w] = get(c.outputs()[w]);
  return out;
}

/// Bit-sliced evaluation of output `wire` over every assignment of the live
/// inputs. Calls fn(index, bit) where `index` enumerates live-input vectors
/// (live input 0 most significant) and `bit` is the output.
template <typename Fn>
void for_each_truth_row(const MonotoneCircuit& c, std::size_t wire,
                        const ExhaustiveOptions& opts, Fn&& fn) {
  const Ref target = c.output(wire);
  const std::vector<std::size_t> live = c.live_inputs();
  if (live.empty()) {
    fn(std::uint64_t{0}, evaluate(c, std::vector<std::uint8_t>(c.input_count()))[wire] != 0);
    return;
  }
  detail::check_cap(live.size(), opts);
  std::vector<std::size_t> slot(c.input_count(), live.size());
  for (std::size_t j = 0; j < live.size(); ++j) slot[live[j]] = j;

  const BitsliceSpace space(live.size());
  const std::size_t words = space.words();
  WireSlices in(live.size(), words);
  WireSlices gate(std::max<std::size_t>(c.gates().size(), 1), words);
  std::vector<std::uint64_t> scratch_a(words), scratch_b(words);

  auto load = [&](const Ref& r, std::vector<std::uint64_t>& dst) {
    switch (r.kind) {
      case Ref::Kind::input:
        if (auto p = c.pinned(r.index)) {
          std::fill(dst.begin(), dst.end(), *p ? ~std::uint64_t{0} : 0);
        } else {
          auto s = in[slot[r.index]];
          std::copy(s.begin(), s.end(), dst.begin());
        }
        break;
      case Ref::Kind::gate: {
        auto s = gate[r.index];
        std::copy(s.begin(), s.end(), dst.begin());
        break;
      }
      case Ref::Kind::constant:
        std::fill(dst.begin(), dst.end(), r.index ? ~std::uint64_t{0} : 0);
        break;
    }
  };

  const std::uint64_t per_chunk = std::uint64_t{1} << space.chunk_bits();
  for (std::size_t chunk = 0; chunk < space.chunks(); ++chunk) {
    for (std::size_t j = 0; j < live.size(); ++j) space.fill_input(j, chunk, in[j]);
    for (std::size_t g = 0; g < c.gates().size(); ++g) {
      load(c.gates()[g].lhs, scratch_a);
      load(c.gates()[g].rhs, scratch_b);
      auto dst = gate[g];
      if (c.gates()[g].kind == GateKind::And) {
        for (std::size_t k = 0; k < words; ++k) dst[k] = scratch_a[k] & scratch_b[k];
      } else {
        for (std::size_t k = 0; k < words; ++k) dst[k] = scratch_a[k] | scratch_b[k];
      }
    }
    load(target, scratch_a);
    for (std::uint64_t t = 0; t < per_chunk; ++t) {
      const bool bit = (scratch_a[t / 64] >> (t % 64)) & 1u;
      fn(space.input_index(chunk, static_cast<std::size_t>(t / 64),
                           static_cast<unsigned>(t % 64)),
         bit);
    }
  }
}

/// True iff output `wire` is 1 exactly when at least `k` of the `n` live
/// inputs are 1. `n` must equal the live input count.
inline bool is_threshold(const MonotoneCircuit& c, std::size_t wire, std::size_t k,
                         std::size_t n, const ExhaustiveOptions& opts = {}) {
  const std::size_t live = c.live_inputs().size();
  if (n != live) {
    throw network_error("is_threshold: circuit has " + std::to_string(live) +
                        " live inputs, not " + std::to_string(n));
  }
  detail::check_cap(n, opts);
  bool ok = true;
  for_each_truth_row(c, wire, opts, [&](std::uint64_t index, bool bit) {
    if (bit != (static_cast<std::size_t>(std::popcount(index)) >= k)) ok = false;
  });
  return ok;
}

/// Gate-list text: "g<id> = AND|OR <ref> <ref>" per gate, then
/// "out<wire> = <ref>" per output (only `only` if non-empty). Pinned inputs
/// are noted as comments.
inline std::string render_gate_list(const MonotoneCircuit& c,
                                    std::span<const std::size_t> only = {}) {
  auto ref = [](const Ref& r) -> std::string {
    switch (r.kind) {
      case Ref::Kind::input: return "x" + std::to_string(r.index);
      case Ref::Kind::gate: return "g" + std::to_string(r.index);
      case Ref::Kind::constant: return r.index ? "1" : "0";
    }
    return "?";
  };
  std::ostringstream os;
  os << "# inputs " << c.input_count() << '\n';
  for (std::size_t i = 0; i < c.input_count(); ++i) {
    if (auto p = c.pinned(i)) os << "# pinned x" << i << " = " << (*p ? 1 : 0) << '\n';
  }
  for (std::size_t g = 0; g < c.gates().size(); ++g) {
    const Gate& gate = c.gates()[g];
    os << 'g' << g << " = " << (gate.kind == GateKind::And ? "AND" : "OR") << ' '
       << ref(gate.lhs) << ' ' << ref(gate.rhs) << '\n';
  }
  for (std::size_t w = 0; w < c.outputs().size(); ++w) {
    if (!only.empty() && std::find(only.begin(), only.end(), w) == only.end()) continue;
    os << "out" << w << " = " << ref(c.outputs()[w]) << '\n';
  }
  return os.str();
}

}  // namespace sortnet
