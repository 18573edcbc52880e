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

#include "sortnet/circuit.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <vector>

#include "sortnet/constructions.hpp"
#include "sortnet/schedule.hpp"
#include "sortnet/verify.hpp"

namespace sortnet {
namespace {

using Bits = std::vector<std::uint8_t>;

Bits bits_of(std::uint64_t x, std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (x >> i) & 1u;
  return b;
}

TEST(CircuitTest, SingleComparatorIsAndOr) {
  Network net(2);
  net.add(0, 1);
  const MonotoneCircuit c = network_to_circuit(net);
  ASSERT_EQ(c.gates().size(), 2u);
  EXPECT_EQ(c.gates()[0].kind, GateKind::And);
  EXPECT_EQ(c.gates()[1].kind, GateKind::Or);
  for (std::uint64_t x = 0; x < 4; ++x) {
    const Bits in = bits_of(x, 2);
    const Bits out = evaluate(c, in);
    EXPECT_EQ(out[0], in[0] & in[1]);
    EXPECT_EQ(out[1], in[0] | in[1]);
  }
  EXPECT_EQ(cone_depth(c, 0), 1u);
  EXPECT_EQ(cone_depth(c, 1), 1u);
}

TEST(CircuitTest, OperandsMustPrecedeGate) {
  MonotoneCircuit c(2);
  EXPECT_THROW(c.add_gate(GateKind::And, Ref::gate(0), Ref::input(0)), network_error);
  EXPECT_THROW(c.add_gate(GateKind::And, Ref::input(2), Ref::input(0)), network_error);
  EXPECT_NO_THROW(c.add_gate(GateKind::And, Ref::input(1), Ref::input(0)));
}

TEST(CircuitTest, UnknownOutputThrows) {
  const MonotoneCircuit c = network_to_circuit(sorter4());
  EXPECT_THROW(cone_depth(c, 4), network_error);
}

TEST(CircuitTest, MatchesNetworkExhaustively) {
  for (const Network& net : {sorter4(), hypercube_phase(3), batcher_sorter(8), green16(),
                             van_voorhis16(), green16_naive_merge(), batcher_sorter(16)}) {
    const MonotoneCircuit c = network_to_circuit(net);
    const std::size_t w = net.width();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << w); ++x) {
      const Bits in = bits_of(x, w);
      ASSERT_EQ(evaluate(c, in), apply(net, in));
    }
  }
}

TEST(CircuitTest, Green16MatchesOnSeededRandomVectors) {
  const Network g = green16();
  const MonotoneCircuit c = network_to_circuit(g);
  std::mt19937_64 rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const Bits in = bits_of(rng(), 16);
    ASSERT_EQ(evaluate(c, in), apply(g, in));
  }
}

TEST(CircuitTest, ConeDepthBoundedByNetworkDepth) {
  for (const Network& net : {green16(), van_voorhis16(), batcher_sorter(16)}) {
    const MonotoneCircuit c = network_to_circuit(net);
    const std::size_t d = depth(net);
    std::size_t deepest = 0;
    for (std::size_t w = 0; w < 16; ++w) {
      EXPECT_LE(cone_depth(c, w), d);
      deepest = std::max(deepest, cone_depth(c, w));
    }
    EXPECT_EQ(deepest, d);
  }
}

TEST(CircuitTest, VanVoorhisConesAtMostNine) {
  const MonotoneCircuit c = network_to_circuit(van_voorhis16());
  for (std::size_t w = 0; w < 16; ++w) EXPECT_LE(cone_depth(c, w), 9u);
  EXPECT_LE(cone_depth(c, 8), 9u);
}

TEST(SpecializeTest, AndWithOnePassesThrough) {
  MonotoneCircuit c(2);
  c.set_output(0, c.add_gate(GateKind::And, Ref::input(0), Ref::input(1)));
  const MonotoneCircuit s = specialize(c, 1, true);
  EXPECT_EQ(s.output(0), Ref::input(0));
  EXPECT_TRUE(s.gates().empty());
  EXPECT_EQ(cone_depth(s, 0), 0u);
}

TEST(SpecializeTest, OrWithOneIsConstant) {
  MonotoneCircuit c(2);
  c.set_output(0, c.add_gate(GateKind::Or, Ref::input(0), Ref::input(1)));
  const MonotoneCircuit s = specialize(c, 1, true);
  EXPECT_EQ(s.output(0), Ref::constant(true));
  EXPECT_TRUE(s.gates().empty());
}

TEST(SpecializeTest, AndWithZeroAndOrWithZero) {
  MonotoneCircuit c(2);
  c.set_output(0, c.add_gate(GateKind::And, Ref::input(0), Ref::input(1)));
  c.set_output(1, c.add_gate(GateKind::Or, Ref::input(0), Ref::input(1)));
  const MonotoneCircuit s = specialize(c, 0, false);
  EXPECT_EQ(s.output(0), Ref::constant(false));
  EXPECT_EQ(s.output(1), Ref::input(1));
  EXPECT_EQ(s.pinned(0), false);
  EXPECT_EQ(s.live_inputs(), (std::vector<std::size_t>{1}));
}

TEST(SpecializeTest, InvalidInput) {
  EXPECT_THROW(specialize(network_to_circuit(sorter4()), 4, false), network_error);
}

TEST(SpecializeTest, PreservesFunctionAndNeverDeepens) {
  const MonotoneCircuit c = network_to_circuit(van_voorhis16());
  for (std::size_t pin : {0u, 7u, 15u}) {
    for (bool bit : {false, true}) {
      const MonotoneCircuit s = specialize(c, pin, bit);
      EXPECT_LT(s.gates().size(), c.gates().size());
      for (std::size_t w = 0; w < 16; ++w) {
        EXPECT_LE(cone_depth(s, w), cone_depth(c, w));
      }
      for (std::uint64_t x = 0; x < (1u << 16); ++x) {
        Bits in = bits_of(x, 16);
        in[pin] = bit;
        ASSERT_EQ(evaluate(s, in), evaluate(c, in)) << "pin " << pin << " x " << x;
      }
    }
  }
}

TEST(SpecializeTest, RepeatedPinsStack) {
  const MonotoneCircuit c = network_to_circuit(sorter4());
  const MonotoneCircuit s = specialize(specialize(c, 0, true), 3, false);
  EXPECT_EQ(s.live_inputs(), (std::vector<std::size_t>{1, 2}));
  // One 1 and one 0 pinned: the middle outputs are AND/OR of the rest.
  EXPECT_EQ(s.output(0), Ref::constant(false));
  EXPECT_TRUE(is_threshold(s, 1, 2, 2));
  EXPECT_TRUE(is_threshold(s, 2, 1, 2));
  EXPECT_EQ(s.output(3), Ref::constant(true));
}

TEST(ThresholdTest, Sorter4MaxIsOr) {
  const MonotoneCircuit c = network_to_circuit(sorter4());
  EXPECT_TRUE(is_threshold(c, 3, 1, 4));
  EXPECT_TRUE(is_threshold(c, 0, 4, 4));
  EXPECT_FALSE(is_threshold(c, 3, 2, 4));
}

TEST(ThresholdTest, LiveInputCountMustMatch) {
  const MonotoneCircuit c = network_to_circuit(sorter4());
  EXPECT_THROW(is_threshold(c, 3, 1, 3), network_error);
  const MonotoneCircuit s = specialize(c, 0, false);
  EXPECT_THROW(is_threshold(s, 3, 1, 4), network_error);
  EXPECT_TRUE(is_threshold(s, 3, 1, 3));
}

TEST(ThresholdTest, VanVoorhisMajority16) {
  const MonotoneCircuit c = network_to_circuit(van_voorhis16());
  EXPECT_TRUE(is_threshold(c, 8, 8, 16));
  EXPECT_FALSE(is_threshold(c, 8, 7, 16));
  EXPECT_TRUE(is_threshold(c, 7, 9, 16));
}

TEST(ThresholdTest, EveryOutputOfSortersIsAThreshold) {
  for (const Network& net : {sorter4(), batcher_sorter(8), green16(), van_voorhis16()}) {
    ASSERT_TRUE(verify_sorts_binary(net).sorts());
    const MonotoneCircuit c = network_to_circuit(net);
    const std::size_t w = net.width();
    for (std::size_t j = 0; j < w; ++j) {
      EXPECT_TRUE(is_threshold(c, j, w - j, w)) << "wire " << j;
    }
  }
}

TEST(ThresholdTest, BitSlicedRowsMatchScalarEvaluation) {
  const MonotoneCircuit c = specialize(network_to_circuit(green16()), 4, true);
  const auto live = c.live_inputs();
  ASSERT_EQ(live.size(), 15u);
  std::size_t rows = 0;
  for_each_truth_row(c, 9, {}, [&](std::uint64_t index, bool bit) {
    Bits in(16, 0);
    for (std::size_t j = 0; j < live.size(); ++j) {
      in[live[j]] = (index >> (live.size() - 1 - j)) & 1u;
    }
    ASSERT_EQ(bit, evaluate(c, in)[9] != 0);
    ++rows;
  });
  EXPECT_EQ(rows, 1u << 15);
}

TEST(MajorityTest, FifteenInputsByPinning) {
  const MonotoneCircuit c = network_to_circuit(van_voorhis16());
  for (std::size_t pin = 0; pin < 16; ++pin) {
    const MonotoneCircuit zero = specialize(c, pin, false);
    EXPECT_LE(cone_depth(zero, 8), 9u);
    EXPECT_TRUE(is_threshold(zero, 8, 8, 15)) << "pin " << pin;
  }
  const MonotoneCircuit one = specialize(c, 15, true);
  EXPECT_LE(cone_depth(one, 7), 9u);
  EXPECT_TRUE(is_threshold(one, 7, 8, 15));
}

TEST(GateListTest, Format) {
  Network net(2);
  net.add(0, 1);
  EXPECT_EQ(render_gate_list(network_to_circuit(net)),
            "# inputs 2\n"
            "g0 = AND x0 x1\n"
            "g1 = OR x0 x1\n"
            "out0 = g0\n"
            "out1 = g1\n");
}

TEST(GateListTest, PinnedAndSelectedOutputs) {
  MonotoneCircuit c(2);
  c.set_output(0, c.add_gate(GateKind::And, Ref::input(0), Ref::input(1)));
  c.set_output(1, c.add_gate(GateKind::Or, Ref::input(0), Ref::input(1)));
  const MonotoneCircuit s = specialize(c, 1, true);
  const std::vector<std::size_t> only = {1};
  EXPECT_EQ(render_gate_list(s, only), "# inputs 2\n# pinned x1 = 1\nout1 = 1\n");
}

TEST(GateListTest, KeepOutputsPrunesCones) {
  MonotoneCircuit c = network_to_circuit(van_voorhis16());
  const std::size_t before = c.gates().size();
  const std::size_t cone = cone_size(c, 8);
  const std::vector<std::size_t> keep = {8};
  c.keep_outputs(keep);
  EXPECT_EQ(c.gates().size(), cone);
  EXPECT_LT(cone, before);
  EXPECT_TRUE(is_threshold(c, 8, 8, 16));
  EXPECT_EQ(cone_depth(c, 8), 9u);
}

}  // namespace
}  // namespace sortnet
