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

#include "sortnet/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sortnet/constructions.hpp"
#include "test_support.hpp"

namespace sortnet {
namespace {

using Bits = std::vector<std::uint8_t>;

TEST(VerifyTest, SingleComparatorSortsTwo) {
  Network net(2);
  net.add(0, 1);
  EXPECT_TRUE(verify_sorts_binary(net).sorts());
}

TEST(VerifyTest, EmptyNetworkFailsWithLeastCounterexample) {
  const SortVerdict v = verify_sorts_binary(Network(2));
  ASSERT_FALSE(v.sorts());
  EXPECT_EQ(*v.counterexample, (Bits{1, 0}));
}

TEST(VerifyTest, WidthOneAlwaysSorts) {
  EXPECT_TRUE(verify_sorts_binary(Network(1)).sorts());
}

TEST(VerifyTest, Green16Sorts) {
  EXPECT_TRUE(verify_sorts_binary(green16()).sorts());
}

TEST(VerifyTest, CapIsEnforced) {
  EXPECT_THROW(verify_sorts_binary(Network(25)), network_error);
  EXPECT_THROW(infer_poset(Network(25)), network_error);
  ExhaustiveOptions tight;
  tight.cap = 8;
  EXPECT_THROW(verify_sorts_binary(Network(9), tight), network_error);
  EXPECT_THROW(verify_sorts_binary_naive(Network(9), tight), network_error);
}

TEST(VerifyTest, Batcher32NeedsRaisedCap) {
  ExhaustiveOptions opts;
  opts.cap = 32;
  // 2^32 inputs is too slow for a unit test; only the cap logic is checked.
  EXPECT_THROW(verify_sorts_binary(batcher_sorter(32)), network_error);
  EXPECT_NO_THROW(detail::check_cap(32, opts));
}

TEST(VerifyTest, Width20UsesManyChunksAndStaysDeterministic) {
  // Odd-even merge sort on 16 wires plus a 4-wire tail that is never merged.
  Network net(20);
  for (const Comparator& c : batcher_sorter(16)) net.add(c);
  ExhaustiveOptions one, many;
  one.threads = 1;
  many.threads = 7;
  const SortVerdict a = verify_sorts_binary(net, one);
  const SortVerdict b = verify_sorts_binary(net, many);
  ASSERT_FALSE(a.sorts());
  EXPECT_EQ(a.counterexample, b.counterexample);
  EXPECT_EQ(a.counterexample, verify_sorts_binary_naive(net).counterexample);
}

TEST(VerifyTest, BitParallelAgreesWithNaiveOnRandomNetworks) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> width(1, 12);
  int sorting = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t w = width(rng);
    Network net(w);
    if (w >= 2) {
      // Mix genuine sorters with random prefixes so both verdicts occur.
      if (trial % 3 == 0 && std::has_single_bit(w)) {
        net = batcher_sorter(w);
      } else {
        net = testing::random_network(rng, w, w * w / 2 + trial % 5);
      }
    }
    const SortVerdict fast = verify_sorts_binary(net);
    const SortVerdict slow = verify_sorts_binary_naive(net);
    ASSERT_EQ(fast.counterexample, slow.counterexample) << "trial " << trial;
    sorting += fast.sorts();
  }
  EXPECT_GT(sorting, 0);
  EXPECT_LT(sorting, 100);
}

TEST(CounterexampleTest, EmptyWidthTwo) {
  const auto perm = counterexample_permutation(Network(2), Bits{1, 0});
  EXPECT_EQ(perm, (std::vector<std::size_t>{1, 0}));
  const auto out = apply(Network(2), perm);
  EXPECT_FALSE(std::is_sorted(out.begin(), out.end()));
}

TEST(CounterexampleTest, WidthThreeSingleComparator) {
  Network net(3);
  net.add(0, 1);
  const auto perm = counterexample_permutation(net, Bits{0, 1, 0});
  EXPECT_EQ(perm, (std::vector<std::size_t>{0, 2, 1}));
  const auto out = apply(net, perm);
  EXPECT_FALSE(std::is_sorted(out.begin(), out.end()));
}

TEST(CounterexampleTest, RejectsInputTheNetworkSorts) {
  EXPECT_THROW(counterexample_permutation(green16(), Bits(16, 0)), network_error);
  Network net(2);
  net.add(0, 1);
  EXPECT_THROW(counterexample_permutation(net, Bits{1, 0}), network_error);
  EXPECT_THROW(counterexample_permutation(net, Bits{1}), network_error);
}

TEST(ZeroOneSoundnessTest, VerifiedSortersSortRandomPermutations) {
  std::mt19937_64 rng(12345);
  for (const Network& net : {green16(), van_voorhis16(), batcher_sorter(16)}) {
    ASSERT_TRUE(verify_sorts_binary(net).sorts());
    std::vector<int> p(16);
    for (int trial = 0; trial < 10000; ++trial) {
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      const auto out = apply(net, p);
      ASSERT_TRUE(std::is_sorted(out.begin(), out.end()));
    }
  }
}

TEST(ZeroOneSoundnessTest, CounterexamplesLiftToFailingPermutations) {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::size_t> width(2, 12);
  int lifted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t w = width(rng);
    const Network net = testing::random_network(rng, w, w);
    const SortVerdict v = verify_sorts_binary(net);
    if (v.sorts()) continue;
    const auto perm = counterexample_permutation(net, *v.counterexample);
    std::vector<std::size_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> ids(w);
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    ASSERT_EQ(sorted, ids);
    const auto out = apply(net, perm);
    ASSERT_FALSE(std::is_sorted(out.begin(), out.end()));
    ++lifted;
  }
  EXPECT_GT(lifted, 100);
}

TEST(InferPosetTest, SingleComparatorChain) {
  Network net(2);
  net.add(0, 1);
  const Poset p = infer_poset(net);
  EXPECT_TRUE(p.leq(0, 1));
  EXPECT_FALSE(p.leq(1, 0));
  EXPECT_EQ(p.relation_count(), 3u);
}

TEST(InferPosetTest, HypercubeTwoIsDiamond) {
  const Poset p = infer_poset(hypercube_phase(2));
  EXPECT_EQ(p, testing::brute_force_poset(hypercube_phase(2)));
  // 0 below 1 and 2, both below 3, 1 and 2 incomparable.
  EXPECT_TRUE(p.less(0, 1));
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_TRUE(p.less(1, 3));
  EXPECT_TRUE(p.less(2, 3));
  EXPECT_TRUE(p.less(0, 3));
  EXPECT_FALSE(p.comparable(1, 2));
  EXPECT_EQ(p.relation_count(), 9u);
}

TEST(InferPosetTest, Green16IsTotalOrder) {
  EXPECT_TRUE(is_total_order_by_index(infer_poset(green16())));
}

TEST(InferPosetTest, MatchesBruteForceOnRandomNetworks) {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::size_t> width(1, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t w = width(rng);
    Network net(w);
    if (w >= 2) net = testing::random_network(rng, w, 2 * w);
    const Poset p = infer_poset(net);
    ASSERT_EQ(p, testing::brute_force_poset(net)) << "trial " << trial;
    ASSERT_TRUE(p.is_reflexive());
    ASSERT_TRUE(p.is_transitive());
    ASSERT_TRUE(p.is_antisymmetric());
  }
}

TEST(InferPosetTest, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(4);
  const Network net = testing::random_network(rng, 19, 40);
  ExhaustiveOptions one, many;
  one.threads = 1;
  many.threads = 5;
  EXPECT_EQ(infer_poset(net, one), infer_poset(net, many));
}

TEST(InferPosetTest, SortersGiveTotalOrder) {
  for (std::size_t n : {2u, 4u, 8u, 16u}) {
    const Network b = batcher_sorter(n);
    ASSERT_TRUE(verify_sorts_binary(b).sorts());
    EXPECT_TRUE(is_total_order_by_index(infer_poset(b)));
  }
}

}  // namespace
}  // namespace sortnet
