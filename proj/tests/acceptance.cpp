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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Seeds are fixed so the output is reproducible.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sortnet/sortnet.hpp"

namespace {

using namespace sortnet;

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome criterion1() {
  const Network g = green16();
  const bool ok = g.size() == 60 && depth(g) == 10 && verify_sorts_binary(g).sorts();
  return {ok, "comparators=" + std::to_string(g.size()) + " depth=" + std::to_string(depth(g))};
}

Outcome criterion2() {
  const Network v = van_voorhis16();
  const bool ok = v.size() == 61 && depth(v) == 9 && verify_sorts_binary(v).sorts();
  return {ok, "comparators=" + std::to_string(v.size()) + " depth=" + std::to_string(depth(v))};
}

Outcome criterion3() {
  bool ok = true;
  for (const Network& net : {green16(), van_voorhis16()}) {
    const Network prefix = net.prefix(32);
    ok = ok && depth(prefix) == 4 && check_cube_poset(prefix, 4);
  }
  return {ok, "32-comparator prefixes, depth 4, cube order"};
}

Outcome criterion4() {
  const Network cube = hypercube_phase(4);
  const ObservationReport exact = check_observations(cube);
  const ObservationReport sampled =
      check_observations(cube, ObservationMode::sampled_permutations, 10000, kDefaultSeed);
  return {exact.all_hold() && sampled.all_hold(),
          "binary=" + std::to_string(exact.inputs_checked) +
              " permutations=" + std::to_string(sampled.inputs_checked)};
}

Outcome criterion5() {
  const Network g = green16();
  const Network v = van_voorhis16();
  const bool green_ok = check_green_m_poset(g.prefix(end_of_phase(g, PhaseTag::tetradB)));
  const bool vv_ok = check_vv_m_poset(v.prefix(end_of_phase(v, PhaseTag::pairs2)));
  return {green_ok && vv_ok, std::string("green-m=") + (green_ok ? "ok" : "bad") +
                                 " vv-m=" + (vv_ok ? "ok" : "bad")};
}

Outcome criterion6() {
  const Network s = strategy_with_batcher_m();
  return {verify_sorts_binary(s).sorts(), "comparators=" + std::to_string(s.size())};
}

Outcome criterion7() {
  const std::size_t d = depth(green16_naive_merge());
  return {d >= 11, "naive merge depth=" + std::to_string(d)};
}

Outcome criterion8() {
  const MonotoneCircuit c = network_to_circuit(van_voorhis16());
  bool ok = cone_depth(c, 7) <= 9 && cone_depth(c, 8) <= 9;
  ok = ok && is_threshold(c, 8, 8, 16) && is_threshold(c, 7, 9, 16);
  const MonotoneCircuit zero = specialize(c, 15, false);
  const MonotoneCircuit one = specialize(c, 15, true);
  ok = ok && cone_depth(zero, 8) <= 9 && is_threshold(zero, 8, 8, 15);
  ok = ok && cone_depth(one, 7) <= 9 && is_threshold(one, 7, 8, 15);
  return {ok, "maj16 depths " + std::to_string(cone_depth(c, 8)) + "," +
                  std::to_string(cone_depth(c, 7)) + " maj15 depth " +
                  std::to_string(cone_depth(zero, 8))};
}

Outcome criterion9() {
  const Network b = batcher_sorter(16);
  const bool ok = b.size() == 63 && depth(b) == 10 && b.size() > green16().size() &&
                  verify_sorts_binary(b).sorts();
  return {ok, "comparators=" + std::to_string(b.size()) + " depth=" + std::to_string(depth(b))};
}

Network random_network(std::mt19937_64& rng, std::size_t width, std::size_t size) {
  Network net(width);
  std::uniform_int_distribution<std::size_t> wire(0, width - 1);
  while (net.size() < size) {
    const std::size_t a = wire(rng), b = wire(rng);
    if (a != b) net.add(std::min(a, b), std::max(a, b));
  }
  return net;
}

Outcome criterion10() {
  std::mt19937_64 rng(0xACCE);
  std::uniform_int_distribution<std::size_t> width(2, 12);
  std::uniform_int_distribution<int> value(-9, 9);
  std::size_t failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Network net = random_network(rng, width(rng), 20);
    std::vector<int> in(net.width());
    for (int& x : in) x = value(rng);
    auto out = apply(net, in);
    std::sort(in.begin(), in.end());
    std::sort(out.begin(), out.end());
    failures += in != out;
    failures += verify_sorts_binary(net).counterexample !=
                verify_sorts_binary_naive(net).counterexample;
    TextOptions opts;
    opts.layer_separators = trial % 2 == 0;
    failures += parse_text(render_text(net, opts)) != net;
    const Poset p = infer_poset(net);
    const auto edges = hasse_edges(p);
    std::vector<std::size_t> labels(p.size());
    std::iota(labels.begin(), labels.end(), std::size_t{0});
    failures += transitive_closure(labels, edges) != p;
  }
  return {failures == 0, "200 seeded networks, failures=" + std::to_string(failures)};
}

Outcome criterion11() {
  const Network g = green16();
  double best_ms = 1e9;
  for (int run = 0; run < 5; ++run) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool sorts = verify_sorts_binary(g).sorts();
    const auto t1 = std::chrono::steady_clock::now();
    if (!sorts) return {false, "green16 did not verify"};
    best_ms = std::min(best_ms, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "best of 5: %.2f ms", best_ms);
  return {best_ms < 50.0, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"green16: 60 comparators, depth 10, sorts", criterion1},
      {"van_voorhis16: 61 comparators, depth 9, sorts", criterion2},
      {"32-comparator prefixes give the 4-cube poset", criterion3},
      {"rank observations a-d hold after the cube phase", criterion4},
      {"M-poset dominance after tetrads and second pairs", criterion5},
      {"Batcher 8-sorter on M completes a 16-sorter", criterion6},
      {"naive merge order costs depth >= 11", criterion7},
      {"majority of 16 and 15 inputs in depth 9", criterion8},
      {"batcher_sorter(16): 63 comparators, depth 10", criterion9},
      {"property suites on seeded corpora", criterion10},
      {"bit-sliced width-16 verification under 50 ms", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %2zu %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
