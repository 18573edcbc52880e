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

// sortnet16: build, verify, analyse and draw comparator networks.
//
// Exit codes: 0 success or claim holds, 1 claim fails or counterexample,
// 2 usage or I/O error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sortnet/sortnet.hpp"

namespace {

using namespace sortnet;

constexpr int kOk = 0;
constexpr int kClaimFailed = 1;
constexpr int kUsage = 2;

/// Usage or I/O problem detected after argument parsing.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Network read_network(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_text(text);
}

template <typename Seq>
std::string joined(const Seq& seq, const char* sep = " ") {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : seq) {
    os << (first ? "" : sep) << static_cast<std::uint64_t>(x);
    first = false;
  }
  return os.str();
}

std::uint64_t parse_seed(const std::string& s) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(s, &used, 0);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw usage_error("bad seed '" + s + "'");
  }
}

std::vector<std::size_t> restriction(const std::string& which) {
  if (which == "M") return {cube16::kM.begin(), cube16::kM.end()};
  if (which == "layer1") return {cube16::kLayer1.begin(), cube16::kLayer1.end()};
  if (which == "layer3") return {cube16::kLayer3.begin(), cube16::kLayer3.end()};
  if (which == "middle") return {cube16::kMiddle.begin(), cube16::kMiddle.end()};
  std::vector<std::size_t> wires;
  std::stringstream ss(which);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      wires.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw usage_error("bad --restrict entry '" + item + "'");
    }
  }
  return wires;
}

int cmd_build(const std::string& name, std::optional<std::size_t> n) {
  Network net(1);
  if (name == "green16") {
    net = green16();
  } else if (name == "vanvoorhis16") {
    net = van_voorhis16();
  } else if (name == "sorter4") {
    net = sorter4();
  } else if (name == "hypercube" || name == "batcher") {
    if (!n) throw usage_error(name + " needs a size argument");
    net = name == "hypercube" ? hypercube_phase(*n) : batcher_sorter(*n);
  }
  if (n && name != "hypercube" && name != "batcher") {
    throw usage_error(name + " takes no size argument");
  }
  std::cout << render_text(net);
  return kOk;
}

int cmd_verify(const Network& net, const ExhaustiveOptions& opts) {
  const SortVerdict v = verify_sorts_binary(net, opts);
  if (v.sorts()) {
    std::cout << "sorts\n";
    return kOk;
  }
  std::cout << "counterexample: " << joined(*v.counterexample) << '\n';
  std::cout << "witness: " << joined(counterexample_permutation(net, *v.counterexample))
            << '\n';
  return kClaimFailed;
}

int cmd_stats(const Network& net) {
  std::cout << "width: " << net.width() << '\n';
  std::cout << "comparators: " << net.size() << ", depth: " << depth(net) << '\n';
  for (PhaseTag t : kAllPhaseTags) {
    if (const std::size_t k = net.count_tag(t)) std::cout << "phase " << to_string(t) << ": " << k << '\n';
  }
  const std::size_t untagged = net.count_tag(std::nullopt);
  if (untagged != 0 && untagged != net.size()) std::cout << "untagged: " << untagged << '\n';
  return kOk;
}

int cmd_poset(const Network& net, std::optional<std::size_t> prefix,
              const std::string& restrict_to, const ExhaustiveOptions& opts) {
  const Network head = prefix ? net.prefix(*prefix) : net;
  Poset p = infer_poset(head, opts);
  if (!restrict_to.empty()) p = p.restrict_to(restriction(restrict_to));
  std::cout << render_poset_dot(p);
  return kOk;
}

int cmd_observations(const std::string& mode, std::size_t samples, std::uint64_t seed) {
  const Network cube = hypercube_phase(4);
  bool ok = true;
  if (mode == "exhaustive" || mode == "both") {
    const ObservationReport r = check_observations(cube);
    std::cout << format_report(r);
    ok = ok && r.all_hold();
  }
  if (mode == "sampled" || mode == "both") {
    const ObservationReport r =
        check_observations(cube, ObservationMode::sampled_permutations, samples, seed);
    std::cout << format_report(r);
    ok = ok && r.all_hold();
  }
  return ok ? kOk : kClaimFailed;
}

int cmd_checks(const std::string& name) {
  bool ok = false;
  std::string detail;
  if (name == "green-m") {
    const Network g = green16();
    const std::size_t end = end_of_phase(g, PhaseTag::tetradB);
    ok = check_green_m_poset(g.prefix(end));
    const TetradDominance d = tetrad_dominance(m_poset(g.prefix(end)));
    detail = "prefix=" + std::to_string(end) + " upper_beats=" + joined(d.upper_beats, ",") +
             " lower_beaten_by=" + joined(d.lower_beaten_by, ",");
  } else if (name == "vv-m") {
    const Network v = van_voorhis16();
    const std::size_t end = end_of_phase(v, PhaseTag::pairs2);
    ok = check_vv_m_poset(v.prefix(end));
    const TetradDominance d = tetrad_dominance(m_poset(v.prefix(end)));
    detail = "prefix=" + std::to_string(end) + " upper_beats=" + joined(d.upper_beats, ",") +
             " lower_beaten_by=" + joined(d.lower_beaten_by, ",");
  } else if (name == "strategy") {
    const Network s = strategy_with_batcher_m();
    ok = verify_sorts_binary(s).sorts();
    detail = "comparators=" + std::to_string(s.size()) + " depth=" + std::to_string(depth(s));
  } else if (name == "depth-regression") {
    const std::size_t fast = depth(green16());
    const std::size_t naive = depth(green16_naive_merge());
    ok = naive >= 11 && fast == 10;
    detail = "depth=" + std::to_string(fast) + " naive_merge_depth=" + std::to_string(naive);
  }
  std::cout << name << ": " << (ok ? "pass" : "fail") << " (" << detail << ")\n";
  return ok ? kOk : kClaimFailed;
}

int cmd_majority(std::size_t inputs, std::optional<std::size_t> threshold,
                 std::size_t pin_input, int pin_value, const ExhaustiveOptions& opts) {
  MonotoneCircuit c = network_to_circuit(van_voorhis16());
  std::size_t bias = 0;
  if (inputs == 15) {
    if (pin_input >= 16) throw usage_error("--pin-input must be below 16");
    c = specialize(c, pin_input, pin_value == 1);
    bias = static_cast<std::size_t>(pin_value);
  }
  const std::size_t k = threshold.value_or((inputs + 1) / 2);
  if (k < 1 || k > inputs) throw usage_error("--threshold must be in 1.." + std::to_string(inputs));
  // Output wire j of a 16-sorter is 1 iff at least 16 - j inputs are 1.
  if (k + bias > 16) throw usage_error("threshold out of reach for this pin");
  const std::size_t wire = 16 - k - bias;
  const std::vector<std::size_t> only = {wire};
  c.keep_outputs(only);
  std::cout << render_gate_list(c, only);
  std::cout << "# cone depth: " << cone_depth(c, wire) << '\n';
  std::cout << "# gates: " << cone_size(c, wire) << '\n';
  const bool ok = is_threshold(c, wire, k, inputs, opts);
  std::cout << "# threshold " << k << " of " << inputs << " on out" << wire << ": "
            << (ok ? "holds" : "fails") << '\n';
  return ok ? kOk : kClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Comparator networks on up to 16 wires: build, verify, analyse, draw"};
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t cap = kDefaultVerifyCap;
  app.add_option("--cap", cap, "Largest width checked exhaustively")->check(CLI::Range(1, 63));

  auto* build = app.add_subcommand("build", "Print a built-in network in text format");
  std::string build_name;
  std::optional<std::size_t> build_n;
  build->add_option("name", build_name, "Network to build")
      ->required()
      ->check(CLI::IsMember({"green16", "vanvoorhis16", "hypercube", "batcher", "sorter4"}));
  build->add_option("n", build_n, "Dimension (hypercube) or width (batcher)");

  std::string file;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "Network text file (default: stdin)");
  };

  auto* verify = app.add_subcommand("verify", "Zero-one check of a network");
  add_file(verify);
  auto* stats = app.add_subcommand("stats", "Width, size, depth and phase counts");
  add_file(stats);

  auto* poset = app.add_subcommand("poset", "DOT Hasse diagram of the inferred order");
  add_file(poset);
  std::optional<std::size_t> prefix;
  std::string restrict_to;
  poset->add_option("--prefix", prefix, "Use only the first K comparators");
  poset->add_option("--restrict", restrict_to, "M, layer1, layer3, middle, or a wire list");

  auto* diagram = app.add_subcommand("diagram", "Draw a network");
  add_file(diagram);
  std::string format = "ascii";
  DiagramOptions dopts;
  bool no_labels = false;
  bool no_color = false;
  diagram->add_option("--format", format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  diagram->add_flag("--flip", dopts.flip, "Wire 0 on top");
  diagram->add_flag("--no-labels", no_labels, "Omit block labels");
  diagram->add_flag("--no-color", no_color, "Black bridges in SVG");

  auto* observations =
      app.add_subcommand("observations", "Rank claims after the 4-cube phase");
  std::size_t samples = kDefaultSamples;
  std::string seed_text = "0xc0ffee";
  std::string obs_mode = "both";
  observations->add_option("--samples", samples, "Random permutations to try");
  observations->add_option("--seed", seed_text, "RNG seed (decimal or 0x hex)");
  observations->add_option("--mode", obs_mode, "exhaustive, sampled or both")
      ->check(CLI::IsMember({"exhaustive", "sampled", "both"}));

  auto* checks = app.add_subcommand("checks", "Structural properties of the constructions");
  std::string check_name;
  checks->add_option("name", check_name)
      ->required()
      ->check(CLI::IsMember({"green-m", "vv-m", "strategy", "depth-regression"}));

  auto* majority = app.add_subcommand("majority", "Majority circuit from the depth-9 sorter");
  std::size_t maj_inputs = 16;
  std::optional<std::size_t> threshold;
  std::size_t pin_input = 15;
  int pin_value = 0;
  majority->add_option("inputs", maj_inputs)->required()->check(CLI::IsMember({15, 16}));
  majority->add_option("--threshold", threshold, "Output is 1 iff at least k inputs are 1");
  majority->add_option("--pin-input", pin_input, "Input fixed for 15 variables");
  majority->add_option("--pin-value", pin_value, "Value of the fixed input")
      ->check(CLI::IsMember({0, 1}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  ExhaustiveOptions opts;
  opts.cap = cap;
  try {
    if (*build) return cmd_build(build_name, build_n);
    if (*verify) return cmd_verify(read_network(file), opts);
    if (*stats) return cmd_stats(read_network(file));
    if (*poset) return cmd_poset(read_network(file), prefix, restrict_to, opts);
    if (*diagram) {
      dopts.block_labels = !no_labels;
      dopts.color = !no_color;
      std::cout << render_diagram(read_network(file),
                                  format == "svg" ? DiagramFormat::svg : DiagramFormat::ascii,
                                  dopts);
      return kOk;
    }
    if (*observations) return cmd_observations(obs_mode, samples, parse_seed(seed_text));
    if (*checks) return cmd_checks(check_name);
    if (*majority) return cmd_majority(maj_inputs, threshold, pin_input, pin_value, opts);
  } catch (const usage_error& e) {
    std::cerr << "sortnet16: " << e.what() << '\n';
    return kUsage;
  } catch (const network_error& e) {
    std::cerr << "sortnet16: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
