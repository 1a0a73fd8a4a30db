// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "fixtures.hpp"
#include "stag/connectivity.hpp"
#include "stag/error.hpp"
#include "stag/factorization.hpp"
#include "stag/generators.hpp"
#include "stag/io.hpp"
#include "stag/isomorphism.hpp"
#include "stag/oracles.hpp"
#include "stag/params.hpp"
#include "stag/recognition.hpp"
#include "stag/spanning_trees.hpp"
#include "stag/stag.hpp"

using namespace stag;
using namespace stag::testing;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// Graphs fed to the parameter audit.
std::vector<Graph> audited;

// Random connected graph on 2..7 vertices with at most 2000 spanning trees.
Graph random_small_connected(std::uint64_t seed) {
  Rng rng(seed);
  for (;;) {
    const int n = rng.between(2, 7);
    const int m = rng.between(n - 1, n * (n - 1) / 2);
    const Graph g = random_connected_graph(n, m, rng.below(1u << 30));
    if (count_spanning_trees(g) <= 2000) return g;
  }
}

// Random 2-connected graph on 3..6 vertices.
Graph random_small_two_connected(std::uint64_t seed) {
  Rng rng(seed);
  const int n = rng.between(3, 6);
  const int m = rng.between(n, n * (n - 1) / 2);
  return random_two_connected_graph(n, m, rng.below(1u << 30));
}

Result construction() {
  const auto start = Clock::now();
  std::vector<Graph> graphs;
  for (const auto& name : construction_fixtures()) graphs.push_back(fixture(name));
  for (std::uint64_t i = 0; i < 100; ++i) graphs.push_back(random_small_connected(1000 + i));
  int mismatches = 0;
  for (const auto& g : graphs) {
    const auto fast = build_stag(g);
    const auto slow = brute_force_stag(g);
    if (!(fast.graph == slow.graph) || fast.trees != slow.trees) ++mismatches;
    audited.push_back(g);
  }
  const double t = seconds_since(start);
  return {mismatches == 0 && t < 60.0,
          std::to_string(graphs.size()) + " graphs, " + std::to_string(mismatches) + " mismatches, " + fmt_seconds(t)};
}

Result counting() {
  const std::map<std::string, int> pinned = {{"C3", 3}, {"K4", 16}, {"diamond", 8},
                                             {"theta", 12}, {"bowtie", 9}, {"K5", 125}};
  int bad = 0;
  std::string which;
  for (const auto& [name, want] : expected_values()) {
    const Graph g = fixture(name);
    const BigInt count = count_spanning_trees(g);
    const auto listed = enumerate_spanning_trees(g).size();
    const auto subsets = brute_force_trees(g).size();
    bool ok = count == listed && listed == subsets && static_cast<int>(subsets) == want.trees;
    if (pinned.contains(name)) ok = ok && count == pinned.at(name);
    if (!ok) {
      ++bad;
      which += " " + name;
    }
    audited.push_back(g);
  }
  return {bad == 0, std::to_string(expected_values().size()) + " fixtures" + (bad ? ", wrong:" + which : "")};
}

Result block_product() {
  int bad = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Graph g = random_multi_block_graph(8, 3000 + i, 2000);
    if (block_decomposition(g).blocks.size() < 2 || count_spanning_trees(g) > 2000) ++bad;
    else if (!are_isomorphic(build_stag(g, 2000).graph, product_of_block_stags(g, 2000).graph)) ++bad;
    audited.push_back(g);
  }
  return {bad == 0, "50 multi-block graphs, " + std::to_string(bad) + " failures"};
}

Result primality() {
  const auto start = Clock::now();
  int bad = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Graph g = random_small_two_connected(4000 + i);
    if (!is_two_connected(g) || !is_prime(build_stag(g).graph)) ++bad;
    audited.push_back(g);
  }
  const double t = seconds_since(start);
  return {bad == 0 && t < 120.0, "50 graphs, " + std::to_string(bad) + " not prime, " + fmt_seconds(t)};
}

Result round_trip() {
  std::vector<Graph> graphs;
  for (const auto& name : minimal_preimage_fixtures()) graphs.push_back(fixture(name));
  for (std::uint64_t i = 0; i < 50; ++i) graphs.push_back(random_small_two_connected(5000 + i));
  int bad = 0;
  for (const auto& g : graphs) {
    const Graph h = build_stag(g).graph;
    const auto v = try_invert(h);
    if (!v.is_stag || v.verification != "iso" || !are_isomorphic(build_stag(*v.preimage).graph, h)) ++bad;
    audited.push_back(g);
  }
  return {bad == 0, std::to_string(graphs.size()) + " graphs, " + std::to_string(bad) + " failures"};
}

Result rejection() {
  Graph star(4);
  for (VertexId v = 1; v < 4; ++v) star.add_edge(0, v);
  const std::vector<std::pair<std::string, Graph>> corpus = {
      {"P3", path_graph(3)}, {"P4", path_graph(4)}, {"C6", cycle_graph(6)}, {"K1,3", star}, {"Petersen", fixture("petersen")}};
  int agree = 0;
  std::string off;
  for (const auto& [name, h] : corpus) {
    const bool rejected = !try_invert(h).is_stag;
    const bool none = !brute_force_is_stag(h, 7).has_value();
    if (rejected && none) ++agree;
    else off += " " + name;
  }
  return {agree == static_cast<int>(corpus.size()),
          std::to_string(agree) + "/" + std::to_string(corpus.size()) + " rejected and confirmed" +
              (off.empty() ? "" : ", disagree:" + off)};
}

Result witness() {
  long long scanned = 0, missing = 0;
  std::string example;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Graph g = random_small_two_connected(6000 + i);
    for (const auto& t : enumerate_spanning_trees(g)) {
      for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = a + 1; b < t.size(); ++b) {
          ++scanned;
          try {
            witness_edge_for_pair(g, t, t.edges()[a], t.edges()[b]);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoWitness) throw;
            if (missing++ == 0) {
              std::ostringstream os;
              os << "first at graph " << i << " [" << to_edge_list(g).size() << " bytes], tree " << format_tree(t)
                 << ", edges " << t.edges()[a] << "," << t.edges()[b];
              example = os.str();
            }
          }
        }
    }
  }
  return {missing == 0, std::to_string(scanned) + " (T, e1, e2) triples, " + std::to_string(missing) + " without witness" +
                            (example.empty() ? "" : "; " + example)};
}

Result parameters() {
  int bad = 0;
  for (const auto& g : audited)
    if (!param_report(g, 2000).all_hold()) ++bad;
  return {bad == 0, std::to_string(audited.size()) + " graphs, " + std::to_string(bad) + " violations"};
}

Result transformations() {
  std::vector<std::string> names = construction_fixtures();
  names.push_back("K5");
  long long trees_checked = 0;
  int bad = 0;
  for (const auto& name : names) {
    const Graph g = fixture(name);
    const auto trees = enumerate_spanning_trees(g);
    for (const auto& t : trees) {
      std::set<SpanningTree> by_diff;
      for (const auto& u : trees) {
        std::vector<EdgeId> d;
        std::set_symmetric_difference(t.edges().begin(), t.edges().end(), u.edges().begin(), u.edges().end(),
                                      std::back_inserter(d));
        if (d.size() == 2) by_diff.insert(u);
      }
      const auto one = type1_neighbors(g, t), two = type2_neighbors(g, t);
      if (std::set<SpanningTree>(one.begin(), one.end()) != by_diff ||
          std::set<SpanningTree>(two.begin(), two.end()) != by_diff)
        ++bad;
      ++trees_checked;
    }
  }
  return {bad == 0, std::to_string(trees_checked) + " trees, " + std::to_string(bad) + " mismatches"};
}

Result determinism() {
  const fs::path dir = fs::temp_directory_path() / ("stag_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string cli = STAG_CLI_PATH;
  write_text_file(dir / "theta.txt", fixture_texts().at("theta"));
  write_text_file(dir / "petersen.txt", fixture_texts().at("petersen"));
  auto sh = [&](const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  const std::vector<std::pair<std::string, std::vector<std::string>>> runs = {
      {"random --n 6 --m 9 --seed 7 --two-connected -o {}/g.txt", {"g.txt"}},
      {"random --n 8 --multi-block --seed 3 -o {}/mb.json", {"mb.json"}},
      {"aux -i {}/g.txt -o {}/aux.json", {"aux.json"}},
      {"aux -i {}/g.txt -o {}/aux.dot", {"aux.dot"}},
      {"trees -i {}/theta.txt -o {}/trees.txt", {"trees.txt"}},
      {"invert -i {}/aux.json -o {}/pre.txt", {"pre.txt"}},
      {"factor -i {}/aux.json -o {}/fac", {"fac.factor1.txt", "fac.coordinates.json"}},
      {"params -i {}/g.txt -o {}/params.json", {"params.json"}},
      {"preimages -i {}/theta.txt --budget 3 -o {}/pi", {"pi.1.txt", "pi.3.txt"}},
      {"blocks -i {}/mb.json -o {}/blocks.json", {"blocks.json"}},
  };
  auto expand = [&](std::string s) {
    for (auto p = s.find("{}"); p != std::string::npos; p = s.find("{}")) s.replace(p, 2, dir.string());
    return s;
  };
  std::map<std::string, std::string> first;
  int bad = 0, files = 0;
  for (int round = 0; round < 2; ++round) {
    for (const auto& [args, outputs] : runs) {
      const int code = sh(expand(args));
      for (const auto& f : outputs) {
        const fs::path p = dir / f;
        if (code != 0 || !fs::exists(p)) {
          ++bad;
          continue;
        }
        const std::string bytes = read_text_file(p);
        if (round == 0) {
          first[f] = bytes;
          ++files;
        } else if (first[f] != bytes) {
          ++bad;
        }
        if (round == 0) continue;
      }
    }
    // second round rewrites everything from scratch
    if (round == 0)
      for (const auto& [args, outputs] : runs)
        for (const auto& f : outputs) fs::remove(dir / f);
  }
  const int rejected = sh(expand("invert -i {}/petersen.txt"));
  fs::remove_all(dir);
  const bool exit_ok = WIFEXITED(rejected) && WEXITSTATUS(rejected) == 1;
  return {bad == 0 && exit_ok, std::to_string(files) + " artifacts compared across two runs, " + std::to_string(bad) +
                                   " differences" + (exit_ok ? "" : ", Petersen exit code wrong")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"construction", construction},        {"counting", counting},   {"block product", block_product},
      {"primality", primality},              {"round trip", round_trip}, {"rejection", rejection},
      {"two-edge witness", witness},         {"parameters", parameters}, {"unit transformations", transformations},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.pass) ++failed;
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (r.pass ? "PASS" : "FAIL") << "  "
              << r.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
