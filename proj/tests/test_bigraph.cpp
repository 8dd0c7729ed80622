// Copyright 2026 The bipancyclic Authors.
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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>
#include <set>

#include "bpc/bigraph.hpp"
#include "bpc/rng.hpp"
#include "oracles.hpp"

using namespace bpc;

namespace {

// Reference mixer written out from its published constants.
std::uint64_t mix_ref(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void check_bipartite(const BalancedBipartiteGraph& g) {
  for (const auto& e : g.edges()) {
    CHECK(e.even % 2 == 0);
    CHECK(e.odd % 2 == 1);
    CHECK(e.even < g.order());
    CHECK(e.odd < g.order());
  }
}

}  // namespace

TEST_CASE("complete_bipartite small cases") {
  const auto k2 = complete_bipartite(2);
  CHECK(k2.edge_count() == 4);
  for (auto [x, y] : {std::pair{0, 1}, {0, 3}, {2, 1}, {2, 3}}) CHECK(k2.has_edge(x, y));
  CHECK(complete_bipartite(3).edge_count() == 9);
  const auto k4 = complete_bipartite(4);
  for (int i = 0; i < 8; ++i) CHECK(k4.has_edge(i, (i + 1) % 8));
  for (int n = 1; n <= 70; n += 23) CHECK(complete_bipartite(n).edge_count() == std::size_t(n) * n);
}

TEST_CASE("edges rejects same parity and bad labels") {
  CHECK_THROWS_AS(Edge::between(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(Edge::between(-1, 2), std::invalid_argument);
  CHECK(Edge::between(5, 2) == Edge{2, 5});
  CHECK_THROWS_AS(BalancedBipartiteGraph(0), std::invalid_argument);
  const std::vector<Edge> bad{{0, 9}};
  CHECK_THROWS_AS(BalancedBipartiteGraph::from_edges(4, bad), std::invalid_argument);
  const auto g = complete_bipartite(3);
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(0, 99));
}

TEST_CASE("sample_random boundary probabilities") {
  CHECK(sample_random({100, 0.0, 7}).edge_count() == 0);
  CHECK(sample_random({100, 1.0, 7}) == complete_bipartite(100));
  CHECK_THROWS_AS(sample_random({10, 1.5, 7}), std::invalid_argument);
  CHECK_THROWS_AS(sample_random({0, 0.5, 7}), std::invalid_argument);
}

TEST_CASE("sample_random golden count and Chernoff band") {
  const auto g = sample_random({200, 0.1, 42});
  // Frozen from the first run of this generator.
  CHECK(g.edge_count() == 3992);
  CHECK(std::abs(double(g.edge_count()) - 4000.0) <= 0.3 * 4000.0);
  check_bipartite(g);
}

TEST_CASE("sample_random follows the documented draw order") {
  // One uniform draw per pair, ascending even label then ascending odd label.
  const int n = 17;
  const double p = 0.3;
  std::mt19937_64 engine(99);
  const auto g = sample_random({n, p, 99});
  for (int u = 0; u < 2 * n; u += 2)
    for (int v = 1; v < 2 * n; v += 2) {
      const double x = double(engine() >> 11) * 0x1.0p-53;
      CHECK(g.has_edge(u, v) == (x < p));
    }
}

TEST_CASE("sample_random is a pure function of its model") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    CHECK(sample_random({30, 0.2, s}) == sample_random({30, 0.2, s}));
  }
  CHECK_FALSE(sample_random({30, 0.5, 1}) == sample_random({30, 0.5, 2}));
}

TEST_CASE("seed derivation matches the reference mixer") {
  for (std::uint64_t m : {0ULL, 1ULL, 42ULL, 0xdeadbeefULL})
    for (std::uint64_t t = 0; t < 20; ++t) CHECK(derive_seed(m, t) == mix_ref(m ^ mix_ref(t)));
  CHECK(mix_ref(0) == 0xe220a8397b1dcdafULL);
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("Rng helpers stay in range") {
  Rng rng(5);
  for (int k = 0; k < 1000; ++k) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(rng.below(7) < 7);
  }
  Rng a(11), b(11);
  for (int k = 0; k < 50; ++k) CHECK(a.next() == b.next());
}

TEST_CASE("remove_edges and add_edges") {
  const auto k2 = complete_bipartite(2);
  const std::vector<Edge> one{{0, 1}};
  CHECK(remove_edges(k2, one).edge_count() == 3);
  CHECK(remove_edges(k2, {}) == k2);
  const auto cycle = standard_cycle_edges(4);
  const auto c8 = BalancedBipartiteGraph::from_edges(4, cycle);
  const auto path = remove_edges(c8, one);
  CHECK(path.edge_count() == 7);
  CHECK(path.degree(0) == 1);
  CHECK_THROWS(remove_edges(path, one));
  CHECK(add_edges(path, one) == c8);
}

TEST_CASE("remove_edges never increases edge count") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = sample_random({12, 0.5, rng.next()});
    auto edges = g.edges();
    std::vector<Edge> victims;
    for (const auto& e : edges)
      if (rng.bernoulli(0.3)) victims.push_back(e);
    const auto h = remove_edges(g, victims);
    CHECK(h.edge_count() == g.edge_count() - victims.size());
    CHECK(g.contains(h));
    check_bipartite(h);
  }
}

TEST_CASE("standard cycle") {
  CHECK_THROWS(standard_cycle_edges(1));
  const auto c = standard_cycle_edges(5);
  CHECK(c.size() == 10);
  const auto g = BalancedBipartiteGraph::from_edges(5, c);
  for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("circ_dist") {
  CHECK(circ_dist(3, 8) == 3);
  CHECK(circ_dist(7, 8) == 1);
  CHECK(circ_dist(4, 8) == 4);
  for (int m = 2; m <= 20; m += 2) {
    CHECK(circ_dist(0, m) == 0);
    for (int i = -3 * m; i <= 3 * m; ++i) {
      CHECK(circ_dist(i, m) == circ_dist(m - i, m));
      CHECK(circ_dist(i, m) == oracle::circ(i, m));
    }
  }
}

TEST_CASE("chernoff_tail_bound formula") {
  CHECK(chernoff_tail_bound(1.0, 10.0) == doctest::Approx(2 * std::exp(-10.0 / 3)));
  CHECK(chernoff_tail_bound(1.0, 10.0) == doctest::Approx(0.0713).epsilon(1e-3));
  CHECK(chernoff_tail_bound(1.5, 12.0) == doctest::Approx(2.47e-4).epsilon(1e-2));
  CHECK_THROWS_AS(chernoff_tail_bound(0.5, 0.0), std::invalid_argument);
}

TEST_CASE("Chernoff bound dominates the exact binomial tail") {
  for (double eps : {0.1, 0.5, 1.0, 1.4}) {
    for (auto [big_n, p] : {std::pair{1000LL, 0.1}, {10000LL, 0.1}, {400LL, 0.3}}) {
      const double exact = oracle::binomial_tail(big_n, p, eps);
      CHECK(exact <= chernoff_tail_bound(eps, double(big_n) * p) + 1e-12);
    }
  }
}

TEST_CASE("ParityPermutation") {
  CHECK_THROWS_AS(ParityPermutation({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ParityPermutation({0, 1, 0, 3}), std::invalid_argument);
  const ParityPermutation perm({2, 3, 0, 1, 4, 5});
  CHECK(perm(Edge{0, 1}) == Edge{2, 3});
  CHECK(perm.inverse()(2) == 0);
  const auto g = sample_random({3, 0.5, 8});
  CHECK(perm.inverse().apply(perm.apply(g)) == g);
  CHECK(perm.apply(g).edge_count() == g.edge_count());
  CHECK(ParityPermutation::identity(3).apply(g) == g);
}

TEST_CASE("bbg round trip and exact bytes") {
  const std::vector<Edge> edges{{2, 1}, {0, 3}, {0, 1}};
  const auto g = BalancedBipartiteGraph::from_edges(2, edges);
  CHECK(to_bbg(g) == "bbg 1\nn 2\n0 1\n0 3\n2 1\n");
  CHECK(parse_bbg(to_bbg(g)) == g);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto h = sample_random({9, 0.4, s});
    CHECK(parse_bbg(to_bbg(h)) == h);
  }
  const auto path = std::filesystem::temp_directory_path() / "bpc_test_graph.bbg";
  write_bbg_file(path.string(), g);
  CHECK(read_bbg_file(path.string()) == g);
  std::filesystem::remove(path);
}

TEST_CASE("bbg parser is strict") {
  for (const char* text : {"", "bbg 2\nn 2\n", "bbg 1\nn 2\n0 2\n", "bbg 1\nn 2\n0 1 \n",
                           "bbg 1\nn 2\n0 1", "bbg 1\nn 2\n2 1\n0 1\n", "bbg 1\nn 2\n0 1\n0 1\n",
                           "bbg 1\nn x\n", "bbg 1\r\nn 2\r\n", "bbg 1\nn 2\n0 7\n"}) {
    CHECK_THROWS_AS(parse_bbg(text), ParseError);
  }
  CHECK_THROWS_AS(read_bbg_file("/nonexistent/graph.bbg"), ParseError);
}
