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

#include "bpc/adversary.hpp"
#include "bpc/rng.hpp"
#include "bpc/spectrum.hpp"
#include "oracles.hpp"

using namespace bpc;

namespace {

BalancedBipartiteGraph cycle_graph(int n) {
  const auto edges = standard_cycle_edges(n);
  return BalancedBipartiteGraph::from_edges(n, edges);
}

oracle::Graph to_oracle(const BalancedBipartiteGraph& g) {
  oracle::Graph o(g.order());
  for (const auto& e : g.edges()) o.add(e.even, e.odd);
  return o;
}

void check_certificates(const BalancedBipartiteGraph& g, const SpectrumReport& r) {
  const auto o = to_oracle(g);
  for (const auto& entry : r.entries) {
    if (entry.status != LengthStatus::certified) continue;
    REQUIRE(entry.cycle);
    CHECK(oracle::is_cycle_in(o, entry.cycle->vertices));
    CHECK(static_cast<int>(entry.cycle->length()) == entry.length);
  }
}

}  // namespace

TEST_CASE("spectrum of K_{4,4} and C_8") {
  for (auto mode : {SpectrumMode::exhaustive, SpectrumMode::certificate}) {
    const auto k = complete_bipartite(4);
    const auto rk = even_cycle_spectrum(k, standard_hamilton(4), mode);
    CHECK(rk.lengths_with(LengthStatus::certified) == std::vector<int>{4, 6, 8});
    check_certificates(k, rk);

    const auto c = cycle_graph(4);
    const auto rc = even_cycle_spectrum(c, standard_hamilton(4), mode);
    CHECK(rc.lengths_with(LengthStatus::certified) == std::vector<int>{8});
    if (mode == SpectrumMode::exhaustive)
      CHECK(rc.lengths_with(LengthStatus::absent) == std::vector<int>{4, 6});
    else
      CHECK(rc.lengths_with(LengthStatus::unknown).empty());
  }
}

TEST_CASE("spectrum JSON shape") {
  const auto r = even_cycle_spectrum(cycle_graph(4), std::nullopt, SpectrumMode::exhaustive);
  const auto j = r.to_json();
  CHECK(j["n"] == 4);
  CHECK(j["mode"] == "exhaustive");
  CHECK(j["lengths"]["4"] == "absent");
  CHECK(j["lengths"]["8"] == "certified");
}

TEST_CASE("fan construction on K_{4,4}: spectrum recorded against enumeration") {
  const auto g = fan_construction(complete_bipartite(4)).graph;
  const auto r = even_cycle_spectrum(g, std::nullopt, SpectrumMode::exhaustive);
  const auto lengths = oracle::cycle_lengths(to_oracle(g));
  for (const auto& e : r.entries) {
    CHECK(e.status != LengthStatus::unknown);
    CHECK((e.status == LengthStatus::certified) == (lengths.count(e.length) == 1));
  }
  check_certificates(g, r);
}

TEST_CASE("is_bipancyclic small cases") {
  CHECK(is_bipancyclic(complete_bipartite(3), std::nullopt, SpectrumMode::exhaustive).kind ==
        BipancyclicVerdict::Kind::yes);
  const auto v = is_bipancyclic(cycle_graph(4), std::nullopt, SpectrumMode::exhaustive);
  CHECK(v.kind == BipancyclicVerdict::Kind::no);
  CHECK(v.missing == std::vector<int>{4, 6});
  for (int n = 2; n <= 6; ++n) {
    CHECK(is_bipancyclic(complete_bipartite(n), std::nullopt, SpectrumMode::exhaustive).kind ==
          BipancyclicVerdict::Kind::yes);
    CHECK(is_bipancyclic(complete_bipartite(n), standard_hamilton(n), SpectrumMode::certificate)
              .kind == BipancyclicVerdict::Kind::yes);
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(even_cycle_spectrum(complete_bipartite(7), std::nullopt, SpectrumMode::exhaustive),
                  std::invalid_argument);
  CHECK_THROWS_AS(even_cycle_spectrum(complete_bipartite(7), std::nullopt, SpectrumMode::certificate),
                  std::invalid_argument);
  const std::vector<Edge> one{{0, 1}};
  const auto broken = remove_edges(cycle_graph(4), one);
  CHECK_THROWS_AS(even_cycle_spectrum(broken, standard_hamilton(4), SpectrumMode::certificate),
                  std::invalid_argument);
}

TEST_CASE("exhaustive mode matches full cycle enumeration") {
  Rng rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 4;
    const auto g = sample_random({n, 0.5, rng.next()});
    const auto r = even_cycle_spectrum(g, std::nullopt, SpectrumMode::exhaustive);
    const auto lengths = oracle::cycle_lengths(to_oracle(g));
    for (const auto& e : r.entries) {
      CHECK(e.status != LengthStatus::unknown);
      CHECK((e.status == LengthStatus::certified) == (lengths.count(e.length) == 1));
    }
    check_certificates(g, r);
  }
}

TEST_CASE("certificate and exhaustive modes agree where both are definitive") {
  Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 4;
    auto g = sample_random({n, 0.35, rng.next()});
    g = add_edges(g, standard_cycle_edges(n));
    const auto ex = even_cycle_spectrum(g, std::nullopt, SpectrumMode::exhaustive);
    SpectrumOptions workers;
    workers.workers = 2;
    const auto cert = even_cycle_spectrum(g, standard_hamilton(n), SpectrumMode::certificate, workers);
    check_certificates(g, cert);
    for (std::size_t k = 0; k < ex.entries.size(); ++k) {
      const auto a = ex.entries[k].status;
      const auto b = cert.entries[k].status;
      if (b != LengthStatus::unknown) CHECK(a == b);
    }
  }
}

TEST_CASE("certificate mode in a shuffled frame") {
  Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 12;
    std::vector<int> map(2 * n);
    std::vector<int> ev, od;
    for (int v = 0; v < 2 * n; ++v) (v % 2 ? od : ev).push_back(v);
    for (std::size_t k = ev.size(); k > 1; --k) std::swap(ev[k - 1], ev[rng.below(k)]);
    for (std::size_t k = od.size(); k > 1; --k) std::swap(od[k - 1], od[rng.below(k)]);
    for (int k = 0; k < n; ++k) {
      map[2 * k] = ev[k];
      map[2 * k + 1] = od[k];
    }
    const ParityPermutation perm(map);
    auto g = add_edges(sample_random({n, 0.6, rng.next()}), standard_cycle_edges(n));
    const auto shuffled = perm.apply(g);
    const auto h = relabel(standard_hamilton(n), perm);
    const auto r = even_cycle_spectrum(shuffled, h, SpectrumMode::certificate);
    check_certificates(shuffled, r);
    CHECK(r.lengths_with(LengthStatus::absent).empty());
  }
}

TEST_CASE("adding edges never loses a certified length") {
  Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 3;
    const auto g = sample_random({n, 0.4, rng.next()});
    const auto bigger = add_edges(g, sample_random({n, 0.3, rng.next()}).edges());
    const auto a = even_cycle_spectrum(g, std::nullopt, SpectrumMode::exhaustive);
    const auto b = even_cycle_spectrum(bigger, std::nullopt, SpectrumMode::exhaustive);
    for (std::size_t k = 0; k < a.entries.size(); ++k)
      if (a.entries[k].status == LengthStatus::certified)
        CHECK(b.entries[k].status == LengthStatus::certified);
  }
}

TEST_CASE("dense Hamiltonian graphs at n = 4 are bipancyclic") {
  // Every Hamiltonian graph with more than 8 edges on K_{4,4}, sampled.
  Rng rng(59);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = sample_random({4, 0.6, rng.next()});
    if (g.edge_count() <= 8 || !oracle::has_cycle_of_length(to_oracle(g), 8)) continue;
    ++checked;
    CHECK(is_bipancyclic(g, std::nullopt, SpectrumMode::exhaustive).kind ==
          BipancyclicVerdict::Kind::yes);
  }
  CHECK(checked > 50);
}

TEST_CASE("medium certificate-mode run validates every certificate") {
  const int n = 60;
  auto g = add_edges(sample_random({n, 0.3, 5}), standard_cycle_edges(n));
  const auto v = is_bipancyclic(g, standard_hamilton(n), SpectrumMode::certificate);
  check_certificates(g, v.report);
  CHECK(v.kind == BipancyclicVerdict::Kind::yes);
}
