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

#pragma once

// l-shortcuts: four chords that, together with the standard Hamilton cycle,
// close cycles of lengths l + 8 and 2n - l.
//
// Anchors i1, i2, i3, i4 fix the chords {i1, i3}, {i1+1, i4}, {i2, i4+l+1}
// and {i2+1, i3+1}. Cutting the cycle at i1, the eight anchor positions must
// appear at strictly increasing offsets in the order
//   type I:  i1, i1+1, i2, i2+1, i3, i3+1, i4, i4+l+1
//   type II: i1, i1+1, i2, i2+1, i4, i4+l+1, i3, i3+1
// with i2 and i4 of the same parity as i1 and i3 of the other parity.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bpc/bigraph.hpp"
#include "bpc/cycles.hpp"

namespace bpc {

enum class ShortcutKind { type_i, type_ii };

std::string_view to_string(ShortcutKind kind);

struct Shortcut {
  ShortcutKind kind = ShortcutKind::type_i;
  int i1 = 0, i2 = 0, i3 = 0, i4 = 0;
  int l = 0;

  /// {i1,i3}, {i1+1,i4}, {i2,i4+l+1}, {i2+1,i3+1}, indices mod 2n.
  std::array<Edge, 4> chords(int n) const;
  bool operator==(const Shortcut&) const = default;
};

/// Checks order, distinctness, parity and the no-cycle-edge condition.
bool is_valid_shortcut(int n, const Shortcut& s);

/// All anchor assignments under which the four chords form an l-shortcut.
/// Throws std::invalid_argument for odd l or l outside [0, n].
std::vector<Shortcut> shortcut_interpretations(int n, std::span<const Edge> chords, int l);

/// First entry of shortcut_interpretations, if any.
std::optional<Shortcut> classify_shortcut(int n, std::span<const Edge> chords, int l);

struct ShortcutCount {
  std::uint64_t count = 0;
  bool truncated = false;  // stopped at the cap
};

using ShortcutSink = std::function<void(const Shortcut&)>;

/// Enumerates every l-shortcut whose chords are edges of g (canonical
/// labelling): all type I hits, then all type II hits, each ordered by i1
/// and then by the clockwise offsets of i2, i4 and i3 from i1.
/// Stops after `cap` hits when a cap is given.
ShortcutCount enumerate_shortcuts(const BalancedBipartiteGraph& g, int l,
                                  std::optional<std::uint64_t> cap = std::nullopt,
                                  const ShortcutSink& sink = {});

/// Count only, with the outer i1 loop split across workers (0 = all cores).
std::uint64_t count_shortcuts(const BalancedBipartiteGraph& g, int l, unsigned workers = 0);

/// Cycles of lengths l + 8 and 2n - l in C_{2n} + chords(s), short first.
/// Throws std::invalid_argument if s is not a valid shortcut.
std::pair<CycleCertificate, CycleCertificate> splice_shortcut(int n, const Shortcut& s);

/// eps'^8 n^4 / (4 * 16^7). Requires 0 < eps' < 1.
double lemma1_threshold(double eps_prime, int n);

struct HypothesisError : std::domain_error {
  using std::domain_error::domain_error;
};

struct CensusRow {
  int l = 0;
  std::uint64_t count = 0;
  double threshold = 0.0;
  bool pass = false;
};

struct CensusReport {
  int n = 0;
  double eps_prime = 0.0;
  std::size_t edge_count = 0;
  std::vector<CensusRow> rows;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

/// Exact shortcut counts for every even l in [0, floor(eps' n / 8)].
/// Throws HypothesisError when e(g) < (1 + eps') n^2 / 2.
CensusReport shortcut_census(const BalancedBipartiteGraph& g, double eps_prime,
                             unsigned workers = 0);

inline constexpr int kHypergraphCap = 16;

/// The 4-uniform hypergraph whose vertices are the n^2 edges of K_{n,n}
/// (vertex id (even/2) * n + odd/2) and whose hyperedges are the l-shortcuts
/// of K_{n,n}.
class ShortcutHypergraph {
 public:
  /// Throws std::invalid_argument when n > cap or l is not admissible.
  ShortcutHypergraph(int n, int l, int cap = kHypergraphCap);

  int n() const { return n_; }
  int l() const { return l_; }
  std::size_t vertex_count() const { return static_cast<std::size_t>(n_) * n_; }
  std::size_t hyperedge_count() const { return hyperedges_.size(); }
  const std::vector<std::array<int, 4>>& hyperedges() const { return hyperedges_; }

  int vertex_id(const Edge& e) const { return (e.even / 2) * n_ + e.odd / 2; }
  Edge vertex_edge(int id) const { return {2 * (id / n_), 2 * (id % n_) + 1}; }

  /// Hyperedges with all four vertices in `subset` (indexed by vertex id).
  std::uint64_t count_inside(const std::vector<bool>& subset) const;

 private:
  int n_;
  int l_;
  std::vector<std::array<int, 4>> hyperedges_;
};

struct HypergraphSize {
  std::uint64_t vertices = 0;
  std::uint64_t hyperedges = 0;
};

/// n^2 and the number of l-shortcuts of K_{n,n}. Throws for n > cap.
HypergraphSize hypergraph_size(int n, int l, int cap = kHypergraphCap);

/// 4 eps^8 / 16^6.
double density_function(double eps);

struct DensitySample {
  double eps = 0.0;
  std::size_t subset_size = 0;
  std::uint64_t inside = 0;
  double bound = 0.0;  // 2 f(eps) |E(H)|
  bool pass = false;
};

/// Samples `trials` uniform subsets of size ceil((1/2 + eps) n^2).
std::vector<DensitySample> hypergraph_density_probe(int n, int l, double eps, int trials,
                                                    std::uint64_t seed);
std::vector<DensitySample> hypergraph_density_probe(const ShortcutHypergraph& h, double eps,
                                                    int trials, std::uint64_t seed);

struct MomentSample {
  int i = 0;
  double q = 0.0;
  int trials = 0;
  double mean = 0.0;         // estimate of E[sum_v deg_i(v, V_q)^2]
  double denominator = 0.0;  // q^(2i) |E|^2 / |V|
  double implied_k = 0.0;
};

/// Monte Carlo estimate over binomial q-random vertex subsets.
/// Throws std::invalid_argument unless i in {1,2,3} and q in (0, 1].
MomentSample hypergraph_degree_moment(int n, int l, int i, double q, int trials,
                                      std::uint64_t seed);
MomentSample hypergraph_degree_moment(const ShortcutHypergraph& h, int i, double q,
                                      int trials, std::uint64_t seed);

/// sum_v deg_i(v, subset)^2 for one fixed subset.
double degree_square_sum(const ShortcutHypergraph& h, int i, const std::vector<bool>& subset);

struct HypergraphProbe {
  int n = 0;
  int l = 0;
  std::uint64_t vertices = 0;
  std::uint64_t hyperedges = 0;
  std::vector<DensitySample> density;
  std::vector<MomentSample> moments;

  nlohmann::json to_json() const;
};

}  // namespace bpc
