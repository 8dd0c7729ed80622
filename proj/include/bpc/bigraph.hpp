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

// Balanced bipartite graphs on the labels [2n] = {0, ..., 2n-1}.
//
// Even labels form one class and odd labels the other, so the standard
// Hamilton cycle 0, 1, ..., 2n-1 alternates between the classes. Each vertex
// stores its neighbourhood as an n-bit mask over the opposite class: bit j of
// row(v) stands for the label 2j + (1 - v % 2).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bpc {

/// An edge between an even and an odd label.
struct Edge {
  int even = 0;
  int odd = 0;

  /// Builds an edge from two labels of different parity, in either order.
  /// Throws std::invalid_argument when the parities agree or a label is
  /// negative.
  static Edge between(int x, int y);

  bool touches(int v) const { return even == v || odd == v; }
  int other(int v) const { return v == even ? odd : even; }

  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

class GraphBuilder;

class BalancedBipartiteGraph {
 public:
  /// Empty graph on [2n]. Throws std::invalid_argument for n < 1.
  explicit BalancedBipartiteGraph(int n);

  /// Throws std::invalid_argument on out-of-range labels. Duplicates are
  /// merged.
  static BalancedBipartiteGraph from_edges(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  int order() const { return 2 * n_; }
  std::size_t edge_count() const { return edge_count_; }

  /// False for same-parity pairs and out-of-range labels.
  bool has_edge(int x, int y) const;
  bool has_edge(const Edge& e) const { return has_edge(e.even, e.odd); }

  int degree(int v) const;
  /// Ascending.
  std::vector<int> neighbors(int v) const;
  /// Sorted ascending by (even, odd).
  std::vector<Edge> edges() const;

  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(int v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  bool contains(const BalancedBipartiteGraph& other) const;

  friend bool operator==(const BalancedBipartiteGraph&,
                         const BalancedBipartiteGraph&) = default;

 private:
  friend class GraphBuilder;

  void check_label(int v) const;

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::size_t edge_count_ = 0;
};

/// Mutable staging area; graphs themselves never change after build().
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : graph_(n) {}
  explicit GraphBuilder(BalancedBipartiteGraph g) : graph_(std::move(g)) {}

  int n() const { return graph_.n(); }
  /// Returns true if the edge was not present before.
  bool add(const Edge& e);
  /// Returns true if the edge was present.
  bool remove(const Edge& e);
  bool has(const Edge& e) const { return graph_.has_edge(e); }
  std::size_t edge_count() const { return graph_.edge_count(); }
  const BalancedBipartiteGraph& view() const { return graph_; }

  BalancedBipartiteGraph build() const { return graph_; }

 private:
  BalancedBipartiteGraph graph_;
};

/// Parameters of G(n, n, p).
struct RandomModel {
  int n = 1;
  double p = 0.0;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument unless n >= 1 and 0 <= p <= 1.
  void validate() const;
};

/// K_{n,n}.
BalancedBipartiteGraph complete_bipartite(int n);

/// Samples G(n, n, p). Candidate pairs are decided in ascending (even, odd)
/// order, each consuming one draw of Rng(seed).uniform01(); a pair is kept
/// when the draw is below p.
BalancedBipartiteGraph sample_random(const RandomModel& model);

/// Throws std::invalid_argument if some victim is not an edge of g.
BalancedBipartiteGraph remove_edges(const BalancedBipartiteGraph& g,
                                    std::span<const Edge> victims);

/// Union of g with the given edges (already present ones are ignored).
BalancedBipartiteGraph add_edges(const BalancedBipartiteGraph& g,
                                 std::span<const Edge> extra);

/// Edges {i, i+1} of the standard Hamilton cycle on [2n].
std::vector<Edge> standard_cycle_edges(int n);

/// Circular distance of i from 0 on a cycle of length two_n.
int circ_dist(long long i, int two_n);

/// 2 exp(-eps^2 mean / 3), the two-sided Chernoff tail bound for a binomial
/// variable with the given mean. Requires 0 < eps <= 3/2 and mean > 0.
double chernoff_tail_bound(double eps, double mean);

/// A relabeling of [2n] that keeps parity classes intact.
class ParityPermutation {
 public:
  /// mapping[v] is the new label of v. Throws std::invalid_argument unless
  /// mapping is a parity-preserving bijection of [2n] for some n >= 1.
  explicit ParityPermutation(std::vector<int> mapping);

  static ParityPermutation identity(int n);

  int n() const { return static_cast<int>(mapping_.size()) / 2; }
  int operator()(int v) const { return mapping_.at(static_cast<std::size_t>(v)); }
  Edge operator()(const Edge& e) const;
  const std::vector<int>& mapping() const { return mapping_; }

  ParityPermutation inverse() const;
  BalancedBipartiteGraph apply(const BalancedBipartiteGraph& g) const;

 private:
  std::vector<int> mapping_;
};

// Graph text format:
//   bbg 1
//   n <n>
//   <even> <odd>      one line per edge, ascending, LF line endings
std::string to_bbg(const BalancedBipartiteGraph& g);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Throws ParseError on malformed input.
BalancedBipartiteGraph parse_bbg(std::string_view text);

BalancedBipartiteGraph read_bbg_file(const std::string& path);
void write_bbg_file(const std::string& path, const BalancedBipartiteGraph& g);

}  // namespace bpc
