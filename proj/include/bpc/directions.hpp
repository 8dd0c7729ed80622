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

// Direction classes of K_{n,n} under the standard labelling.
//
// Direction i (0 <= i < n) is E_i = {{x, y} : x + y = 2i + 1 mod 2n}. Its
// edges are ranked by their distance from the arc between i and i+1:
// rank t holds {i - t, i + 1 + t}, so rank 0 is the cycle edge {i, i+1}.
// Windows ("intervals") are runs of w = round(2 beta n) consecutive ranks;
// the middle set drops the first and last window.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bpc/bigraph.hpp"
#include "bpc/cycles.hpp"

namespace bpc {

struct GoodnessParams {
  double beta = 0.1;
  double eps_prime = 0.1;
  double p = 1.0;

  /// round(2 beta n).
  int window(int n) const;
  /// Throws std::invalid_argument unless beta, eps_prime lie in (0, 1/6),
  /// p in (0, 1], and the window satisfies 1 <= w, 2w <= n.
  void validate(int n) const;
};

struct DirectionView {
  int n = 0;
  int index = 0;
  std::vector<Edge> edges;  // by rank
};

/// Throws std::invalid_argument unless 0 <= i < n.
DirectionView direction_edges(int n, int i);

/// Direction index of an edge of K_{n,n}.
int direction_of(int n, const Edge& e);
/// Rank (0-based) of an edge within its direction.
int rank_in_direction(int n, const Edge& e);

/// The window of w edges starting at 1-based rank k, 1 <= k <= n - w + 1.
std::vector<Edge> interval_edges(int n, int i, int k, const GoodnessParams& params);
/// Ranks w+1 .. n-w (1-based).
std::vector<Edge> middle_edges(int n, int i, const GoodnessParams& params);

/// True when e is not an edge of the standard cycle.
bool is_chord(int n, const Edge& e);
bool is_crossing(int n, const Edge& e1, const Edge& e2);
/// Crossing with some pair of endpoints at circular distance <= window.
bool is_close_crossing(int n, const Edge& e1, const Edge& e2, int window);
bool is_close_crossing(int n, const Edge& e1, const Edge& e2,
                       const GoodnessParams& params);

/// Cycles of lengths l + 2 and 2n - l + 2 in C_{2n} + {e1, e2}, where
/// e1 in E_i and e2 in E_{i + l/2} cross. Returns {short, long} with the
/// (l+2)-cycle first. Throws std::invalid_argument for non-crossing pairs,
/// odd or out-of-range l, or a direction mismatch.
std::pair<CycleCertificate, CycleCertificate> splice_crossing(int n, const Edge& e1,
                                                              const Edge& e2, int l);

/// Present chords of a graph, grouped by direction and sorted by rank.
class DirectionPartition {
 public:
  explicit DirectionPartition(const BalancedBipartiteGraph& g);
  int n() const { return n_; }
  const std::vector<Edge>& chords(int i) const {
    return chords_[static_cast<std::size_t>(i)];
  }

 private:
  int n_;
  std::vector<std::vector<Edge>> chords_;
};

/// Any crossing pair e1 in E_i, e2 in E_{i+l/2} of chords of g (canonical
/// labelling), scanning i and then ranks in ascending order.
std::optional<std::pair<Edge, Edge>> find_crossing_pair(const DirectionPartition& parts,
                                                        int l);

struct WindowViolation {
  bool middle = false;  // false: window starting at rank k
  int k = 0;
  int count = 0;
  double expected = 0.0;
  double tolerance = 0.0;
};

struct GoodnessVerdict {
  bool good = true;
  std::optional<WindowViolation> first_violation;
};

/// Window counts within eps' w p of w p, and the middle count within
/// eps' (n - 2w) p of (n - 2w) p.
GoodnessVerdict direction_goodness(const BalancedBipartiteGraph& g, int i,
                                   const GoodnessParams& params);

struct CloseCrossingCounts {
  int l = 0;
  bool audited = true;  // false when l == n
  long long x = 0;      // close crossings in g between good direction pairs
  long long y = 0;      // those with an edge missing from the subgraph
  double x_reference = 0.0;
  std::optional<double> y_reference;
};

struct AuditOptions {
  const BalancedBipartiteGraph* subgraph = nullptr;
  std::optional<int> l;
  std::optional<double> eps;
};

struct AuditReport {
  int n = 0;
  GoodnessParams params;
  std::vector<int> bad;
  double bound = 0.0;  // n^(5/6)
  std::optional<CloseCrossingCounts> crossings;

  std::size_t bad_count() const { return bad.size(); }
  bool within_bound() const { return static_cast<double>(bad.size()) <= bound; }
  nlohmann::json to_json() const;
};

/// Lists directions that are not good and, with `l` given, counts close
/// crossings. Throws std::invalid_argument if the subgraph is not contained
/// in g or l is odd or outside [2, 2n-2].
AuditReport audit_directions(const BalancedBipartiteGraph& g,
                             const GoodnessParams& params,
                             const AuditOptions& options = {});

struct Lemma5Violation {
  int statement = 0;  // 1, 2 or 3
  int direction = 0;
  int rank = -1;
  std::string detail;
};

struct Lemma5Report {
  int n = 0;
  double beta = 0.0;
  int window = 0;
  int l = 0;
  int min_exact_partners = 0;  // over directions, edges with exactly 2w partners
  int max_partners = 0;
  std::vector<Lemma5Violation> violations;

  bool holds() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

/// Exhaustive check of the close-crossing structure between E_i and
/// E_{i + l/2} for every direction i. Requires l even with
/// 2w + 1 <= l <= 2n - 2w - 1; throws std::invalid_argument otherwise.
Lemma5Report lemma5_check(int n, const GoodnessParams& params, int l);

}  // namespace bpc
