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

// Edge-deletion adversaries that keep a Hamilton cycle intact.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bpc/bigraph.hpp"
#include "bpc/cycles.hpp"

namespace bpc {

struct Deletion {
  Edge edge;
  std::string reason;
};

class DeletionLog {
 public:
  /// Throws std::logic_error if the edge was already logged.
  void record(const Edge& e, std::string reason);

  const std::vector<Deletion>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t count(const std::string& reason) const;
  const std::map<std::string, std::size_t>& counts() const { return counts_; }

  /// One "del <u> <v> <reason>" line per deletion.
  std::string to_text() const;
  /// Throws ParseError on malformed lines.
  static DeletionLog parse(std::string_view text);

  /// Replays the deletions on g; throws std::invalid_argument if some edge
  /// is missing.
  BalancedBipartiteGraph replay(const BalancedBipartiteGraph& g) const;

 private:
  std::vector<Deletion> entries_;
  std::set<Edge> seen_;
  std::map<std::string, std::size_t> counts_;
};

struct AdversaryResult {
  BalancedBipartiteGraph graph;
  DeletionLog log;
};

/// Number of 4-cycles, via common neighbourhoods of even vertex pairs.
std::uint64_t count_quadrilaterals(const BalancedBipartiteGraph& g);

/// The first 4-cycle u-x-w-y (u < w even, x < y odd), if any.
std::optional<std::array<int, 4>> find_quadrilateral(const BalancedBipartiteGraph& g);

/// Repeatedly picks the first remaining 4-cycle and deletes its smallest
/// non-Hamilton edge until no 4-cycle is left. The seed is recorded for
/// randomised variants and does not affect the current rule.
/// Throws std::invalid_argument for n < 3 or an invalid Hamilton cycle.
AdversaryResult quadrilateral_breaker(const BalancedBipartiteGraph& g,
                                      const CycleCertificate& hamilton, std::uint64_t seed);

/// Vertex 0 keeps only neighbours 1 and 2n-1; every even i >= 2 loses its
/// odd neighbours j >= i + 3 (plain integer comparison).
AdversaryResult fan_construction(const BalancedBipartiteGraph& g);

/// (n^2 + n + 2) / 2, the edge count left by fan_construction on K_{n,n}.
std::uint64_t fan_kept_pairs(int n);

/// Deletes uniformly random non-Hamilton edges until max(target, 2n) edges
/// remain. Throws std::invalid_argument when target < 2n or the cycle is
/// invalid.
AdversaryResult random_thin_keep_hamilton(const BalancedBipartiteGraph& g,
                                          const CycleCertificate& hamilton,
                                          std::size_t target_edges, std::uint64_t seed);

}  // namespace bpc
