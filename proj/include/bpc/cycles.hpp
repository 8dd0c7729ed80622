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

// Cycle certificates and the search routines that produce them.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bpc/bigraph.hpp"

namespace bpc {

/// An explicit cycle v0, v1, ..., v{t-1} (closing edge v{t-1} v0 implied).
struct CycleCertificate {
  std::vector<int> vertices;

  std::size_t length() const { return vertices.size(); }
  bool operator==(const CycleCertificate&) const = default;
};

/// Single-line form: "cycle <t> v0 v1 ... v{t-1}".
std::string to_line(const CycleCertificate& c);
/// Throws ParseError on malformed input.
CycleCertificate parse_cycle_line(std::string_view line);

/// Outcome of validate_cycle; `reason` is empty on success.
struct CycleCheck {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

CycleCheck validate_cycle(const BalancedBipartiteGraph& g,
                          const CycleCertificate& c);

/// The cycle 0, 1, ..., 2n-1. Requires n >= 2.
CycleCertificate standard_hamilton(int n);

/// Edges traversed by the certificate, in order.
std::vector<Edge> cycle_edges(const CycleCertificate& c);

enum class LengthStatus { certified, absent, unknown };

std::string_view to_string(LengthStatus s);

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;
inline constexpr std::uint64_t kUnlimitedBudget =
    std::numeric_limits<std::uint64_t>::max();

struct CycleSearch {
  LengthStatus status = LengthStatus::unknown;
  std::optional<CycleCertificate> cycle;
  std::uint64_t steps = 0;
};

/// Backtracking search for a cycle of length t. The cycle is rooted at its
/// smallest label and neighbours are tried in ascending order. Each path
/// extension costs one step; running past `budget` yields `unknown`, while a
/// search that finishes without a hit yields `absent`.
/// Throws std::invalid_argument unless t is even and 4 <= t <= 2n.
CycleSearch find_cycle_of_length(const BalancedBipartiteGraph& g, int t,
                                 std::uint64_t budget = kDefaultSearchBudget);

inline constexpr int kDefaultHamiltonCap = 7;

/// Exact Hamiltonicity test by backtracking. Throws std::invalid_argument
/// when n exceeds `cap`.
bool hamiltonian_bruteforce(const BalancedBipartiteGraph& g,
                            int cap = kDefaultHamiltonCap);

/// Renames vertices so that the given Hamilton cycle becomes 0, 1, ..., 2n-1.
/// The returned permutation maps original labels to canonical ones. The cycle
/// must validate in g.
struct CanonicalFrame {
  ParityPermutation to_canonical;
  BalancedBipartiteGraph graph;
};
CanonicalFrame canonical_frame(const BalancedBipartiteGraph& g,
                               const CycleCertificate& hamilton);

CycleCertificate relabel(const CycleCertificate& c, const ParityPermutation& perm);

}  // namespace bpc
