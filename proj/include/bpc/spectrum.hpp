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

// Even cycle spectrum of a balanced bipartite graph.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bpc/bigraph.hpp"
#include "bpc/cycles.hpp"

namespace bpc {

enum class SpectrumMode { exhaustive, certificate };

std::string_view to_string(SpectrumMode mode);

inline constexpr int kExhaustiveCap = 6;

struct SpectrumOptions {
  std::uint64_t dfs_budget = kDefaultSearchBudget;  // per length, certificate mode
  int exhaustive_cap = kExhaustiveCap;
  unsigned workers = 1;  // lengths searched concurrently
};

struct LengthEntry {
  int length = 0;
  LengthStatus status = LengthStatus::unknown;
  std::optional<CycleCertificate> cycle;  // in the caller's labels
  std::string source;  // hamilton | crossing | shortcut | dfs
};

struct SpectrumReport {
  int n = 0;
  SpectrumMode mode = SpectrumMode::exhaustive;
  std::vector<LengthEntry> entries;  // lengths 4, 6, ..., 2n
  std::uint64_t steps = 0;           // DFS extension steps spent

  const LengthEntry& at(int length) const;
  std::vector<int> lengths_with(LengthStatus status) const;
  nlohmann::json to_json() const;
};

/// Exhaustive mode runs a complete search for every even length and needs
/// n <= options.exhaustive_cap. Certificate mode needs a Hamilton cycle of g;
/// the graph is relabelled so that cycle becomes 0, 1, ..., 2n-1 and each
/// length t is tried by a crossing splice (l = t - 2), then shortcut splices
/// (l = t - 8 and l = 2n - t), then budgeted backtracking.
/// Throws std::invalid_argument for an invalid Hamilton cycle, a missing one
/// in certificate mode, or n above the exhaustive cap.
SpectrumReport even_cycle_spectrum(const BalancedBipartiteGraph& g,
                                   const std::optional<CycleCertificate>& hamilton,
                                   SpectrumMode mode, const SpectrumOptions& options = {});

struct BipancyclicVerdict {
  enum class Kind { yes, no, unknown };
  Kind kind = Kind::unknown;
  std::vector<int> missing;
  std::vector<int> unknown;
  SpectrumReport report;
};

std::string_view to_string(BipancyclicVerdict::Kind kind);

/// yes iff every even length in [4, 2n] is certified; no if some length is
/// absent; unknown otherwise.
BipancyclicVerdict is_bipancyclic(const BalancedBipartiteGraph& g,
                                  const std::optional<CycleCertificate>& hamilton,
                                  SpectrumMode mode, const SpectrumOptions& options = {});

}  // namespace bpc
