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

#include "bpc/spectrum.hpp"

#include <algorithm>

#include "bpc/directions.hpp"
#include "bpc/parallel.hpp"
#include "bpc/shortcuts.hpp"

namespace bpc {

std::string_view to_string(SpectrumMode mode) {
  return mode == SpectrumMode::exhaustive ? "exhaustive" : "certificate";
}

std::string_view to_string(BipancyclicVerdict::Kind kind) {
  switch (kind) {
    case BipancyclicVerdict::Kind::yes: return "yes";
    case BipancyclicVerdict::Kind::no: return "no";
    case BipancyclicVerdict::Kind::unknown: return "unknown";
  }
  return "unknown";
}

const LengthEntry& SpectrumReport::at(int length) const {
  const auto index = static_cast<std::size_t>((length - 4) / 2);
  if (length % 2 != 0 || length < 4 || index >= entries.size()) {
    throw std::out_of_range("no spectrum entry for length " + std::to_string(length));
  }
  return entries[index];
}

std::vector<int> SpectrumReport::lengths_with(LengthStatus status) const {
  std::vector<int> out;
  for (const auto& e : entries) {
    if (e.status == status) out.push_back(e.length);
  }
  return out;
}

nlohmann::json SpectrumReport::to_json() const {
  nlohmann::json lengths = nlohmann::json::object();
  for (const auto& e : entries) lengths[std::to_string(e.length)] = std::string(to_string(e.status));
  return {{"n", n}, {"mode", std::string(to_string(mode))}, {"lengths", lengths}, {"steps", steps}};
}

namespace {

LengthEntry search_canonical(const BalancedBipartiteGraph& canonical,
                             const DirectionPartition& parts, int t,
                             std::uint64_t budget, std::uint64_t& steps) {
  const int n = canonical.n();
  LengthEntry entry;
  entry.length = t;
  if (t == 2 * n) {
    entry.status = LengthStatus::certified;
    entry.cycle = standard_hamilton(n);
    entry.source = "hamilton";
    return entry;
  }
  if (const auto pair = find_crossing_pair(parts, t - 2)) {
    entry.status = LengthStatus::certified;
    entry.cycle = splice_crossing(n, pair->first, pair->second, t - 2).first;
    entry.source = "crossing";
    return entry;
  }
  auto try_shortcut = [&](int l, bool short_side) -> bool {
    if (l < 0 || l > n || l % 2 != 0) return false;
    std::optional<Shortcut> hit;
    enumerate_shortcuts(canonical, l, 1, [&](const Shortcut& s) { hit = s; });
    if (!hit) return false;
    auto cycles = splice_shortcut(n, *hit);
    entry.status = LengthStatus::certified;
    entry.cycle = short_side ? cycles.first : cycles.second;
    entry.source = "shortcut";
    return true;
  };
  if (try_shortcut(t - 8, true) || try_shortcut(2 * n - t, false)) return entry;

  auto search = find_cycle_of_length(canonical, t, budget);
  steps += search.steps;
  entry.status = search.status;
  entry.cycle = search.cycle;
  if (entry.cycle) entry.source = "dfs";
  return entry;
}

}  // namespace

SpectrumReport even_cycle_spectrum(const BalancedBipartiteGraph& g,
                                   const std::optional<CycleCertificate>& hamilton,
                                   SpectrumMode mode, const SpectrumOptions& options) {
  const int n = g.n();
  if (n < 2) throw std::invalid_argument("spectrum needs n >= 2");
  if (hamilton) {
    if (const auto check = validate_cycle(g, *hamilton); !check) {
      throw std::invalid_argument("invalid Hamilton cycle: " + check.reason);
    }
    if (static_cast<int>(hamilton->length()) != g.order()) {
      throw std::invalid_argument("Hamilton cycle does not span all vertices");
    }
  }

  SpectrumReport report;
  report.n = n;
  report.mode = mode;
  const std::size_t count = static_cast<std::size_t>(n - 1);
  report.entries.resize(count);
  std::vector<std::uint64_t> steps(count, 0);

  if (mode == SpectrumMode::exhaustive) {
    if (n > options.exhaustive_cap) {
      throw std::invalid_argument("exhaustive spectrum needs n <= " +
                                  std::to_string(options.exhaustive_cap));
    }
    parallel_for(count, options.workers, [&](std::size_t k) {
      const int t = 4 + 2 * static_cast<int>(k);
      auto search = find_cycle_of_length(g, t, kUnlimitedBudget);
      steps[k] = search.steps;
      report.entries[k] = {t, search.status, search.cycle, search.cycle ? "dfs" : ""};
    });
  } else {
    if (!hamilton) throw std::invalid_argument("certificate mode needs a Hamilton cycle");
    const auto frame = canonical_frame(g, *hamilton);
    const auto back = frame.to_canonical.inverse();
    const DirectionPartition parts(frame.graph);
    parallel_for(count, options.workers, [&](std::size_t k) {
      const int t = 4 + 2 * static_cast<int>(k);
      auto entry = search_canonical(frame.graph, parts, t, options.dfs_budget, steps[k]);
      if (entry.cycle) entry.cycle = relabel(*entry.cycle, back);
      report.entries[k] = std::move(entry);
    });
  }
  for (auto s : steps) report.steps += s;
  return report;
}

BipancyclicVerdict is_bipancyclic(const BalancedBipartiteGraph& g,
                                  const std::optional<CycleCertificate>& hamilton,
                                  SpectrumMode mode, const SpectrumOptions& options) {
  BipancyclicVerdict verdict;
  verdict.report = even_cycle_spectrum(g, hamilton, mode, options);
  verdict.missing = verdict.report.lengths_with(LengthStatus::absent);
  verdict.unknown = verdict.report.lengths_with(LengthStatus::unknown);
  if (!verdict.missing.empty()) {
    verdict.kind = BipancyclicVerdict::Kind::no;
  } else if (!verdict.unknown.empty()) {
    verdict.kind = BipancyclicVerdict::Kind::unknown;
  } else {
    verdict.kind = BipancyclicVerdict::Kind::yes;
  }
  return verdict;
}

}  // namespace bpc
