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

#include "bpc/adversary.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>

#include "bpc/rng.hpp"

namespace bpc {

void DeletionLog::record(const Edge& e, std::string reason) {
  if (!seen_.insert(e).second) {
    throw std::logic_error("edge " + to_string(e) + " deleted twice");
  }
  ++counts_[reason];
  entries_.push_back({e, std::move(reason)});
}

std::size_t DeletionLog::count(const std::string& reason) const {
  const auto it = counts_.find(reason);
  return it == counts_.end() ? 0 : it->second;
}

std::string DeletionLog::to_text() const {
  std::string out;
  for (const auto& d : entries_) {
    out += "del " + std::to_string(d.edge.even) + " " + std::to_string(d.edge.odd) + " " +
           d.reason + "\n";
  }
  return out;
}

DeletionLog DeletionLog::parse(std::string_view text) {
  DeletionLog log;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.empty()) continue;
    auto fail = [&] { return ParseError("deletion log line " + std::to_string(line_no) + " malformed"); };
    if (!line.starts_with("del ")) throw fail();
    line.remove_prefix(4);
    int values[2] = {0, 0};
    for (int& value : values) {
      const auto sp = line.find(' ');
      if (sp == std::string_view::npos) throw fail();
      auto [ptr, ec] = std::from_chars(line.data(), line.data() + sp, value);
      if (ec != std::errc{} || ptr != line.data() + sp) throw fail();
      line.remove_prefix(sp + 1);
    }
    if (line.empty()) throw fail();
    log.record(Edge::between(values[0], values[1]), std::string(line));
  }
  return log;
}

BalancedBipartiteGraph DeletionLog::replay(const BalancedBipartiteGraph& g) const {
  std::vector<Edge> victims;
  victims.reserve(entries_.size());
  for (const auto& d : entries_) victims.push_back(d.edge);
  return remove_edges(g, victims);
}

namespace {

std::set<Edge> hamilton_edges(const BalancedBipartiteGraph& g, const CycleCertificate& hamilton) {
  if (const auto check = validate_cycle(g, hamilton); !check) {
    throw std::invalid_argument("invalid Hamilton cycle: " + check.reason);
  }
  if (static_cast<int>(hamilton.length()) != g.order()) {
    throw std::invalid_argument("Hamilton cycle does not span all vertices");
  }
  const auto edges = cycle_edges(hamilton);
  return {edges.begin(), edges.end()};
}

// Smallest two common neighbours of even vertices u and w.
std::optional<std::array<int, 2>> two_common(const BalancedBipartiteGraph& g, int u, int w) {
  const auto a = g.row(u);
  const auto b = g.row(w);
  std::array<int, 2> found{};
  int k = 0;
  for (std::size_t i = 0; i < a.size() && k < 2; ++i) {
    for (auto bits = a[i] & b[i]; bits != 0 && k < 2; bits &= bits - 1) {
      found[static_cast<std::size_t>(k++)] = 2 * (static_cast<int>(i * 64) + std::countr_zero(bits)) + 1;
    }
  }
  if (k < 2) return std::nullopt;
  return found;
}

}  // namespace

std::uint64_t count_quadrilaterals(const BalancedBipartiteGraph& g) {
  std::uint64_t total = 0;
  for (int u = 0; u < g.order(); u += 2) {
    const auto a = g.row(u);
    for (int w = u + 2; w < g.order(); w += 2) {
      const auto b = g.row(w);
      std::uint64_t common = 0;
      for (std::size_t i = 0; i < a.size(); ++i) common += std::popcount(a[i] & b[i]);
      total += common * (common - (common > 0 ? 1 : 0)) / 2;
    }
  }
  return total;
}

std::optional<std::array<int, 4>> find_quadrilateral(const BalancedBipartiteGraph& g) {
  for (int u = 0; u < g.order(); u += 2) {
    for (int w = u + 2; w < g.order(); w += 2) {
      if (const auto xy = two_common(g, u, w)) return std::array<int, 4>{u, (*xy)[0], w, (*xy)[1]};
    }
  }
  return std::nullopt;
}

AdversaryResult quadrilateral_breaker(const BalancedBipartiteGraph& g,
                                      const CycleCertificate& hamilton, std::uint64_t) {
  if (g.n() < 3) throw std::invalid_argument("quadrilateral breaker needs n >= 3");
  const auto protected_edges = hamilton_edges(g, hamilton);
  GraphBuilder work(g);
  DeletionLog log;
  // Deleting edges never creates 4-cycles, so pairs already cleared stay clear.
  for (int u = 0; u < g.order(); u += 2) {
    for (int w = u + 2; w < g.order(); w += 2) {
      while (const auto xy = two_common(work.view(), u, w)) {
        const int x = (*xy)[0];
        const int y = (*xy)[1];
        std::array<Edge, 4> sides{Edge{u, x}, Edge{w, x}, Edge{w, y}, Edge{u, y}};
        std::sort(sides.begin(), sides.end());
        const auto victim = std::find_if(sides.begin(), sides.end(), [&](const Edge& e) {
          return !protected_edges.contains(e);
        });
        if (victim == sides.end()) {
          throw std::logic_error("4-cycle made only of Hamilton edges");
        }
        work.remove(*victim);
        log.record(*victim, "c4");
      }
    }
  }
  return {work.build(), std::move(log)};
}

AdversaryResult fan_construction(const BalancedBipartiteGraph& g) {
  GraphBuilder work(g);
  DeletionLog log;
  const int last = g.order() - 1;
  for (int j : g.neighbors(0)) {
    if (j != 1 && j != last) {
      work.remove({0, j});
      log.record({0, j}, "hub");
    }
  }
  for (int i = 2; i < g.order(); i += 2) {
    for (int j : g.neighbors(i)) {
      if (j >= i + 3) {
        work.remove({i, j});
        log.record({i, j}, "far");
      }
    }
  }
  return {work.build(), std::move(log)};
}

std::uint64_t fan_kept_pairs(int n) {
  const auto nn = static_cast<std::uint64_t>(n);
  return (nn * nn + nn + 2) / 2;
}

AdversaryResult random_thin_keep_hamilton(const BalancedBipartiteGraph& g,
                                          const CycleCertificate& hamilton,
                                          std::size_t target_edges, std::uint64_t seed) {
  const auto protected_edges = hamilton_edges(g, hamilton);
  if (target_edges < static_cast<std::size_t>(g.order())) {
    throw std::invalid_argument("target edge count below 2n");
  }
  std::vector<Edge> candidates;
  for (const auto& e : g.edges()) {
    if (!protected_edges.contains(e)) candidates.push_back(e);
  }
  const std::size_t excess = g.edge_count() > target_edges ? g.edge_count() - target_edges : 0;
  Rng rng(seed);
  GraphBuilder work(g);
  DeletionLog log;
  // Partial Fisher-Yates: the first `excess` slots become the victims.
  for (std::size_t k = 0; k < excess; ++k) {
    const auto pick = k + static_cast<std::size_t>(rng.below(candidates.size() - k));
    std::swap(candidates[k], candidates[pick]);
    work.remove(candidates[k]);
    log.record(candidates[k], "thin");
  }
  return {work.build(), std::move(log)};
}

}  // namespace bpc
