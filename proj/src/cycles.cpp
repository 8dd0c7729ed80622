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

#include "bpc/cycles.hpp"

#include <algorithm>
#include <charconv>

namespace bpc {

std::string to_line(const CycleCertificate& c) {
  std::string out = "cycle " + std::to_string(c.length());
  for (int v : c.vertices) {
    out += ' ';
    out += std::to_string(v);
  }
  return out;
}

CycleCertificate parse_cycle_line(std::string_view line) {
  std::vector<long long> numbers;
  if (!line.starts_with("cycle ")) throw ParseError("expected 'cycle <t> ...'");
  line.remove_prefix(6);
  while (!line.empty()) {
    const auto sp = line.find(' ');
    const auto token = line.substr(0, sp);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("bad integer '" + std::string(token) + "' in cycle line");
    }
    numbers.push_back(value);
    if (sp == std::string_view::npos) break;
    line.remove_prefix(sp + 1);
  }
  if (numbers.empty() || numbers[0] != static_cast<long long>(numbers.size() - 1)) {
    throw ParseError("cycle length does not match the number of labels");
  }
  CycleCertificate c;
  for (std::size_t k = 1; k < numbers.size(); ++k) {
    c.vertices.push_back(static_cast<int>(numbers[k]));
  }
  return c;
}

CycleCheck validate_cycle(const BalancedBipartiteGraph& g,
                          const CycleCertificate& c) {
  const auto& vs = c.vertices;
  const std::size_t t = vs.size();
  if (t % 2 != 0) return {false, "odd length " + std::to_string(t)};
  if (t < 4) return {false, "length " + std::to_string(t) + " below 4"};
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (int v : vs) {
    if (v < 0 || v >= g.order()) {
      return {false, "label " + std::to_string(v) + " out of range"};
    }
    if (seen[static_cast<std::size_t>(v)]) {
      return {false, "repeated label " + std::to_string(v)};
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t k = 0; k < t; ++k) {
    const int a = vs[k];
    const int b = vs[(k + 1) % t];
    if ((a ^ b) % 2 == 0) {
      return {false, "parity clash between " + std::to_string(a) + " and " +
                         std::to_string(b)};
    }
    if (!g.has_edge(a, b)) {
      return {false, "missing edge " + to_string(Edge::between(a, b))};
    }
  }
  return {true, {}};
}

CycleCertificate standard_hamilton(int n) {
  if (n < 2) throw std::invalid_argument("standard Hamilton cycle needs n >= 2");
  CycleCertificate c;
  c.vertices.resize(2 * static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < c.vertices.size(); ++k) c.vertices[k] = static_cast<int>(k);
  return c;
}

std::vector<Edge> cycle_edges(const CycleCertificate& c) {
  std::vector<Edge> out;
  const std::size_t t = c.length();
  out.reserve(t);
  for (std::size_t k = 0; k < t; ++k) {
    out.push_back(Edge::between(c.vertices[k], c.vertices[(k + 1) % t]));
  }
  return out;
}

std::string_view to_string(LengthStatus s) {
  switch (s) {
    case LengthStatus::certified: return "certified";
    case LengthStatus::absent: return "absent";
    case LengthStatus::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

class CycleDfs {
 public:
  CycleDfs(const BalancedBipartiteGraph& g, int t, std::uint64_t budget)
      : g_(g), t_(t), budget_(budget),
        on_path_(static_cast<std::size_t>(g.order()), false) {
    adj_.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) adj_.push_back(g.neighbors(v));
  }

  CycleSearch run() {
    CycleSearch result;
    const int order = g_.order();
    const int half = t_ / 2;
    for (int s = 0; s < order; ++s) {
      // Labels >= s must still supply t/2 vertices of each parity.
      const int evens = (order - s + 1 - s % 2) / 2;
      const int odds = (order - s) - evens;
      if (evens < half || odds < half) break;
      if (static_cast<int>(adj_[static_cast<std::size_t>(s)].size()) < 2) continue;
      start_ = s;
      path_.assign(1, s);
      on_path_[static_cast<std::size_t>(s)] = true;
      const bool found = extend(s);
      on_path_[static_cast<std::size_t>(s)] = false;
      if (found) {
        result.status = LengthStatus::certified;
        result.cycle = CycleCertificate{path_};
        result.steps = steps_;
        return result;
      }
      if (exhausted_) {
        result.status = LengthStatus::unknown;
        result.steps = steps_;
        return result;
      }
    }
    result.status = LengthStatus::absent;
    result.steps = steps_;
    return result;
  }

 private:
  bool extend(int v) {
    const int depth = static_cast<int>(path_.size());
    if (depth == t_) return g_.has_edge(v, start_);
    for (int u : adj_[static_cast<std::size_t>(v)]) {
      if (u <= start_ || on_path_[static_cast<std::size_t>(u)]) continue;
      if (depth == t_ - 1 && !g_.has_edge(u, start_)) continue;
      if (++steps_ > budget_) {
        exhausted_ = true;
        return false;
      }
      path_.push_back(u);
      on_path_[static_cast<std::size_t>(u)] = true;
      if (extend(u)) return true;
      on_path_[static_cast<std::size_t>(u)] = false;
      path_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  const BalancedBipartiteGraph& g_;
  int t_;
  std::uint64_t budget_;
  std::vector<std::vector<int>> adj_;
  std::vector<bool> on_path_;
  std::vector<int> path_;
  int start_ = 0;
  std::uint64_t steps_ = 0;
  bool exhausted_ = false;
};

}  // namespace

CycleSearch find_cycle_of_length(const BalancedBipartiteGraph& g, int t,
                                 std::uint64_t budget) {
  if (t % 2 != 0 || t < 4 || t > g.order()) {
    throw std::invalid_argument("cycle length " + std::to_string(t) +
                                " must be even and in [4, 2n]");
  }
  return CycleDfs(g, t, budget).run();
}

bool hamiltonian_bruteforce(const BalancedBipartiteGraph& g, int cap) {
  if (g.n() > cap) {
    throw std::invalid_argument("n = " + std::to_string(g.n()) +
                                " exceeds the brute-force cap " + std::to_string(cap) +
                                "; supply a Hamilton cycle instead");
  }
  if (g.n() < 2) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) return false;
  }
  return find_cycle_of_length(g, g.order(), kUnlimitedBudget).status ==
         LengthStatus::certified;
}

CanonicalFrame canonical_frame(const BalancedBipartiteGraph& g,
                               const CycleCertificate& hamilton) {
  if (const auto check = validate_cycle(g, hamilton); !check) {
    throw std::invalid_argument("invalid Hamilton cycle: " + check.reason);
  }
  if (static_cast<int>(hamilton.length()) != g.order()) {
    throw std::invalid_argument("Hamilton cycle does not span all vertices");
  }
  const auto& h = hamilton.vertices;
  const std::size_t shift = h[0] % 2 == 0 ? 0 : 1;
  std::vector<int> mapping(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    mapping[static_cast<std::size_t>(h[(k + shift) % h.size()])] = static_cast<int>(k);
  }
  ParityPermutation perm(std::move(mapping));
  auto canonical = perm.apply(g);
  return {std::move(perm), std::move(canonical)};
}

CycleCertificate relabel(const CycleCertificate& c, const ParityPermutation& perm) {
  CycleCertificate out;
  out.vertices.reserve(c.length());
  for (int v : c.vertices) out.vertices.push_back(perm(v));
  return out;
}

}  // namespace bpc
