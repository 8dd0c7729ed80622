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

#include "bpc/directions.hpp"

#include <algorithm>
#include <cmath>

namespace bpc {

namespace {

int mod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

void check_direction(int n, int i) {
  if (i < 0 || i >= n) {
    throw std::invalid_argument("direction " + std::to_string(i) + " outside [0, " +
                                std::to_string(n) + ")");
  }
}

void check_even_l(int n, int l) {
  if (l % 2 != 0) throw std::invalid_argument("l must be even");
  if (l < 2 || l > 2 * n - 2) {
    throw std::invalid_argument("l must lie in [2, 2n-2]");
  }
}

int edge_sum(const Edge& e) { return e.even + e.odd; }

}  // namespace

int GoodnessParams::window(int n) const {
  return static_cast<int>(std::lround(2.0 * beta * n));
}

void GoodnessParams::validate(int n) const {
  if (!(beta > 0.0 && beta < 1.0 / 6.0)) {
    throw std::invalid_argument("beta must lie in (0, 1/6)");
  }
  if (!(eps_prime > 0.0 && eps_prime < 1.0 / 6.0)) {
    throw std::invalid_argument("eps' must lie in (0, 1/6)");
  }
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
  const int w = window(n);
  if (w < 1 || 2 * w > n) {
    throw std::invalid_argument("window round(2 beta n) = " + std::to_string(w) +
                                " must satisfy 1 <= w and 2w <= n");
  }
}

DirectionView direction_edges(int n, int i) {
  check_direction(n, i);
  DirectionView view{n, i, {}};
  view.edges.reserve(static_cast<std::size_t>(n));
  const int two_n = 2 * n;
  for (int t = 0; t < n; ++t) {
    view.edges.push_back(Edge::between(mod(i - t, two_n), mod(i + 1 + t, two_n)));
  }
  return view;
}

int direction_of(int n, const Edge& e) {
  // x + y = 2i + 1 (mod 2n)
  return mod((edge_sum(e) - 1) / 2, n);
}

int rank_in_direction(int n, const Edge& e) {
  const int i = direction_of(n, e);
  const int t = mod(i - e.even, 2 * n);
  return t < n ? t : mod(i - e.odd, 2 * n);
}

std::vector<Edge> interval_edges(int n, int i, int k, const GoodnessParams& params) {
  const int w = params.window(n);
  if (w < 1 || k < 1 || k > n - w + 1) {
    throw std::invalid_argument("interval start k = " + std::to_string(k) +
                                " outside [1, n - w + 1]");
  }
  const auto view = direction_edges(n, i);
  return {view.edges.begin() + (k - 1), view.edges.begin() + (k - 1 + w)};
}

std::vector<Edge> middle_edges(int n, int i, const GoodnessParams& params) {
  const int w = params.window(n);
  if (w < 0 || 2 * w > n) throw std::invalid_argument("window too large for n");
  const auto view = direction_edges(n, i);
  return {view.edges.begin() + w, view.edges.end() - w};
}

bool is_chord(int n, const Edge& e) {
  const int d = mod(e.odd - e.even, 2 * n);
  return d != 1 && d != 2 * n - 1;
}

bool is_crossing(int n, const Edge& e1, const Edge& e2) {
  if (!is_chord(n, e1) || !is_chord(n, e2)) return false;
  if (e1.touches(e2.even) || e1.touches(e2.odd)) return false;
  const int two_n = 2 * n;
  const int a = e1.even;
  const int span = mod(e1.odd - a, two_n);
  const bool first_inside = mod(e2.even - a, two_n) < span;
  const bool second_inside = mod(e2.odd - a, two_n) < span;
  return first_inside != second_inside;
}

bool is_close_crossing(int n, const Edge& e1, const Edge& e2, int window) {
  if (!is_crossing(n, e1, e2)) return false;
  const int two_n = 2 * n;
  const int closest = std::min({circ_dist(e1.even - e2.even, two_n),
                                circ_dist(e1.even - e2.odd, two_n),
                                circ_dist(e1.odd - e2.even, two_n),
                                circ_dist(e1.odd - e2.odd, two_n)});
  return closest <= window;
}

bool is_close_crossing(int n, const Edge& e1, const Edge& e2,
                       const GoodnessParams& params) {
  return is_close_crossing(n, e1, e2, params.window(n));
}

std::pair<CycleCertificate, CycleCertificate> splice_crossing(int n, const Edge& e1,
                                                              const Edge& e2, int l) {
  check_even_l(n, l);
  if (!is_crossing(n, e1, e2)) {
    throw std::invalid_argument(to_string(e1) + " and " + to_string(e2) +
                                " do not cross");
  }
  const int two_n = 2 * n;
  if (mod(edge_sum(e2) - edge_sum(e1), two_n) != mod(l, two_n)) {
    throw std::invalid_argument("edges are not in directions i and i + l/2");
  }
  // Walk around from a: c lies strictly inside the arc a -> b, d outside.
  const int a = e1.even;
  const int b = e1.odd;
  const int ob = mod(b - a, two_n);
  int c = e2.even;
  int d = e2.odd;
  if (mod(c - a, two_n) > ob) std::swap(c, d);
  const int oc = mod(c - a, two_n);
  const int od = mod(d - a, two_n);

  // b back to c, chord to d, d forward to a, chord back to b.
  CycleCertificate outer;
  for (int o = ob; o >= oc; --o) outer.vertices.push_back(mod(a + o, two_n));
  for (int o = od; o <= two_n; ++o) outer.vertices.push_back(mod(a + o, two_n));
  // a forward to c, chord to d, d back to b, chord back to a.
  CycleCertificate inner;
  for (int o = 0; o <= oc; ++o) inner.vertices.push_back(mod(a + o, two_n));
  for (int o = od; o >= ob; --o) inner.vertices.push_back(mod(a + o, two_n));

  if (static_cast<int>(inner.length()) == l + 2) return {inner, outer};
  return {outer, inner};
}

DirectionPartition::DirectionPartition(const BalancedBipartiteGraph& g)
    : n_(g.n()), chords_(static_cast<std::size_t>(g.n())) {
  for (const auto& e : g.edges()) {
    if (is_chord(n_, e)) chords_[static_cast<std::size_t>(direction_of(n_, e))].push_back(e);
  }
  for (auto& list : chords_) {
    std::sort(list.begin(), list.end(), [this](const Edge& x, const Edge& y) {
      return rank_in_direction(n_, x) < rank_in_direction(n_, y);
    });
  }
}

std::optional<std::pair<Edge, Edge>> find_crossing_pair(const DirectionPartition& parts,
                                                        int l) {
  const int n = parts.n();
  check_even_l(n, l);
  const int shift = (l / 2) % n;
  for (int i = 0; i < n; ++i) {
    const auto& first = parts.chords(i);
    const auto& second = parts.chords((i + shift) % n);
    for (const auto& e1 : first) {
      for (const auto& e2 : second) {
        if (is_crossing(n, e1, e2)) return std::pair{e1, e2};
      }
    }
  }
  return std::nullopt;
}

GoodnessVerdict direction_goodness(const BalancedBipartiteGraph& g, int i,
                                   const GoodnessParams& params) {
  const int n = g.n();
  params.validate(n);
  const int w = params.window(n);
  const auto view = direction_edges(n, i);
  std::vector<int> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int t = 0; t < n; ++t) {
    prefix[static_cast<std::size_t>(t) + 1] =
        prefix[static_cast<std::size_t>(t)] + (g.has_edge(view.edges[static_cast<std::size_t>(t)]) ? 1 : 0);
  }
  auto count = [&](int from, int to) {  // ranks [from, to)
    return prefix[static_cast<std::size_t>(to)] - prefix[static_cast<std::size_t>(from)];
  };

  const double window_expected = w * params.p;
  const double window_tolerance = params.eps_prime * window_expected;
  for (int k = 1; k <= n - w + 1; ++k) {
    const int c = count(k - 1, k - 1 + w);
    if (std::abs(c - window_expected) > window_tolerance) {
      return {false, WindowViolation{false, k, c, window_expected, window_tolerance}};
    }
  }
  const double middle_expected = (n - 2 * w) * params.p;
  const double middle_tolerance = params.eps_prime * middle_expected;
  const int c = count(w, n - w);
  if (std::abs(c - middle_expected) > middle_tolerance) {
    return {false, WindowViolation{true, 0, c, middle_expected, middle_tolerance}};
  }
  return {true, std::nullopt};
}

AuditReport audit_directions(const BalancedBipartiteGraph& g,
                             const GoodnessParams& params,
                             const AuditOptions& options) {
  const int n = g.n();
  params.validate(n);
  if (options.subgraph != nullptr && !g.contains(*options.subgraph)) {
    throw std::invalid_argument("subgraph is not contained in the graph");
  }
  if (options.l) check_even_l(n, *options.l);

  AuditReport report;
  report.n = n;
  report.params = params;
  report.bound = std::pow(static_cast<double>(n), 5.0 / 6.0);
  std::vector<bool> good(static_cast<std::size_t>(n), true);
  for (int i = 0; i < n; ++i) {
    if (!direction_goodness(g, i, params).good) {
      report.bad.push_back(i);
      good[static_cast<std::size_t>(i)] = false;
    }
  }

  if (options.l) {
    CloseCrossingCounts counts;
    counts.l = *options.l;
    const double beta = params.beta;
    const double ep = params.eps_prime;
    const double scale = beta * std::pow(n, 3) * params.p * params.p;
    counts.x_reference = 4.0 * (1.0 - 4.0 * ep - 4.0 * beta) * scale;
    if (options.eps) counts.y_reference = (4.0 - 2.0 * *options.eps + ep) * scale;
    if (counts.l == n) {
      counts.audited = false;
    } else {
      const DirectionPartition parts(g);
      const int w = params.window(n);
      const int shift = (counts.l / 2) % n;
      for (int i = 0; i < n; ++i) {
        const int j = (i + shift) % n;
        if (!good[static_cast<std::size_t>(i)] || !good[static_cast<std::size_t>(j)]) continue;
        for (const auto& e1 : parts.chords(i)) {
          for (const auto& e2 : parts.chords(j)) {
            if (!is_close_crossing(n, e1, e2, w)) continue;
            ++counts.x;
            if (options.subgraph != nullptr &&
                (!options.subgraph->has_edge(e1) || !options.subgraph->has_edge(e2))) {
              ++counts.y;
            }
          }
        }
      }
    }
    report.crossings = counts;
  }
  return report;
}

nlohmann::json AuditReport::to_json() const {
  nlohmann::json j = {
      {"n", n},
      {"beta", params.beta},
      {"eps_prime", params.eps_prime},
      {"p", params.p},
      {"window", params.window(n)},
      {"bad_directions", bad},
      {"bad_count", bad.size()},
      {"bound", bound},
      {"within_bound", within_bound()},
  };
  if (crossings) {
    nlohmann::json c = {
        {"l", crossings->l},
        {"audited", crossings->audited},
        {"x", crossings->x},
        {"y", crossings->y},
        {"x_reference", crossings->x_reference},
    };
    c["y_reference"] = crossings->y_reference ? nlohmann::json(*crossings->y_reference)
                                              : nlohmann::json(nullptr);
    j["crossings"] = c;
  }
  return j;
}

namespace {

// Greedy cover of sorted ranks by windows [s, s + w) with s <= n - w.
int windows_needed(const std::vector<int>& ranks, int n, int w) {
  int used = 0;
  std::size_t k = 0;
  while (k < ranks.size()) {
    const int start = std::min(ranks[k], n - w);
    ++used;
    while (k < ranks.size() && ranks[k] < start + w) ++k;
  }
  return used;
}

// True when sorted ranks are exactly the union of two disjoint windows.
bool is_two_windows(const std::vector<int>& ranks, int w) {
  if (static_cast<int>(ranks.size()) != 2 * w) return false;
  std::vector<int> runs;
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    if (k == 0 || ranks[k] != ranks[k - 1] + 1) runs.push_back(0);
    ++runs.back();
  }
  return (runs.size() == 1) || (runs.size() == 2 && runs[0] == w && runs[1] == w);
}

}  // namespace

Lemma5Report lemma5_check(int n, const GoodnessParams& params, int l) {
  if (!(params.beta > 0.0 && params.beta < 1.0 / 6.0)) {
    throw std::invalid_argument("beta must lie in (0, 1/6)");
  }
  const int w = params.window(n);
  if (w < 1 || 2 * w > n) {
    throw std::invalid_argument("window round(2 beta n) must satisfy 1 <= w and 2w <= n");
  }
  if (l % 2 != 0) throw std::invalid_argument("l must be even");
  if (l < 2 * w + 1 || l > 2 * n - 2 * w - 1) {
    throw std::invalid_argument("l = " + std::to_string(l) + " outside [" +
                                std::to_string(2 * w + 1) + ", " +
                                std::to_string(2 * n - 2 * w - 1) + "]");
  }

  Lemma5Report report;
  report.n = n;
  report.beta = params.beta;
  report.window = w;
  report.l = l;
  report.min_exact_partners = n;

  for (int i = 0; i < n; ++i) {
    const int j = (i + l / 2) % n;
    const auto first = direction_edges(n, i).edges;
    const auto second = direction_edges(n, j).edges;
    std::vector<bool> exact(static_cast<std::size_t>(n), false);
    int exact_count = 0;
    for (int r = 0; r < n; ++r) {
      std::vector<int> partners;
      for (int s = 0; s < n; ++s) {
        if (is_close_crossing(n, first[static_cast<std::size_t>(r)],
                              second[static_cast<std::size_t>(s)], w)) {
          partners.push_back(s);
        }
      }
      const int count = static_cast<int>(partners.size());
      report.max_partners = std::max(report.max_partners, count);
      if (count > 2 * w) {
        report.violations.push_back(
            {1, i, r, std::to_string(count) + " close-crossing partners exceed 2w"});
      } else if (windows_needed(partners, n, w) > 2) {
        report.violations.push_back({1, i, r, "partners not covered by two windows"});
      }
      if (is_two_windows(partners, w)) {
        exact[static_cast<std::size_t>(r)] = true;
        ++exact_count;
      }
    }
    report.min_exact_partners = std::min(report.min_exact_partners, exact_count);
    if (exact_count < n - 2 * w) {
      report.violations.push_back({2, i, -1,
                                   std::to_string(exact_count) +
                                       " edges with exactly two full windows, need " +
                                       std::to_string(n - 2 * w)});
    }
    for (int r = w; r < n - w; ++r) {
      if (!exact[static_cast<std::size_t>(r)]) {
        report.violations.push_back({3, i, r, "middle edge lacks two full windows"});
      }
    }
  }
  return report;
}

nlohmann::json Lemma5Report::to_json() const {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : violations) {
    v.push_back({{"statement", x.statement},
                 {"direction", x.direction},
                 {"rank", x.rank},
                 {"detail", x.detail}});
  }
  return {{"n", n},
          {"beta", beta},
          {"window", window},
          {"l", l},
          {"min_exact_partners", min_exact_partners},
          {"max_partners", max_partners},
          {"holds", holds()},
          {"violations", v}};
}

}  // namespace bpc
