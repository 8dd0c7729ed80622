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

#include "bpc/shortcuts.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bpc/directions.hpp"
#include "bpc/parallel.hpp"
#include "bpc/rng.hpp"

namespace bpc {

namespace {

int mod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

void check_l(int n, int l) {
  if (l % 2 != 0) throw std::invalid_argument("l must be even");
  if (l < 0 || l > n) throw std::invalid_argument("l must lie in [0, n]");
}

// Labels from `from` to `to` inclusive, stepping +1 or -1 around the cycle.
void append_arc(std::vector<int>& out, int from, int to, int step, int two_n) {
  for (int v = from;; v = mod(v + step, two_n)) {
    out.push_back(v);
    if (v == to) break;
  }
}

// Scans anchors starting at one fixed i1. Offsets a, c, d of i2, i3, i4 are
// measured clockwise from i1.
template <class Visit>
bool scan_from(const BalancedBipartiteGraph& g, int l, int i1, Visit&& visit) {
  const int two_n = g.order();
  const int n = g.n();
  auto at = [&](int offset) { return mod(i1 + offset, two_n); };
  auto chord_present = [&](int x, int y) {
    const Edge e = Edge::between(x, y);
    return is_chord(n, e) && g.has_edge(e);
  };

  // type I: a + 2 <= c, c + 2 <= d, d + l + 1 <= 2n - 1
  for (int a = 2; a + 5 + l + 1 <= two_n - 1; a += 2) {
    for (int d = a + 6; d + l + 1 <= two_n - 1; d += 2) {
      if (!chord_present(at(1), at(d)) || !chord_present(at(a), at(d + l + 1))) continue;
      for (int c = a + 3; c + 3 <= d; c += 2) {
        if (!chord_present(at(0), at(c)) || !chord_present(at(a + 1), at(c + 1))) continue;
        if (!visit(Shortcut{ShortcutKind::type_i, i1, at(a), at(c), at(d), l})) return false;
      }
    }
  }
  return true;
}

template <class Visit>
bool scan_from_type_ii(const BalancedBipartiteGraph& g, int l, int i1, Visit&& visit) {
  const int two_n = g.order();
  const int n = g.n();
  auto at = [&](int offset) { return mod(i1 + offset, two_n); };
  auto chord_present = [&](int x, int y) {
    const Edge e = Edge::between(x, y);
    return is_chord(n, e) && g.has_edge(e);
  };

  // type II: a + 2 <= d, d + l + 3 <= c, c + 1 <= 2n - 1
  for (int a = 2; a + 2 + l + 3 + 1 <= two_n - 1; a += 2) {
    for (int d = a + 2; d + l + 3 + 1 <= two_n - 1; d += 2) {
      if (!chord_present(at(1), at(d)) || !chord_present(at(a), at(d + l + 1))) continue;
      for (int c = d + l + 3; c + 1 <= two_n - 1; c += 2) {
        if (!chord_present(at(0), at(c)) || !chord_present(at(a + 1), at(c + 1))) continue;
        if (!visit(Shortcut{ShortcutKind::type_ii, i1, at(a), at(c), at(d), l})) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(ShortcutKind kind) {
  return kind == ShortcutKind::type_i ? "I" : "II";
}

std::array<Edge, 4> Shortcut::chords(int n) const {
  const int m = 2 * n;
  return {Edge::between(mod(i1, m), mod(i3, m)),
          Edge::between(mod(i1 + 1, m), mod(i4, m)),
          Edge::between(mod(i2, m), mod(i4 + l + 1, m)),
          Edge::between(mod(i2 + 1, m), mod(i3 + 1, m))};
}

bool is_valid_shortcut(int n, const Shortcut& s) {
  if (n < 2 || s.l % 2 != 0 || s.l < 0 || s.l > n) return false;
  const int m = 2 * n;
  for (int v : {s.i1, s.i2, s.i3, s.i4}) {
    if (v < 0 || v >= m) return false;
  }
  if ((s.i2 - s.i1) % 2 != 0 || (s.i4 - s.i1) % 2 != 0 || (s.i3 - s.i1) % 2 == 0) {
    return false;
  }
  const std::array<int, 8> positions =
      s.kind == ShortcutKind::type_i
          ? std::array<int, 8>{s.i1, s.i1 + 1, s.i2, s.i2 + 1, s.i3, s.i3 + 1, s.i4,
                               s.i4 + s.l + 1}
          : std::array<int, 8>{s.i1, s.i1 + 1, s.i2, s.i2 + 1, s.i4, s.i4 + s.l + 1, s.i3,
                               s.i3 + 1};
  int previous = -1;
  for (int pos : positions) {
    const int offset = mod(pos - s.i1, m);
    if (offset <= previous) return false;
    previous = offset;
  }
  for (const auto& e : s.chords(n)) {
    if (!is_chord(n, e)) return false;
  }
  return true;
}

std::vector<Shortcut> shortcut_interpretations(int n, std::span<const Edge> chords, int l) {
  check_l(n, l);
  std::vector<Shortcut> out;
  if (chords.size() != 4) return out;
  std::array<Edge, 4> given{};
  std::copy(chords.begin(), chords.end(), given.begin());
  std::sort(given.begin(), given.end());
  if (std::adjacent_find(given.begin(), given.end()) != given.end()) return out;

  const int m = 2 * n;
  auto partner = [&](int v) -> std::optional<int> {
    for (const auto& e : given) {
      if (e.touches(v)) return e.other(v);
    }
    return std::nullopt;
  };
  for (const auto& first : given) {
    for (const auto& [i1, i3] : {std::pair{first.even, first.odd},
                                 std::pair{first.odd, first.even}}) {
      const auto i4 = partner(mod(i1 + 1, m));
      if (!i4) continue;
      const auto i2 = partner(mod(*i4 + l + 1, m));
      if (!i2) continue;
      for (auto kind : {ShortcutKind::type_i, ShortcutKind::type_ii}) {
        const Shortcut s{kind, i1, *i2, i3, *i4, l};
        if (!is_valid_shortcut(n, s)) continue;
        auto produced = s.chords(n);
        std::sort(produced.begin(), produced.end());
        if (produced == given) out.push_back(s);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Shortcut& x, const Shortcut& y) {
    return std::tie(x.kind, x.i1, x.i2, x.i3, x.i4) < std::tie(y.kind, y.i1, y.i2, y.i3, y.i4);
  });
  return out;
}

std::optional<Shortcut> classify_shortcut(int n, std::span<const Edge> chords, int l) {
  auto all = shortcut_interpretations(n, chords, l);
  if (all.empty()) return std::nullopt;
  return all.front();
}

ShortcutCount enumerate_shortcuts(const BalancedBipartiteGraph& g, int l,
                                  std::optional<std::uint64_t> cap,
                                  const ShortcutSink& sink) {
  check_l(g.n(), l);
  ShortcutCount result;
  auto visit = [&](const Shortcut& s) {
    if (cap && result.count >= *cap) {
      result.truncated = true;
      return false;
    }
    ++result.count;
    if (sink) sink(s);
    return true;
  };
  for (int i1 = 0; i1 < g.order(); ++i1) {
    if (!scan_from(g, l, i1, visit)) return result;
  }
  for (int i1 = 0; i1 < g.order(); ++i1) {
    if (!scan_from_type_ii(g, l, i1, visit)) return result;
  }
  return result;
}

std::uint64_t count_shortcuts(const BalancedBipartiteGraph& g, int l, unsigned workers) {
  check_l(g.n(), l);
  std::vector<std::uint64_t> per_start(static_cast<std::size_t>(g.order()), 0);
  parallel_for(per_start.size(), workers, [&](std::size_t i1) {
    std::uint64_t local = 0;
    auto visit = [&](const Shortcut&) {
      ++local;
      return true;
    };
    scan_from(g, l, static_cast<int>(i1), visit);
    scan_from_type_ii(g, l, static_cast<int>(i1), visit);
    per_start[i1] = local;
  });
  return std::accumulate(per_start.begin(), per_start.end(), std::uint64_t{0});
}

std::pair<CycleCertificate, CycleCertificate> splice_shortcut(int n, const Shortcut& s) {
  if (!is_valid_shortcut(n, s)) {
    throw std::invalid_argument("not a valid l-shortcut for this n");
  }
  const int m = 2 * n;
  const int far = mod(s.i4 + s.l + 1, m);

  CycleCertificate short_cycle;
  auto& sv = short_cycle.vertices;
  sv.push_back(s.i1);
  sv.push_back(mod(s.i1 + 1, m));
  append_arc(sv, s.i4, far, +1, m);
  sv.push_back(s.i2);
  sv.push_back(mod(s.i2 + 1, m));
  sv.push_back(mod(s.i3 + 1, m));
  sv.push_back(s.i3);

  CycleCertificate long_cycle;
  auto& lv = long_cycle.vertices;
  append_arc(lv, mod(s.i1 + 1, m), s.i2, +1, m);
  if (s.kind == ShortcutKind::type_i) {
    append_arc(lv, far, s.i1, +1, m);
    append_arc(lv, s.i3, mod(s.i2 + 1, m), -1, m);
    append_arc(lv, mod(s.i3 + 1, m), s.i4, +1, m);
  } else {
    append_arc(lv, far, s.i3, +1, m);
    append_arc(lv, s.i1, mod(s.i3 + 1, m), -1, m);
    append_arc(lv, mod(s.i2 + 1, m), s.i4, +1, m);
  }
  return {short_cycle, long_cycle};
}

double lemma1_threshold(double eps_prime, int n) {
  if (!(eps_prime > 0.0 && eps_prime < 1.0)) {
    throw std::invalid_argument("eps' must lie in (0, 1)");
  }
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const double nn = static_cast<double>(n);
  return std::pow(eps_prime, 8) * nn * nn * nn * nn / (4.0 * std::pow(16.0, 7));
}

bool CensusReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const CensusRow& r) { return r.pass; });
}

nlohmann::json CensusReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : rows) {
    list.push_back(
        {{"l", r.l}, {"count", r.count}, {"threshold", r.threshold}, {"pass", r.pass}});
  }
  return {{"n", n},
          {"eps_prime", eps_prime},
          {"edge_count", edge_count},
          {"all_pass", all_pass()},
          {"rows", list}};
}

CensusReport shortcut_census(const BalancedBipartiteGraph& g, double eps_prime,
                             unsigned workers) {
  const int n = g.n();
  const double threshold = lemma1_threshold(eps_prime, n);
  const double needed = (1.0 + eps_prime) * n * n / 2.0;
  if (static_cast<double>(g.edge_count()) < needed) {
    throw HypothesisError("graph has " + std::to_string(g.edge_count()) +
                          " edges, fewer than (1 + eps') n^2 / 2 = " + std::to_string(needed));
  }
  CensusReport report;
  report.n = n;
  report.eps_prime = eps_prime;
  report.edge_count = g.edge_count();
  const int max_l = static_cast<int>(std::floor(eps_prime * n / 8.0));
  for (int l = 0; l <= std::min(max_l, n); l += 2) {
    const auto count = count_shortcuts(g, l, workers);
    report.rows.push_back({l, count, threshold, static_cast<double>(count) >= threshold});
  }
  return report;
}

ShortcutHypergraph::ShortcutHypergraph(int n, int l, int cap) : n_(n), l_(l) {
  if (n < 2 || n > cap) {
    throw std::invalid_argument("hypergraph probes need 2 <= n <= " + std::to_string(cap));
  }
  check_l(n, l);
  const auto complete = complete_bipartite(n);
  enumerate_shortcuts(complete, l, std::nullopt, [&](const Shortcut& s) {
    const auto chords = s.chords(n);
    hyperedges_.push_back({vertex_id(chords[0]), vertex_id(chords[1]),
                           vertex_id(chords[2]), vertex_id(chords[3])});
  });
}

std::uint64_t ShortcutHypergraph::count_inside(const std::vector<bool>& subset) const {
  std::uint64_t inside = 0;
  for (const auto& x : hyperedges_) {
    if (std::all_of(x.begin(), x.end(),
                    [&](int v) { return subset[static_cast<std::size_t>(v)]; })) {
      ++inside;
    }
  }
  return inside;
}

HypergraphSize hypergraph_size(int n, int l, int cap) {
  if (n < 2 || n > cap) {
    throw std::invalid_argument("hypergraph_size needs 2 <= n <= " + std::to_string(cap));
  }
  check_l(n, l);
  return {static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n),
          enumerate_shortcuts(complete_bipartite(n), l).count};
}

double density_function(double eps) { return 4.0 * std::pow(eps, 8) / std::pow(16.0, 6); }

std::vector<DensitySample> hypergraph_density_probe(const ShortcutHypergraph& h, double eps,
                                                    int trials, std::uint64_t seed) {
  if (trials < 0) throw std::invalid_argument("trials must be non-negative");
  const std::size_t vertices = h.vertex_count();
  const auto wanted = static_cast<std::size_t>(std::ceil((0.5 + eps) * static_cast<double>(vertices)));
  const std::size_t size = std::min(wanted, vertices);
  const double bound = 2.0 * density_function(eps) * static_cast<double>(h.hyperedge_count());

  Rng rng(seed);
  std::vector<int> order(vertices);
  std::vector<DensitySample> out;
  for (int trial = 0; trial < trials; ++trial) {
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t k = 0; k < size; ++k) {
      const auto pick = k + static_cast<std::size_t>(rng.below(vertices - k));
      std::swap(order[k], order[pick]);
    }
    std::vector<bool> subset(vertices, false);
    for (std::size_t k = 0; k < size; ++k) subset[static_cast<std::size_t>(order[k])] = true;
    const auto inside = h.count_inside(subset);
    out.push_back({eps, size, inside, bound, static_cast<double>(inside) >= bound});
  }
  return out;
}

std::vector<DensitySample> hypergraph_density_probe(int n, int l, double eps, int trials,
                                                    std::uint64_t seed) {
  return hypergraph_density_probe(ShortcutHypergraph(n, l), eps, trials, seed);
}

double degree_square_sum(const ShortcutHypergraph& h, int i, const std::vector<bool>& subset) {
  std::vector<std::uint64_t> degree(h.vertex_count(), 0);
  for (const auto& x : h.hyperedges()) {
    int inside = 0;
    for (int v : x) inside += subset[static_cast<std::size_t>(v)] ? 1 : 0;
    for (int v : x) {
      const int others = inside - (subset[static_cast<std::size_t>(v)] ? 1 : 0);
      if (others >= i) ++degree[static_cast<std::size_t>(v)];
    }
  }
  double sum = 0.0;
  for (auto d : degree) sum += static_cast<double>(d) * static_cast<double>(d);
  return sum;
}

MomentSample hypergraph_degree_moment(const ShortcutHypergraph& h, int i, double q,
                                      int trials, std::uint64_t seed) {
  if (i < 1 || i > 3) throw std::invalid_argument("i must be 1, 2 or 3");
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("q must lie in (0, 1]");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  Rng rng(seed);
  double total = 0.0;
  std::vector<bool> subset(h.vertex_count());
  for (int trial = 0; trial < trials; ++trial) {
    for (std::size_t v = 0; v < subset.size(); ++v) subset[v] = rng.bernoulli(q);
    total += degree_square_sum(h, i, subset);
  }
  MomentSample sample;
  sample.i = i;
  sample.q = q;
  sample.trials = trials;
  sample.mean = total / trials;
  const double edges = static_cast<double>(h.hyperedge_count());
  sample.denominator =
      std::pow(q, 2 * i) * edges * edges / static_cast<double>(h.vertex_count());
  sample.implied_k = sample.denominator > 0.0 ? sample.mean / sample.denominator : 0.0;
  return sample;
}

MomentSample hypergraph_degree_moment(int n, int l, int i, double q, int trials,
                                      std::uint64_t seed) {
  return hypergraph_degree_moment(ShortcutHypergraph(n, l), i, q, trials, seed);
}

nlohmann::json HypergraphProbe::to_json() const {
  nlohmann::json density_list = nlohmann::json::array();
  for (const auto& d : density) {
    density_list.push_back({{"eps", d.eps},
                            {"subset_size", d.subset_size},
                            {"inside", d.inside},
                            {"bound", d.bound},
                            {"pass", d.pass}});
  }
  nlohmann::json moment_list = nlohmann::json::array();
  for (const auto& m : moments) {
    moment_list.push_back({{"i", m.i},
                           {"q", m.q},
                           {"trials", m.trials},
                           {"mean", m.mean},
                           {"denominator", m.denominator},
                           {"implied_k", m.implied_k}});
  }
  return {{"n", n},
          {"l", l},
          {"vertices", vertices},
          {"hyperedges", hyperedges},
          {"density", density_list},
          {"moments", moment_list}};
}

}  // namespace bpc
