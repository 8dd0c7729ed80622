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

#include "bpc/bigraph.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bpc/rng.hpp"

namespace bpc {

Edge Edge::between(int x, int y) {
  if (x < 0 || y < 0) {
    throw std::invalid_argument("edge labels must be non-negative");
  }
  if ((x ^ y) % 2 == 0) {
    throw std::invalid_argument("edge {" + std::to_string(x) + "," +
                                std::to_string(y) +
                                "} does not join an even and an odd label");
  }
  return x % 2 == 0 ? Edge{x, y} : Edge{y, x};
}

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.even) + "," + std::to_string(e.odd) + "}";
}

BalancedBipartiteGraph::BalancedBipartiteGraph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  rows_.assign(2 * static_cast<std::size_t>(n) * words_, 0);
}

BalancedBipartiteGraph BalancedBipartiteGraph::from_edges(
    int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& e : edges) b.add(e);
  return b.build();
}

void BalancedBipartiteGraph::check_label(int v) const {
  if (v < 0 || v >= order()) {
    throw std::invalid_argument("label " + std::to_string(v) +
                                " outside [0, " + std::to_string(order()) +
                                ")");
  }
}

bool BalancedBipartiteGraph::has_edge(int x, int y) const {
  if (x < 0 || y < 0 || x >= order() || y >= order() || (x ^ y) % 2 == 0) {
    return false;
  }
  const auto r = row(x);
  const auto bit = static_cast<std::size_t>(y >> 1);
  return (r[bit / 64] >> (bit % 64)) & 1u;
}

int BalancedBipartiteGraph::degree(int v) const {
  check_label(v);
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> BalancedBipartiteGraph::neighbors(int v) const {
  check_label(v);
  std::vector<int> out;
  const int offset = 1 - v % 2;
  const auto r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    for (auto bits = r[w]; bits != 0; bits &= bits - 1) {
      const int j = static_cast<int>(w * 64) + std::countr_zero(bits);
      out.push_back(2 * j + offset);
    }
  }
  return out;
}

std::vector<Edge> BalancedBipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int x = 0; x < order(); x += 2) {
    for (int y : neighbors(x)) out.push_back({x, y});
  }
  return out;
}

bool BalancedBipartiteGraph::contains(const BalancedBipartiteGraph& other) const {
  if (other.n_ != n_) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if ((other.rows_[i] & ~rows_[i]) != 0) return false;
  }
  return true;
}

bool GraphBuilder::add(const Edge& e) {
  graph_.check_label(e.even);
  graph_.check_label(e.odd);
  if (graph_.has_edge(e)) return false;
  const std::size_t w = graph_.words_;
  const auto be = static_cast<std::size_t>(e.odd >> 1);
  const auto bo = static_cast<std::size_t>(e.even >> 1);
  graph_.rows_[static_cast<std::size_t>(e.even) * w + be / 64] |= 1ULL << (be % 64);
  graph_.rows_[static_cast<std::size_t>(e.odd) * w + bo / 64] |= 1ULL << (bo % 64);
  ++graph_.edge_count_;
  return true;
}

bool GraphBuilder::remove(const Edge& e) {
  if (!graph_.has_edge(e)) return false;
  const std::size_t w = graph_.words_;
  const auto be = static_cast<std::size_t>(e.odd >> 1);
  const auto bo = static_cast<std::size_t>(e.even >> 1);
  graph_.rows_[static_cast<std::size_t>(e.even) * w + be / 64] &= ~(1ULL << (be % 64));
  graph_.rows_[static_cast<std::size_t>(e.odd) * w + bo / 64] &= ~(1ULL << (bo % 64));
  --graph_.edge_count_;
  return true;
}

void RandomModel::validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0, 1]");
  }
}

BalancedBipartiteGraph complete_bipartite(int n) {
  GraphBuilder b(n);
  for (int x = 0; x < 2 * n; x += 2) {
    for (int y = 1; y < 2 * n; y += 2) b.add({x, y});
  }
  return b.build();
}

BalancedBipartiteGraph sample_random(const RandomModel& model) {
  model.validate();
  Rng rng(model.seed);
  GraphBuilder b(model.n);
  const int two_n = 2 * model.n;
  for (int x = 0; x < two_n; x += 2) {
    for (int y = 1; y < two_n; y += 2) {
      if (rng.uniform01() < model.p) b.add({x, y});
    }
  }
  return b.build();
}

BalancedBipartiteGraph remove_edges(const BalancedBipartiteGraph& g,
                                    std::span<const Edge> victims) {
  GraphBuilder b(g);
  for (const auto& e : victims) {
    if (!b.remove(e)) {
      throw std::invalid_argument("cannot remove " + to_string(e) +
                                  ": not an edge of the graph");
    }
  }
  return b.build();
}

BalancedBipartiteGraph add_edges(const BalancedBipartiteGraph& g,
                                 std::span<const Edge> extra) {
  GraphBuilder b(g);
  for (const auto& e : extra) b.add(e);
  return b.build();
}

std::vector<Edge> standard_cycle_edges(int n) {
  if (n < 2) throw std::invalid_argument("the standard cycle needs n >= 2");
  std::vector<Edge> out;
  const int two_n = 2 * n;
  for (int i = 0; i < two_n; ++i) out.push_back(Edge::between(i, (i + 1) % two_n));
  return out;
}

int circ_dist(long long i, int two_n) {
  if (two_n <= 0) throw std::invalid_argument("cycle length must be positive");
  long long r = i % two_n;
  if (r < 0) r += two_n;
  return static_cast<int>(std::min<long long>(r, two_n - r));
}

double chernoff_tail_bound(double eps, double mean) {
  if (!(eps > 0.0 && eps <= 1.5)) {
    throw std::invalid_argument("eps must lie in (0, 3/2]");
  }
  if (!(mean > 0.0)) throw std::invalid_argument("mean must be positive");
  return 2.0 * std::exp(-eps * eps * mean / 3.0);
}

ParityPermutation::ParityPermutation(std::vector<int> mapping)
    : mapping_(std::move(mapping)) {
  const std::size_t size = mapping_.size();
  if (size == 0 || size % 2 != 0) {
    throw std::invalid_argument("permutation size must be a positive even number");
  }
  std::vector<bool> seen(size, false);
  for (std::size_t v = 0; v < size; ++v) {
    const int image = mapping_[v];
    if (image < 0 || static_cast<std::size_t>(image) >= size ||
        seen[static_cast<std::size_t>(image)]) {
      throw std::invalid_argument("mapping is not a bijection of [2n]");
    }
    if (static_cast<std::size_t>(image) % 2 != v % 2) {
      throw std::invalid_argument("mapping does not preserve parity");
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
}

ParityPermutation ParityPermutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<int> m(2 * static_cast<std::size_t>(n));
  for (std::size_t v = 0; v < m.size(); ++v) m[v] = static_cast<int>(v);
  return ParityPermutation(std::move(m));
}

Edge ParityPermutation::operator()(const Edge& e) const {
  return Edge{(*this)(e.even), (*this)(e.odd)};
}

ParityPermutation ParityPermutation::inverse() const {
  std::vector<int> inv(mapping_.size());
  for (std::size_t v = 0; v < mapping_.size(); ++v) {
    inv[static_cast<std::size_t>(mapping_[v])] = static_cast<int>(v);
  }
  return ParityPermutation(std::move(inv));
}

BalancedBipartiteGraph ParityPermutation::apply(
    const BalancedBipartiteGraph& g) const {
  if (g.n() != n()) throw std::invalid_argument("permutation size mismatch");
  GraphBuilder b(g.n());
  for (const auto& e : g.edges()) b.add((*this)(e));
  return b.build();
}

std::string to_bbg(const BalancedBipartiteGraph& g) {
  std::string out = "bbg 1\nn " + std::to_string(g.n()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.even);
    out += ' ';
    out += std::to_string(e.odd);
    out += '\n';
  }
  return out;
}

namespace {

int parse_int(std::string_view s, std::size_t line_no) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError("line " + std::to_string(line_no) + ": bad integer '" +
                     std::string(s) + "'");
  }
  return value;
}

}  // namespace

BalancedBipartiteGraph parse_bbg(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
      throw ParseError("missing trailing newline");
    }
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  if (lines.size() < 2 || lines[0] != "bbg 1") {
    throw ParseError("expected header 'bbg 1'");
  }
  if (!lines[1].starts_with("n ")) throw ParseError("line 2: expected 'n <n>'");
  const int n = parse_int(lines[1].substr(2), 2);
  if (n < 1) throw ParseError("line 2: n must be at least 1");
  GraphBuilder b(n);
  Edge previous{-1, -1};
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const auto line = lines[k];
    const auto sp = line.find(' ');
    if (sp == std::string_view::npos) {
      throw ParseError("line " + std::to_string(k + 1) + ": expected '<even> <odd>'");
    }
    const int x = parse_int(line.substr(0, sp), k + 1);
    const int y = parse_int(line.substr(sp + 1), k + 1);
    if (x % 2 != 0 || y % 2 != 1 || x >= 2 * n || y >= 2 * n || x < 0) {
      throw ParseError("line " + std::to_string(k + 1) +
                       ": expected an even label then an odd label in [0, 2n)");
    }
    const Edge e{x, y};
    if (!(previous < e)) {
      throw ParseError("line " + std::to_string(k + 1) +
                       ": edges must be strictly ascending");
    }
    previous = e;
    b.add(e);
  }
  return b.build();
}

BalancedBipartiteGraph read_bbg_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_bbg(buffer.str());
}

void write_bbg_file(const std::string& path, const BalancedBipartiteGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_bbg(g);
}

}  // namespace bpc
