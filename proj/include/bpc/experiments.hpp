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

// Reproducible experiment drivers. Every randomised trial t draws its
// randomness from derive_seed(master_seed, t), so any row can be replayed on
// its own, and rows are emitted in trial order whatever the worker count.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bpc/adversary.hpp"
#include "bpc/bigraph.hpp"
#include "bpc/directions.hpp"
#include "bpc/spectrum.hpp"

namespace bpc {

/// Evaluates a probability: a plain number ("0.1") or a power of n such as
/// "5n^-2/3", "5*n^(-2/3)" or "0.25 * n^(-0.6667)". Throws
/// std::invalid_argument for malformed input or a value outside [0, 1].
double parse_probability(const std::string& expr, int n);

/// Formats a double with the shortest round-trip representation.
std::string format_double(double x);

struct Theorem1Result {
  int n = 0;
  std::uint64_t graphs_checked = 0;  // subgraphs of K_{n,n} with m > n^2/2
  std::uint64_t hamiltonian = 0;
  std::vector<BalancedBipartiteGraph> counterexamples;

  nlohmann::json to_json() const;
};

inline constexpr int kTheorem1Cap = 5;

/// Checks every Hamiltonian subgraph of K_{n,n} with more than n^2/2 edges
/// for bipancyclicity. Throws std::invalid_argument unless 2 <= n <= 5.
Theorem1Result verify_theorem1(int n, unsigned workers = 0);

struct ExperimentConfig {
  int n = 64;
  std::string p_expr = "5n^-2/3";
  double eps = 0.2;
  double delta = 0.3;
  std::optional<double> beta;       // default min(delta/3, eps')
  std::optional<double> eps_prime;  // default eps/17
  int trials = 20;
  std::uint64_t master_seed = 1;
  unsigned workers = 1;
  bool timing = false;  // fill the ms column; off keeps CSV bytes reproducible
  std::uint64_t dfs_budget = kDefaultSearchBudget;

  double p() const { return parse_probability(p_expr, n); }
  double resolved_eps_prime() const { return eps_prime.value_or(eps / 17.0); }
  double resolved_beta() const;
  /// Throws std::invalid_argument when a parameter is out of range.
  void validate() const;
  nlohmann::json to_json() const;
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  int n = 0;
  double p = 0.0;
  double eps = 0.0;
  std::size_t edges_sampled = 0;  // G(n,n,p) plus the planted cycle
  std::size_t edges_final = 0;
  BipancyclicVerdict::Kind verdict = BipancyclicVerdict::Kind::unknown;
  std::vector<int> missing;
  std::vector<int> unknown;
  long long ms = 0;
};

inline constexpr const char* kSweepCsvHeader =
    "trial,seed,n,p,eps,edges_sampled,edges_final,verdict,missing,unknown,ms";

/// One resilience trial: sample G(n,n,p) with derived seed, plant the
/// standard cycle, thin to ceil((1/2 + eps) e) edges keeping the cycle, and
/// certify the spectrum. Certificates are re-validated before returning;
/// a failed re-validation throws std::logic_error.
TrialRecord run_resilience_trial(const ExperimentConfig& config, int trial);

std::vector<TrialRecord> resilience_sweep(const ExperimentConfig& config);

std::string to_csv_row(const TrialRecord& r);
std::string sweep_csv(const std::vector<TrialRecord>& records);

struct AuditTrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  int n = 0;
  double p = 0.0;
  AuditReport report;
};

inline constexpr const char* kAuditCsvHeader =
    "trial,seed,n,p,beta,eps_prime,bad,bound,within_bound,x,y";

/// Bad-direction audit of G(n, n, p) per trial. With `l` set, also counts
/// close crossings and their losses in a uniformly random subgraph keeping
/// ceil((1 + eps) e / 2) edges.
std::vector<AuditTrialRecord> direction_audit_trials(const ExperimentConfig& config,
                                                     std::optional<int> l = std::nullopt);
std::string audit_csv(const std::vector<AuditTrialRecord>& records);

/// Uniformly random subgraph with exactly `keep` edges (all edges if keep >= e).
BalancedBipartiteGraph random_subgraph(const BalancedBipartiteGraph& g, std::size_t keep,
                                       std::uint64_t seed);

enum class TightnessMode { c4_breaker, fan };

struct TightnessRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  int n = 0;
  double p = 0.0;
  TightnessMode mode = TightnessMode::c4_breaker;
  bool planted = false;
  std::size_t edges_before = 0;
  std::size_t edges_after = 0;
  std::size_t deleted = 0;
  std::uint64_t c4_before = 0;
  std::uint64_t c4_after = 0;
  bool cycle_kept = false;  // every standard-cycle edge of the input survives
  bool hamiltonian = false;  // the output contains the full standard cycle
  double predicted_edges = 0.0;  // fan: p (n^2 + n + 2) / 2
};

inline constexpr const char* kTightnessCsvHeader =
    "trial,seed,n,p,mode,planted,edges_before,edges_after,deleted,c4_before,c4_after,"
    "cycle_kept,hamiltonian,c4_claim_discrepancy";

struct TightnessRun {
  TightnessRecord record;
  BalancedBipartiteGraph graph;
  DeletionLog log;
};

/// One adversary trial on G(n,n,p) with the derived seed. The quadrilateral
/// breaker always plants the standard cycle; the fan construction plants it
/// only when `plant` is set.
TightnessRun run_tightness_trial(const ExperimentConfig& config, TightnessMode mode,
                                 bool plant, int trial);
std::vector<TightnessRecord> tightness_trials(const ExperimentConfig& config,
                                              TightnessMode mode, bool plant);
std::string tightness_csv(const std::vector<TightnessRecord>& records);
nlohmann::json to_json(const TightnessRecord& r);

struct ChernoffRow {
  double eps = 0.0;
  double bound = 0.0;
  double observed = 0.0;
  double slack = 0.0;  // 3 / sqrt(samples)
  bool pass = false;
};

struct ChernoffCheck {
  std::int64_t trials_n = 0;
  double p = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<ChernoffRow> rows;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

/// Draws `samples` Binomial(trials_n, p) values by inverse-CDF lookup and
/// compares the frequency of |X - mean| >= eps mean with the Chernoff bound.
ChernoffCheck chernoff_check(std::int64_t trials_n, double p, std::int64_t samples,
                             const std::vector<double>& eps_values, std::uint64_t seed);

}  // namespace bpc
