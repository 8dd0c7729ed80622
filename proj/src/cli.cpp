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

#include "bpc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "bpc/adversary.hpp"
#include "bpc/bigraph.hpp"
#include "bpc/cycles.hpp"
#include "bpc/directions.hpp"
#include "bpc/experiments.hpp"
#include "bpc/parallel.hpp"
#include "bpc/rng.hpp"
#include "bpc/shortcuts.hpp"
#include "bpc/spectrum.hpp"

namespace bpc {
namespace {

struct Options {
  int n = 0;
  std::string p_expr;
  std::uint64_t seed = 1;
  std::optional<double> beta;
  std::optional<double> eps_prime;
  double eps = 0.2;
  double delta = 0.3;
  std::optional<int> l;
  int trials = 1;
  unsigned workers = 0;
  std::string in_path;
  std::string out_path;
  std::string csv_path;
  std::string json_path;
  std::string log_path;
  std::string certs_path;
  std::string mode;
  std::optional<std::size_t> target;
  std::uint64_t budget = kDefaultSearchBudget;
  bool plant = false;
  bool timing = false;
  std::int64_t big_n = 10000;
  std::int64_t samples = 100000;
  std::vector<double> eps_list;
  std::vector<double> q_list;
  std::vector<int> i_list;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw std::invalid_argument("failed writing '" + path + "'");
}

// Writes to the file when a path is given, otherwise to `out`.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text(path, text);
  }
}

ExperimentConfig make_config(const Options& o, const std::string& default_p) {
  ExperimentConfig c;
  c.n = o.n;
  c.p_expr = o.p_expr.empty() ? default_p : o.p_expr;
  c.eps = o.eps;
  c.delta = o.delta;
  c.beta = o.beta;
  c.eps_prime = o.eps_prime;
  c.trials = o.trials;
  c.master_seed = o.seed;
  c.workers = o.workers == 0 ? default_workers() : o.workers;
  c.timing = o.timing;
  c.dfs_budget = o.budget;
  c.validate();
  return c;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const double p = parse_probability(o.p_expr, o.n);
  RandomModel model{o.n, p, o.seed};
  model.validate();
  auto g = sample_random(model);
  if (o.plant) g = add_edges(g, standard_cycle_edges(o.n));
  emit(o.out_path, to_bbg(g), out);
  return kExitOk;
}

int cmd_thin(const Options& o, std::ostream& out) {
  const auto g = read_bbg_file(o.in_path);
  const auto target = o.target.value_or(static_cast<std::size_t>(
      std::ceil((0.5 + o.eps) * static_cast<double>(g.edge_count()))));
  const auto result =
      random_thin_keep_hamilton(g, standard_hamilton(g.n()), target, o.seed);
  emit(o.out_path, to_bbg(result.graph), out);
  if (!o.log_path.empty()) write_text(o.log_path, result.log.to_text());
  return kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const auto g = read_bbg_file(o.in_path);
  SpectrumMode mode = SpectrumMode::certificate;
  if (o.mode == "exhaustive") {
    mode = SpectrumMode::exhaustive;
  } else if (!o.mode.empty() && o.mode != "certificate") {
    throw std::invalid_argument("unknown spectrum mode '" + o.mode + "'");
  }
  std::optional<CycleCertificate> hamilton;
  if (o.plant) {
    hamilton = standard_hamilton(g.n());
    if (!validate_cycle(g, *hamilton)) {
      throw std::invalid_argument("--planted given but the standard Hamilton cycle is not in g");
    }
  }
  SpectrumOptions options;
  options.dfs_budget = o.budget;
  options.workers = o.workers == 0 ? 1 : o.workers;
  const auto verdict = is_bipancyclic(g, hamilton, mode, options);
  auto j = verdict.report.to_json();
  j["verdict"] = std::string(to_string(verdict.kind));
  j["missing"] = verdict.missing;
  j["unknown"] = verdict.unknown;
  out << j.dump(2) << '\n';
  if (!o.certs_path.empty()) {
    std::string lines;
    for (const auto& entry : verdict.report.entries) {
      if (entry.cycle) lines += to_line(*entry.cycle) + "\n";
    }
    write_text(o.certs_path, lines);
  }
  return verdict.kind == BipancyclicVerdict::Kind::no ? kExitViolation : kExitOk;
}

int cmd_theorem1(const Options& o, std::ostream& out) {
  const auto result = verify_theorem1(o.n, o.workers);
  out << "n=" << result.n << " graphs_checked=" << result.graphs_checked
      << " hamiltonian=" << result.hamiltonian << '\n';
  out << result.counterexamples.size() << " counterexamples\n";
  if (!o.json_path.empty()) write_text(o.json_path, result.to_json().dump(2) + "\n");
  return result.counterexamples.empty() ? kExitOk : kExitViolation;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto config = make_config(o, "5n^-2/3");
  const auto records = resilience_sweep(config);
  emit(o.csv_path, sweep_csv(records), out);
  const auto failures = std::count_if(records.begin(), records.end(), [](const TrialRecord& r) {
    return r.verdict == BipancyclicVerdict::Kind::no;
  });
  if (!o.json_path.empty()) {
    const auto yes = std::count_if(records.begin(), records.end(), [](const TrialRecord& r) {
      return r.verdict == BipancyclicVerdict::Kind::yes;
    });
    nlohmann::json seeds = nlohmann::json::array();
    for (const auto& r : records) seeds.push_back(r.seed);
    const nlohmann::json summary = {{"config", config.to_json()},
                                    {"derived_seeds", seeds},
                                    {"yes", yes},
                                    {"no", failures}};
    write_text(o.json_path, summary.dump(2) + "\n");
  }
  return failures == 0 ? kExitOk : kExitViolation;
}

int cmd_census(const Options& o, std::ostream& out) {
  const auto g = o.in_path.empty() ? complete_bipartite(o.n) : read_bbg_file(o.in_path);
  const auto report = shortcut_census(g, o.eps_prime.value_or(0.5), o.workers);
  out << report.to_json().dump(2) << '\n';
  return report.all_pass() ? kExitOk : kExitViolation;
}

int cmd_probe(const Options& o, std::ostream& out) {
  const ShortcutHypergraph h(o.n, o.l.value_or(0));
  HypergraphProbe probe;
  probe.n = h.n();
  probe.l = h.l();
  probe.vertices = h.vertex_count();
  probe.hyperedges = h.hyperedge_count();
  const auto eps_list = o.eps_list.empty() ? std::vector<double>{0.1} : o.eps_list;
  for (std::size_t k = 0; k < eps_list.size(); ++k) {
    auto samples = hypergraph_density_probe(h, eps_list[k], o.trials, substream_seed(o.seed, k));
    probe.density.insert(probe.density.end(), samples.begin(), samples.end());
  }
  const auto q_list = o.q_list.empty() ? std::vector<double>{0.5} : o.q_list;
  const auto i_list = o.i_list.empty() ? std::vector<int>{1, 2, 3} : o.i_list;
  std::uint64_t stream = 1000;
  for (int i : i_list) {
    for (double q : q_list) {
      probe.moments.push_back(
          hypergraph_degree_moment(h, i, q, o.trials, substream_seed(o.seed, stream++)));
    }
  }
  out << probe.to_json().dump(2) << '\n';
  const bool dense = std::all_of(probe.density.begin(), probe.density.end(),
                                 [](const DensitySample& s) { return s.pass; });
  return dense ? kExitOk : kExitViolation;
}

int cmd_audit(const Options& o, std::ostream& out) {
  const auto config = make_config(o, "5n^-2/3");
  const auto records = direction_audit_trials(config, o.l);
  if (!o.csv_path.empty()) write_text(o.csv_path, audit_csv(records));
  nlohmann::json trials = nlohmann::json::array();
  std::size_t within = 0;
  for (const auto& r : records) {
    auto j = r.report.to_json();
    j["trial"] = r.trial;
    j["seed"] = r.seed;
    trials.push_back(std::move(j));
    if (r.report.within_bound()) ++within;
  }
  const nlohmann::json summary = {
      {"config", config.to_json()}, {"within_bound", within}, {"trials", trials}};
  out << summary.dump(2) << '\n';
  return within == records.size() ? kExitOk : kExitViolation;
}

int cmd_lemma5(const Options& o, std::ostream& out) {
  const GoodnessParams params{o.beta.value_or(0.1), o.eps_prime.value_or(0.1), 1.0};
  params.validate(o.n);
  std::vector<int> ls;
  if (o.l) {
    ls.push_back(*o.l);
  } else {
    const int w = params.window(o.n);
    for (int l = 2 * w + 1; l <= 2 * o.n - 2 * w - 1; ++l) {
      if (l % 2 == 0) ls.push_back(l);
    }
  }
  nlohmann::json reports = nlohmann::json::array();
  bool holds = true;
  for (int l : ls) {
    const auto report = lemma5_check(o.n, params, l);
    holds = holds && report.holds();
    reports.push_back(report.to_json());
  }
  out << nlohmann::json{{"n", o.n}, {"holds", holds}, {"reports", reports}}.dump(2) << '\n';
  return holds ? kExitOk : kExitViolation;
}

TightnessMode parse_mode(const std::string& mode) {
  if (mode == "c4-breaker") return TightnessMode::c4_breaker;
  if (mode == "fan") return TightnessMode::fan;
  throw std::invalid_argument("--mode must be c4-breaker or fan");
}

int cmd_tightness(const Options& o, std::ostream& out) {
  const auto mode = parse_mode(o.mode);
  const auto config = make_config(o, "1");
  if (!o.csv_path.empty()) {
    const auto records = tightness_trials(config, mode, o.plant);
    write_text(o.csv_path, tightness_csv(records));
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : records) rows.push_back(to_json(r));
    out << nlohmann::json{{"config", config.to_json()}, {"trials", rows}}.dump(2) << '\n';
    const bool ok = std::all_of(records.begin(), records.end(),
                                [](const TightnessRecord& r) { return r.cycle_kept; });
    return ok ? kExitOk : kExitViolation;
  }
  const auto run = run_tightness_trial(config, mode, o.plant, 0);
  if (o.out_path.empty()) {
    out << to_bbg(run.graph);
  } else {
    write_text(o.out_path, to_bbg(run.graph));
  }
  if (o.log_path.empty()) {
    out << run.log.to_text();
  } else {
    write_text(o.log_path, run.log.to_text());
  }
  out << to_json(run.record).dump(2) << '\n';
  return run.record.cycle_kept ? kExitOk : kExitViolation;
}

int cmd_chernoff(const Options& o, std::ostream& out) {
  const double p = o.p_expr.empty() ? 0.1 : parse_probability(o.p_expr, 1);
  const auto eps_list = o.eps_list.empty() ? std::vector<double>{0.1, 0.5, 1.0} : o.eps_list;
  const auto check = chernoff_check(o.big_n, p, o.samples, eps_list, o.seed);
  out << check.to_json().dump(2) << '\n';
  return check.all_pass() ? kExitOk : kExitViolation;
}

// Appends "--key=value" for each line of the --config file whose key is not
// already given on the command line.
std::vector<std::string> with_config_defaults(const std::vector<std::string>& args) {
  std::vector<std::string> out = args;
  std::string path;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config" && k + 1 < args.size()) path = args[k + 1];
    if (args[k].rfind("--config=", 0) == 0) path = args[k].substr(9);
  }
  if (path.empty()) return out;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  auto given = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(number) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    std::replace(key.begin(), key.end(), '_', '-');
    if (key.empty() || key == "config") {
      throw std::invalid_argument(path + ":" + std::to_string(number) + ": bad key");
    }
    const std::string flag = "--" + key;
    if (!given(flag)) out.push_back(flag + "=" + value);
  }
  return out;
}

}  // namespace

int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipancyclicity resilience toolkit", "bpc"};
  app.require_subcommand(1, 1);
  Options o;

  std::string config_path;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key=value defaults file");
  };
  auto n_opt = [&](CLI::App* sub) {
    return sub->add_option("--n", o.n, "vertices per side")->check(CLI::PositiveNumber);
  };
  auto seed_opt = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "master seed"); };
  auto p_opt = [&](CLI::App* sub) {
    return sub->add_option("--p", o.p_expr, "edge probability, e.g. 0.1 or 5n^-2/3");
  };
  auto workers_opt = [&](CLI::App* sub) {
    sub->add_option("--workers", o.workers, "worker threads (0 = hardware)");
  };

  auto* gen = app.add_subcommand("gen", "sample G(n,n,p) as a bbg graph");
  common(gen);
  n_opt(gen)->required();
  p_opt(gen)->required();
  seed_opt(gen);
  gen->add_flag("--plant", o.plant, "add the standard Hamilton cycle");
  gen->add_option("-o,--out", o.out_path, "output file");

  auto* thin = app.add_subcommand("thin", "delete random edges, keeping the standard Hamilton cycle");
  common(thin);
  thin->add_option("--in", o.in_path, "input bbg file")->required();
  thin->add_option("--eps", o.eps, "keep ceil((1/2 + eps) e(g)) edges");
  thin->add_option("--target", o.target, "explicit edge target");
  seed_opt(thin);
  thin->add_option("-o,--out", o.out_path, "output file");
  thin->add_option("--log", o.log_path, "deletion log file");

  auto* spectrum = app.add_subcommand("spectrum", "even cycle spectrum of a bbg graph");
  common(spectrum);
  spectrum->add_option("--in", o.in_path, "input bbg file")->required();
  spectrum->add_option("--mode", o.mode, "exhaustive | certificate");
  spectrum->add_flag("--planted", o.plant, "use the standard Hamilton cycle");
  spectrum->add_option("--budget", o.budget, "DFS steps per length");
  spectrum->add_option("--certs", o.certs_path, "write certificate lines here");
  workers_opt(spectrum);

  auto* theorem1 = app.add_subcommand("theorem1", "exhaustive check of dense Hamiltonian subgraphs");
  common(theorem1);
  n_opt(theorem1)->required();
  workers_opt(theorem1);
  theorem1->add_option("--json", o.json_path, "full JSON report");

  auto* sweep = app.add_subcommand("resilience-sweep", "Monte Carlo resilience trials");
  common(sweep);
  n_opt(sweep)->required();
  p_opt(sweep);
  sweep->add_option("--eps", o.eps, "edge fraction above one half");
  sweep->add_option("--delta", o.delta, "delta");
  sweep->add_option("--trials", o.trials, "trial count");
  seed_opt(sweep);
  workers_opt(sweep);
  sweep->add_option("--budget", o.budget, "DFS steps per length");
  sweep->add_flag("--timing", o.timing, "fill the ms column");
  sweep->add_option("--csv", o.csv_path, "CSV output file");
  sweep->add_option("--json", o.json_path, "config and summary JSON");

  auto* census = app.add_subcommand("shortcut-census", "count l-shortcuts for small l");
  common(census);
  n_opt(census);
  census->add_option("--in", o.in_path, "input bbg file (default K_{n,n})");
  census->add_option("--eps-prime", o.eps_prime, "eps'");
  workers_opt(census);

  auto* probe = app.add_subcommand("hypergraph-probe", "shortcut hypergraph statistics");
  common(probe);
  n_opt(probe)->required();
  probe->add_option("--l", o.l, "shortcut parameter");
  probe->add_option("--eps", o.eps_list, "density eps values");
  probe->add_option("--q", o.q_list, "sampling probabilities");
  probe->add_option("--i", o.i_list, "degree orders");
  probe->add_option("--trials", o.trials, "samples per setting");
  seed_opt(probe);

  auto* audit = app.add_subcommand("direction-audit", "count bad directions in G(n,n,p)");
  common(audit);
  n_opt(audit)->required();
  p_opt(audit);
  audit->add_option("--beta", o.beta, "beta");
  audit->add_option("--eps-prime", o.eps_prime, "eps'");
  audit->add_option("--eps", o.eps, "subgraph edge fraction above one half");
  audit->add_option("--l", o.l, "count close crossings for this l");
  audit->add_option("--trials", o.trials, "trial count");
  seed_opt(audit);
  workers_opt(audit);
  audit->add_option("--csv", o.csv_path, "CSV output file");

  auto* lemma5 = app.add_subcommand("lemma5-check", "exhaustive close-crossing structure check");
  common(lemma5);
  n_opt(lemma5)->required();
  lemma5->add_option("--beta", o.beta, "beta");
  lemma5->add_option("--eps-prime", o.eps_prime, "eps'");
  lemma5->add_option("--l", o.l, "single l (default: every admissible even l)");

  auto* tightness = app.add_subcommand("tightness", "run a deletion adversary");
  common(tightness);
  tightness->add_option("--mode", o.mode, "c4-breaker | fan")->required();
  n_opt(tightness)->required();
  p_opt(tightness);
  seed_opt(tightness);
  tightness->add_flag("--plant", o.plant, "plant the Hamilton cycle (fan mode)");
  tightness->add_option("--trials", o.trials, "trial count (with --csv)");
  workers_opt(tightness);
  tightness->add_option("-o,--out", o.out_path, "output graph file");
  tightness->add_option("--log", o.log_path, "deletion log file");
  tightness->add_option("--csv", o.csv_path, "batch CSV output file");

  auto* chernoff = app.add_subcommand("chernoff-check", "binomial tails against the Chernoff bound");
  common(chernoff);
  chernoff->add_option("--N", o.big_n, "binomial trials");
  p_opt(chernoff);
  chernoff->add_option("--samples", o.samples, "sample count");
  chernoff->add_option("--eps", o.eps_list, "relative deviations");
  seed_opt(chernoff);

  std::vector<std::string> expanded;
  try {
    expanded = with_config_defaults(args);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const std::vector<std::pair<CLI::App*, std::function<int(const Options&, std::ostream&)>>>
      table = {{gen, cmd_gen},         {thin, cmd_thin},         {spectrum, cmd_spectrum},
               {theorem1, cmd_theorem1}, {sweep, cmd_sweep},     {census, cmd_census},
               {probe, cmd_probe},     {audit, cmd_audit},       {lemma5, cmd_lemma5},
               {tightness, cmd_tightness}, {chernoff, cmd_chernoff}};
  try {
    for (const auto& [sub, run] : table) {
      if (sub->parsed()) return run(o, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const HypothesisError& e) {
    err << "hypothesis not met: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace bpc
