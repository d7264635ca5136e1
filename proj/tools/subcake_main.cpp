// Copyright 2026 The subcake authors
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

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "subcake/instance_io.hpp"
#include "subcake/lemma_checks.hpp"
#include "subcake/suite.hpp"

namespace {

using namespace subcake;

double elapsed_ms(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out << text;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

int cmd_generate(const std::string& kind, std::int64_t n, std::uint64_t seed, int blocks,
                 const std::string& region, const std::string& fraction,
                 const std::string& profile, const std::string& out_path) {
  GeneratorSpec spec;
  spec.kind = generator_kind_from_name(kind);
  spec.n = n;
  spec.seed = seed;
  spec.num_blocks = blocks;
  spec.profile = profile;
  if (!region.empty()) {
    const auto comma = region.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("--region expects \"lo,hi\"");
    spec.region = Interval(rat_from_string(region.substr(0, comma)),
                           rat_from_string(region.substr(comma + 1)));
  }
  if (!fraction.empty()) spec.fraction = rat_from_string(fraction);

  save_instance(generate(spec), out_path);
  std::cout << "wrote " << out_path << " (" << n << " players, " << kind << ")\n";
  return 0;
}

int cmd_dc(const std::string& instance_path, const std::string& out_path) {
  const auto start = std::chrono::steady_clock::now();
  const Instance instance = load_instance(instance_path);
  Oracle oracle(instance);
  oracle.set_phase("completion");

  std::vector<PlayerId> players;
  for (std::int64_t p = 0; p < instance.n(); ++p) players.push_back(static_cast<PlayerId>(p));
  const Allocation allocation = dc(oracle, players, PieceSet::unit());
  const FairnessCertificate cert = certify(instance, allocation, Rat(1) / instance.n());

  const auto total = oracle.ledger().total();
  std::cout << "dc: n=" << instance.n() << " proportional=" << (cert.all_fair ? "yes" : "no")
            << " queries=" << total.total() << " bound=" << dc_query_bound(instance.n())
            << " wall_ms=" << elapsed_ms(start) << "\n";
  if (!out_path.empty()) write_json(out_path, allocation_to_json(allocation, cert));
  return cert.all_fair ? 0 : 1;
}

int cmd_theorem1(const std::string& instance_path, std::int64_t r, const std::string& eps,
                 const std::string& t, std::uint64_t seed, std::int64_t trials,
                 bool charge_duplicates, const std::string& out_path) {
  const Instance instance = load_instance(instance_path);
  UndesignatedParams params;
  params.n = instance.n();
  params.r = r;
  params.eps = rat_from_string(eps);
  params.t = rat_from_string(t);

  DcAdapter strategy;
  Theorem1Options options;
  options.charge_duplicates = charge_duplicates;

  json reports = json::array();
  std::int64_t successes = 0;
  for (std::int64_t i = 0; i < trials; ++i) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t trial_seed = trials == 1 ? seed : mix_seed(seed, static_cast<std::uint64_t>(i));
    const Theorem1Run run = run_theorem1(instance, params, trial_seed, strategy, options);
    TrialReport report = make_theorem1_report(run, params, trial_seed, charge_duplicates);
    report.trial_index = i;
    if (report.success) ++successes;
    std::cout << "trial " << i << ": status=" << report.status
              << " success=" << (report.success ? "yes" : "no") << " victims=" << report.victims
              << " preassign_queries=" << run.ledger.phase("preassign").total()
              << " completion_queries=" << run.ledger.phase("completion").total()
              << " wall_ms=" << elapsed_ms(start) << "\n";
    reports.push_back(trial_to_json(report));
  }
  std::cout << "success " << successes << "/" << trials << ", floor "
            << theorem1_success_floor(params, true) << "\n";
  if (!out_path.empty()) write_json(out_path, reports);
  return 0;
}

int cmd_theorem2(const std::string& instance_path, const std::string& designated_csv,
                 const std::string& eps, const std::string& t, std::uint64_t seed,
                 const std::string& scale, std::int64_t trials, const std::string& out_path) {
  const Instance instance = load_instance(instance_path);
  DesignatedParams params;
  params.n = instance.n();
  params.eps = rat_from_string(eps);
  params.t = rat_from_string(t);
  params.constant_scale = rat_from_string(scale);
  std::string token;
  for (std::istringstream ids(designated_csv); std::getline(ids, token, ',');)
    params.designated.push_back(static_cast<PlayerId>(std::stol(token)));

  json reports = json::array();
  std::int64_t successes = 0;
  for (std::int64_t i = 0; i < trials; ++i) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t trial_seed = trials == 1 ? seed : mix_seed(seed, static_cast<std::uint64_t>(i));
    const Theorem2Run run = run_theorem2(instance, params, trial_seed);
    TrialReport report = make_theorem2_report(run, params, trial_seed);
    report.trial_index = i;
    if (report.success) ++successes;
    std::cout << "trial " << i << ": success=" << (report.success ? "yes" : "no")
              << " victims=" << report.victims
              << " disjoint=" << (run.designated_disjoint ? "yes" : "no")
              << " polite=" << (run.all_polite ? "yes" : "no")
              << " wall_ms=" << elapsed_ms(start) << "\n";
    reports.push_back(trial_to_json(report));
  }
  std::cout << "success " << successes << "/" << trials << ", floor "
            << theorem2_success_floor(params) << "\n";
  if (!out_path.empty()) write_json(out_path, reports);
  return 0;
}

int cmd_lemma1(std::int64_t n, const std::string& eps, const std::string& s,
               const std::string& t, std::int64_t r, std::int64_t trials, std::uint64_t seed,
               const std::string& out_path) {
  SamplingLemmaParams params;
  params.n = n;
  params.eps = rat_from_string(eps);
  params.s = rat_from_string(s);
  params.t = rat_from_string(t);
  params.r = r;

  Rng rng(seed);
  const Lemma1Result result = check_lemma1(params, trials, rng);
  const double bound = rat_to_double(result.bound);
  const double floor = bound - 3 * binomial_sigma(bound, trials);
  std::cout << "lemma1: frequency=" << result.frequency << " bound=" << bound
            << " floor(bound-3sigma)=" << floor
            << " draws=" << params.draws() << " subset=" << params.subset_size() << "\n";
  if (!out_path.empty())
    write_json(out_path, json{{"trials", result.trials},
                              {"successes", result.successes},
                              {"frequency", result.frequency},
                              {"bound", rat_to_string(result.bound)}});
  return result.frequency >= floor ? 0 : 1;
}

int cmd_suite(const std::string& config_path, const std::string& out_dir, bool plot) {
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open config: " + config_path);
  json config;
  in >> config;

  const SuiteResult result = run_suite(config);
  std::filesystem::create_directories(out_dir);
  write_json(out_dir + "/report.json", result.trial_reports);
  write_text(out_dir + "/summary.csv", result.summary_csv);
  if (plot) write_text(out_dir + "/plot.tsv", result.plot_tsv);

  for (const auto& line : result.assertion_log) std::cout << line << "\n";
  std::cout << (result.assertions_passed ? "suite passed" : "suite FAILED") << ", outputs in "
            << out_dir << "\n";
  return result.assertions_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sublinear cake-cutting protocols: simulation and verification"};
  app.require_subcommand(1);

  // generate
  std::string g_kind = "BlockRandom", g_region, g_fraction, g_profile, g_out;
  std::int64_t g_n = 16;
  std::uint64_t g_seed = 0;
  int g_blocks = 8;
  auto* gen = app.add_subcommand("generate", "write an instance file");
  gen->add_option("--kind", g_kind, "Uniform|SpikeCluster|BlockRandom|Adversarial");
  gen->add_option("--n", g_n, "player count")->required();
  gen->add_option("--seed", g_seed, "generator seed");
  gen->add_option("--blocks", g_blocks, "blocks for BlockRandom");
  gen->add_option("--region", g_region, "spike region \"lo,hi\"");
  gen->add_option("--fraction", g_fraction, "spike mass fraction");
  gen->add_option("--profile", g_profile, "adversarial profile name");
  gen->add_option("--out", g_out, "output instance file")->required();

  // dc
  std::string dc_instance, dc_out;
  auto* dc_cmd = app.add_subcommand("dc", "proportional division of the whole cake");
  dc_cmd->add_option("--instance", dc_instance, "instance file")->required();
  dc_cmd->add_option("--out", dc_out, "allocation + certificate JSON");

  // theorem1
  std::string t1_instance, t1_eps, t1_t, t1_out;
  std::int64_t t1_r = 1, t1_trials = 1;
  std::uint64_t t1_seed = 0;
  bool t1_charge = false;
  auto* t1 = app.add_subcommand("theorem1", "undesignated preassignment pipeline");
  t1->add_option("--instance", t1_instance)->required();
  t1->add_option("--r", t1_r, "players to preassign")->required();
  t1->add_option("--eps", t1_eps, "victim fraction (rational)")->required();
  t1->add_option("--t", t1_t, "confidence parameter (rational > 3/2)")->required();
  t1->add_option("--seed", t1_seed)->required();
  t1->add_option("--trials", t1_trials, "seeded trials (child seeds derive from --seed)");
  t1->add_flag("--charge-duplicates", t1_charge, "charge repeated draws one query each");
  t1->add_option("--out", t1_out, "report JSON");

  // theorem2
  std::string t2_instance, t2_designated, t2_eps, t2_t, t2_scale = "1", t2_out;
  std::int64_t t2_trials = 1;
  std::uint64_t t2_seed = 0;
  auto* t2 = app.add_subcommand("theorem2", "designated preassignment pipeline");
  t2->add_option("--instance", t2_instance)->required();
  t2->add_option("--designated", t2_designated, "comma-separated player ids")->required();
  t2->add_option("--eps", t2_eps, "victim fraction (rational <= 1/e)")->required();
  t2->add_option("--t", t2_t, "confidence parameter (rational >= 1)")->required();
  t2->add_option("--seed", t2_seed)->required();
  t2->add_option("--scale", t2_scale, "sigma: scales sampling constants (desk profiles)");
  t2->add_option("--trials", t2_trials);
  t2->add_option("--out", t2_out, "report JSON");

  // lemma1
  std::string l_eps, l_s, l_t, l_out;
  std::int64_t l_n = 0, l_r = 0, l_trials = 1000;
  std::uint64_t l_seed = 0;
  auto* l1 = app.add_subcommand("lemma1", "sampling-bound Monte Carlo");
  l1->add_option("--n", l_n)->required();
  l1->add_option("--eps", l_eps)->required();
  l1->add_option("--s", l_s)->required();
  l1->add_option("--t", l_t)->required();
  l1->add_option("--r", l_r)->required();
  l1->add_option("--trials", l_trials);
  l1->add_option("--seed", l_seed);
  l1->add_option("--out", l_out, "result JSON");

  // suite
  std::string s_config, s_out_dir = "suite-out";
  bool s_plot = false;
  auto* suite = app.add_subcommand("suite", "run a scenario batch from a JSON config");
  suite->add_option("--config", s_config, "suite config JSON")->required();
  suite->add_option("--out-dir", s_out_dir, "output directory");
  suite->add_flag("--plot", s_plot, "also write plot.tsv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_generate(g_kind, g_n, g_seed, g_blocks, g_region, g_fraction, g_profile, g_out);
    if (dc_cmd->parsed()) return cmd_dc(dc_instance, dc_out);
    if (t1->parsed())
      return cmd_theorem1(t1_instance, t1_r, t1_eps, t1_t, t1_seed, t1_trials, t1_charge, t1_out);
    if (t2->parsed())
      return cmd_theorem2(t2_instance, t2_designated, t2_eps, t2_t, t2_seed, t2_scale, t2_trials,
                          t2_out);
    if (l1->parsed())
      return cmd_lemma1(l_n, l_eps, l_s, l_t, l_r, l_trials, l_seed, l_out);
    if (suite->parsed()) return cmd_suite(s_config, s_out_dir, s_plot);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
