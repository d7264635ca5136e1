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

#include "subcake/suite.hpp"

#include <cstdio>
#include <stdexcept>

#include "subcake/instance_io.hpp"
#include "subcake/lemma_checks.hpp"

namespace subcake {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct ScenarioOutcome {
  std::vector<TrialReport> reports;
  ScenarioSummary summary;
  bool passed = true;
  std::string message;
};

// The instance is regenerated per trial with a derived seed unless the
// generator pins one explicitly.
Instance instance_for_trial(const GeneratorSpec& base, bool seed_pinned,
                            std::uint64_t trial_seed) {
  GeneratorSpec spec = base;
  if (!seed_pinned) spec.seed = mix_seed(trial_seed, 1);
  return generate(spec);
}

ScenarioOutcome run_theorem1_scenario(const json& sc, std::uint64_t scenario_seed) {
  const GeneratorSpec base = generator_from_json(sc.at("generator"));
  const bool seed_pinned = sc.at("generator").contains("seed");
  const std::int64_t trials = sc.value("trials", 1);
  const bool charge_duplicates = sc.value("charge_duplicates", false);

  UndesignatedParams params;
  params.n = base.n;
  params.r = sc.at("r").get<std::int64_t>();
  params.eps = rat_from_json(sc.at("eps"));
  params.t = rat_from_json(sc.at("t"));
  if (const auto problem = params.validate())
    throw std::invalid_argument("theorem1 scenario: " + *problem);

  DcAdapter strategy;
  Theorem1Options options;
  options.charge_duplicates = charge_duplicates;

  ScenarioOutcome out;
  for (std::int64_t i = 0; i < trials; ++i) {
    const std::uint64_t trial_seed = mix_seed(scenario_seed, static_cast<std::uint64_t>(i));
    const Instance instance = instance_for_trial(base, seed_pinned, trial_seed);
    const Theorem1Run run =
        run_theorem1(instance, params, mix_seed(trial_seed, 2), strategy, options);
    TrialReport report = make_theorem1_report(run, params, mix_seed(trial_seed, 2),
                                              charge_duplicates);
    report.trial_index = i;
    report.params["generator"] = generator_to_json(base);
    out.reports.push_back(std::move(report));
  }

  const double floor = theorem1_success_floor(params, /*strategy_failure_free=*/true);
  out.summary = summarize("theorem1", out.reports, floor);
  const double min_rate =
      sc.value("min_success_rate",
               floor - 3.0 * binomial_sigma(floor, static_cast<std::int64_t>(trials)));
  out.passed = out.summary.success_rate >= min_rate;
  out.message = "theorem1: rate " + format_double(out.summary.success_rate) +
                " vs required " + format_double(min_rate);
  return out;
}

ScenarioOutcome run_theorem2_scenario(const json& sc, std::uint64_t scenario_seed) {
  const GeneratorSpec base = generator_from_json(sc.at("generator"));
  const bool seed_pinned = sc.at("generator").contains("seed");
  const std::int64_t trials = sc.value("trials", 1);

  DesignatedParams params;
  params.n = base.n;
  for (const auto& id : sc.at("designated"))
    params.designated.push_back(id.get<PlayerId>());
  params.eps = rat_from_json(sc.at("eps"));
  params.t = rat_from_json(sc.at("t"));
  if (sc.contains("scale")) params.constant_scale = rat_from_json(sc.at("scale"));
  if (const auto problem = params.validate())
    throw std::invalid_argument("theorem2 scenario: " + *problem);

  ScenarioOutcome out;
  for (std::int64_t i = 0; i < trials; ++i) {
    const std::uint64_t trial_seed = mix_seed(scenario_seed, static_cast<std::uint64_t>(i));
    const Instance instance = instance_for_trial(base, seed_pinned, trial_seed);
    const Theorem2Run run = run_theorem2(instance, params, mix_seed(trial_seed, 2));
    TrialReport report = make_theorem2_report(run, params, mix_seed(trial_seed, 2));
    report.trial_index = i;
    report.params["generator"] = generator_to_json(base);
    out.reports.push_back(std::move(report));
  }

  const double floor = theorem2_success_floor(params);
  out.summary = summarize("theorem2", out.reports, floor);
  const double min_rate =
      sc.value("min_success_rate",
               floor - 3.0 * binomial_sigma(floor, static_cast<std::int64_t>(trials)));
  out.passed = out.summary.success_rate >= min_rate;
  out.message = "theorem2: rate " + format_double(out.summary.success_rate) +
                " vs required " + format_double(min_rate);
  return out;
}

ScenarioOutcome run_dc_scenario(const json& sc, std::uint64_t scenario_seed) {
  const GeneratorSpec base = generator_from_json(sc.at("generator"));
  const bool seed_pinned = sc.at("generator").contains("seed");
  const std::int64_t trials = sc.value("trials", 1);

  ScenarioOutcome out;
  for (std::int64_t i = 0; i < trials; ++i) {
    const std::uint64_t trial_seed = mix_seed(scenario_seed, static_cast<std::uint64_t>(i));
    const Instance instance = instance_for_trial(base, seed_pinned, trial_seed);
    Oracle oracle(instance);
    oracle.set_phase("completion");
    std::vector<PlayerId> players;
    for (std::int64_t p = 0; p < instance.n(); ++p)
      players.push_back(static_cast<PlayerId>(p));

    const Allocation allocation = dc(oracle, players, PieceSet::unit());
    // Exact proportionality: value >= 1/n for everyone on the unit cake.
    const FairnessSummary summary =
        certify_summary(instance, allocation, Rat(1) / instance.n());
    const std::uint64_t total = oracle.ledger().total().total();

    TrialReport report;
    report.scenario = "dc";
    report.trial_index = i;
    report.seed = trial_seed;
    report.status = "Success";
    report.success = summary.all_fair() && total <= dc_query_bound(instance.n());
    report.ledger = oracle.ledger().by_phase();
    report.params = {{"n", instance.n()}, {"generator", generator_to_json(base)}};
    report.details = {{"proportional", summary.all_fair()},
                      {"queries", total},
                      {"query_bound", dc_query_bound(instance.n())}};
    out.reports.push_back(std::move(report));
  }

  out.summary = summarize("dc", out.reports, 1.0);
  out.passed = out.summary.success_rate == 1.0;
  out.message = "dc: rate " + format_double(out.summary.success_rate) + " vs required 1";
  return out;
}

ScenarioOutcome run_lemma1_scenario(const json& sc, std::uint64_t scenario_seed) {
  SamplingLemmaParams params;
  params.n = sc.at("n").get<std::int64_t>();
  params.eps = rat_from_json(sc.at("eps"));
  params.s = rat_from_json(sc.at("s"));
  params.t = rat_from_json(sc.at("t"));
  params.r = sc.at("r").get<std::int64_t>();
  const std::int64_t trials = sc.value("trials", 1000);

  Rng rng(mix_seed(scenario_seed, 2));
  const Lemma1Result result = check_lemma1(params, trials, rng);

  TrialReport report;
  report.scenario = "lemma1";
  report.seed = rng.seed();
  report.status = "Success";
  report.params = {{"n", params.n},
                   {"r", params.r},
                   {"eps", rat_to_string(params.eps)},
                   {"s", rat_to_string(params.s)},
                   {"t", rat_to_string(params.t)},
                   {"draws", params.draws()},
                   {"subset", params.subset_size()}};
  const double bound = rat_to_double(result.bound);
  const double min_rate = bound - 3.0 * binomial_sigma(bound, trials);
  report.success = result.frequency >= min_rate;
  report.details = {{"trials", result.trials},
                    {"successes", result.successes},
                    {"frequency", result.frequency},
                    {"bound", rat_to_string(result.bound)}};

  ScenarioOutcome out;
  out.reports.push_back(std::move(report));
  out.summary = summarize("lemma1", out.reports, bound);
  out.summary.trials = trials;
  out.summary.success_rate = result.frequency;
  out.passed = result.frequency >= min_rate;
  out.message = "lemma1: frequency " + format_double(result.frequency) + " vs required " +
                format_double(min_rate);
  return out;
}

}  // namespace

GeneratorSpec generator_from_json(const json& j) {
  GeneratorSpec spec;
  spec.kind = generator_kind_from_name(j.at("kind").get<std::string>());
  spec.n = j.at("n").get<std::int64_t>();
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("blocks")) spec.num_blocks = j.at("blocks").get<int>();
  if (j.contains("region"))
    spec.region = Interval(rat_from_json(j.at("region").at(0)), rat_from_json(j.at("region").at(1)));
  if (j.contains("fraction")) spec.fraction = rat_from_json(j.at("fraction"));
  if (j.contains("profile")) spec.profile = j.at("profile").get<std::string>();
  return spec;
}

json generator_to_json(const GeneratorSpec& spec) {
  json j{{"kind", generator_kind_name(spec.kind)}, {"n", spec.n}};
  switch (spec.kind) {
    case GeneratorSpec::Kind::SpikeCluster:
      j["region"] = {rat_to_string(spec.region.lo), rat_to_string(spec.region.hi)};
      j["fraction"] = rat_to_string(spec.fraction);
      break;
    case GeneratorSpec::Kind::BlockRandom:
      j["blocks"] = spec.num_blocks;
      break;
    case GeneratorSpec::Kind::Adversarial:
      j["profile"] = spec.profile;
      if (spec.profile == "block-spike-mix") j["blocks"] = spec.num_blocks;
      break;
    case GeneratorSpec::Kind::Uniform:
      break;
  }
  return j;
}

SuiteResult run_suite(const json& config) {
  const std::uint64_t master = config.value("master_seed", 0ULL);
  if (!config.contains("scenarios") || !config.at("scenarios").is_array())
    throw std::invalid_argument("suite config: need a \"scenarios\" array");

  SuiteResult result;
  std::string csv = csv_header() + "\n";
  std::string tsv = "scenario\tlabel\tn\tsuccess_rate\tpreassign_mean\tcompletion_mean\tvictims_mean\n";

  std::uint64_t scenario_index = 0;
  for (const auto& sc : config.at("scenarios")) {
    const std::string type = sc.at("type").get<std::string>();
    const std::uint64_t scenario_seed = mix_seed(master, scenario_index);

    ScenarioOutcome outcome;
    if (type == "theorem1")
      outcome = run_theorem1_scenario(sc, scenario_seed);
    else if (type == "theorem2")
      outcome = run_theorem2_scenario(sc, scenario_seed);
    else if (type == "dc")
      outcome = run_dc_scenario(sc, scenario_seed);
    else if (type == "lemma1")
      outcome = run_lemma1_scenario(sc, scenario_seed);
    else
      throw std::invalid_argument("suite config: unknown scenario type: " + type);

    const std::string label = sc.value("label", type + "#" + std::to_string(scenario_index));
    for (auto& report : outcome.reports)
      result.trial_reports.push_back(trial_to_json(report));
    csv += csv_row(outcome.summary) + "\n";
    tsv += outcome.summary.scenario + "\t" + label + "\t" + std::to_string(outcome.summary.n) +
           "\t" + format_double(outcome.summary.success_rate) + "\t" +
           format_double(outcome.summary.preassign_queries_mean) + "\t" +
           format_double(outcome.summary.completion_queries_mean) + "\t" +
           format_double(outcome.summary.victims_mean) + "\n";

    result.assertions_passed = result.assertions_passed && outcome.passed;
    result.assertion_log.push_back((outcome.passed ? "[pass] " : "[FAIL] ") + label + " " +
                                   outcome.message);
    ++scenario_index;
  }

  result.summary_csv = std::move(csv);
  result.plot_tsv = std::move(tsv);
  return result;
}

}  // namespace subcake
