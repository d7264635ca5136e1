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

#include "subcake/reports.hpp"

#include <cstdio>

namespace subcake {

namespace {

json ledger_to_json(const std::map<std::string, PhaseCounts>& ledger) {
  json j = json::object();
  for (const auto& [phase, counts] : ledger)
    j[phase] = {{"cuts", counts.cuts}, {"evals", counts.evals}};
  return j;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

json trial_to_json(const TrialReport& report) {
  return json{{"scenario", report.scenario},
              {"trial", report.trial_index},
              {"seed", report.seed},
              {"params", report.params},
              {"status", report.status},
              {"success", report.success},
              {"victims", report.victims},
              {"ledger", ledger_to_json(report.ledger)},
              {"flags", report.flags},
              {"details", report.details}};
}

std::string preassign_status_name(PreassignStatus status) {
  switch (status) {
    case PreassignStatus::Success: return "Success";
    case PreassignStatus::FailedSampling: return "FailedSampling";
    case PreassignStatus::FailedApproxFair: return "FailedApproxFair";
  }
  return "Unknown";
}

TrialReport make_theorem1_report(const Theorem1Run& run, const UndesignatedParams& params,
                                 std::uint64_t seed, bool charge_duplicates) {
  TrialReport report;
  report.scenario = "theorem1";
  report.seed = seed;
  report.status = preassign_status_name(run.status);
  report.victims = static_cast<std::int64_t>(run.victims.size());
  report.ledger = run.ledger.by_phase();
  report.params = {{"n", params.n},
                   {"r", params.r},
                   {"eps", rat_to_string(params.eps)},
                   {"t", rat_to_string(params.t)},
                   {"draws", params.draws()},
                   {"retries", params.retries()},
                   {"alpha_star", rat_to_string(params.alpha_star())}};
  if (charge_duplicates) report.flags.push_back("charge-duplicates");
  if (run.degenerate_pool) report.flags.push_back("degenerate-pool");

  const bool preassigned_fair = run.success() && run.preassign_certificate.all_fair;
  const bool victims_on_target =
      static_cast<std::int64_t>(run.victims.size()) == run.victim_target;
  report.success = run.success() && preassigned_fair && victims_on_target &&
                   run.survivor_summary.all_fair();

  report.details = {{"distinct_drawn", run.distinct_drawn},
                    {"attempts", run.attempts},
                    {"victim_target", run.victim_target},
                    {"preassigned_all_fair", preassigned_fair},
                    {"survivors_fair", run.survivor_summary.fair},
                    {"survivors_total", run.survivor_summary.players},
                    {"survivors_all_fair", run.survivor_summary.all_fair()},
                    {"survivors_safe_premise", run.survivors_safe_premise},
                    {"pieces_respect_cut", run.pieces_respect_cut}};
  if (run.success()) {
    report.details["cut_x"] = rat_to_string(run.cut_x);
    json ids = json::array();
    for (PlayerId p : run.preassigned) ids.push_back(p);
    report.details["preassigned"] = std::move(ids);
  }
  return report;
}

TrialReport make_theorem2_report(const Theorem2Run& run, const DesignatedParams& params,
                                 std::uint64_t seed) {
  TrialReport report;
  report.scenario = "theorem2";
  report.seed = seed;
  report.status = "Success";
  report.victims = static_cast<std::int64_t>(run.victims.size());
  report.ledger = run.ledger.by_phase();

  json designated = json::array();
  for (PlayerId p : params.designated) designated.push_back(p);
  report.params = {{"n", params.n},
                   {"designated", std::move(designated)},
                   {"eps", rat_to_string(params.eps)},
                   {"t", rat_to_string(params.t)},
                   {"sigma", rat_to_string(params.constant_scale)},
                   {"samples_per_round", params.samples_per_round()},
                   {"max_rounds", params.max_rounds()},
                   {"approver_threshold", params.approver_threshold()}};
  if (params.constant_scale != 1)
    report.flags.push_back("sigma=" + rat_to_string(params.constant_scale));
  if (run.any_loop_exhausted) report.flags.push_back("LoopExhausted");
  if (run.degenerate_pool) report.flags.push_back("degenerate-pool");

  const bool victims_on_target =
      static_cast<std::int64_t>(run.victims.size()) == run.victim_target;
  report.success = run.designated_disjoint && run.designated_all_fair_scaled &&
                   victims_on_target && run.survivor_summary.all_fair();

  json rows = json::array();
  for (PlayerId p : params.designated) {
    const DepositResult& dep = run.pre.deposits.at(p);
    rows.push_back({{"player", p},
                    {"condense_calls", dep.condense_calls},
                    {"exit", dep.exit == DepositExit::EarlyExit ? "EarlyExit" : "LoopExhausted"},
                    {"component_size", run.pre.component_size.at(p)},
                    {"value", rat_to_string(run.designated_value.at(p))},
                    {"halving_ok", run.halving_ok.at(p)},
                    {"polite", run.polite.at(p)}});
  }
  report.details = {{"designated", std::move(rows)},
                    {"designated_disjoint", run.designated_disjoint},
                    {"all_polite", run.all_polite},
                    {"union_approvers", run.union_approvers},
                    {"victim_target", run.victim_target},
                    {"remainder_fragments", run.remainder.fragment_count()},
                    {"survivors_fair", run.survivor_summary.fair},
                    {"survivors_total", run.survivor_summary.players},
                    {"survivors_all_fair", run.survivor_summary.all_fair()}};
  return report;
}

ScenarioSummary summarize(const std::string& scenario_name,
                          const std::vector<TrialReport>& reports, double floor) {
  ScenarioSummary s;
  s.scenario = scenario_name;
  s.trials = static_cast<std::int64_t>(reports.size());
  s.floor = floor;
  if (reports.empty()) return s;

  const json& params = reports.front().params;
  if (params.contains("n")) s.n = params.at("n").get<std::int64_t>();
  if (params.contains("r")) s.r = params.at("r").get<std::int64_t>();
  if (params.contains("designated")) s.r = static_cast<std::int64_t>(params.at("designated").size());
  if (params.contains("eps")) s.eps = params.at("eps").get<std::string>();
  if (params.contains("t")) s.t = params.at("t").get<std::string>();
  if (params.contains("sigma")) s.sigma = params.at("sigma").get<std::string>();

  std::int64_t successes = 0;
  double preassign_sum = 0, completion_sum = 0, victims_sum = 0;
  for (const auto& r : reports) {
    if (r.success) ++successes;
    const auto pre = r.ledger.find("preassign");
    const auto comp = r.ledger.find("completion");
    if (pre != r.ledger.end()) preassign_sum += static_cast<double>(pre->second.total());
    if (comp != r.ledger.end()) completion_sum += static_cast<double>(comp->second.total());
    victims_sum += static_cast<double>(r.victims);
  }
  const double count = static_cast<double>(reports.size());
  s.success_rate = static_cast<double>(successes) / count;
  s.preassign_queries_mean = preassign_sum / count;
  s.completion_queries_mean = completion_sum / count;
  s.victims_mean = victims_sum / count;
  return s;
}

std::string csv_header() {
  return "scenario,n,r,eps,t,sigma,trials,success_rate,floor,"
         "preassign_queries_mean,completion_queries_mean,victims_mean";
}

std::string csv_row(const ScenarioSummary& s) {
  std::string row = s.scenario;
  row += "," + std::to_string(s.n);
  row += "," + std::to_string(s.r);
  row += "," + s.eps;
  row += "," + s.t;
  row += "," + s.sigma;
  row += "," + std::to_string(s.trials);
  row += "," + format_double(s.success_rate);
  row += "," + format_double(s.floor);
  row += "," + format_double(s.preassign_queries_mean);
  row += "," + format_double(s.completion_queries_mean);
  row += "," + format_double(s.victims_mean);
  return row;
}

}  // namespace subcake
