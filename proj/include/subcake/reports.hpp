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

#pragma once

#include <json.hpp>

#include "subcake/designated.hpp"
#include "subcake/undesignated.hpp"

namespace subcake {

using nlohmann::json;

/// One protocol run condensed for persistence. Wall time is kept for
/// console diagnostics but never serialized: reports must be byte-identical
/// across reruns of the same seeds.
struct TrialReport {
  std::string scenario;
  std::int64_t trial_index = 0;
  std::uint64_t seed = 0;
  json params;     // parameter echo (n, r, eps, t, sigma, generator, ...)
  std::string status;
  bool success = false;
  std::int64_t victims = 0;
  std::map<std::string, PhaseCounts> ledger;
  std::vector<std::string> flags;
  json details;    // scenario-specific payload
  double wall_ms = 0.0;  // not serialized
};

json trial_to_json(const TrialReport& report);

std::string preassign_status_name(PreassignStatus status);

/// Success := preassignment succeeded, all r preassigned players fair, the
/// victim count hit its target, and every survivor is fair.
TrialReport make_theorem1_report(const Theorem1Run& run, const UndesignatedParams& params,
                                 std::uint64_t seed, bool charge_duplicates);

/// Success := assigned designated pieces pairwise disjoint, per-player
/// compounded halving bounds hold, the victim count hit its target, and
/// every survivor is fair.
TrialReport make_theorem2_report(const Theorem2Run& run, const DesignatedParams& params,
                                 std::uint64_t seed);

/// Fixed-column CSV over a batch of reports:
/// scenario,n,r,eps,t,sigma,trials,success_rate,floor,
/// preassign_queries_mean,completion_queries_mean,victims_mean
struct ScenarioSummary {
  std::string scenario;
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::string eps = "-";
  std::string t = "-";
  std::string sigma = "1";
  std::int64_t trials = 0;
  double success_rate = 0.0;
  double floor = 0.0;
  double preassign_queries_mean = 0.0;
  double completion_queries_mean = 0.0;
  double victims_mean = 0.0;
};

ScenarioSummary summarize(const std::string& scenario_name,
                          const std::vector<TrialReport>& reports, double floor);

std::string csv_header();
std::string csv_row(const ScenarioSummary& summary);

}  // namespace subcake
