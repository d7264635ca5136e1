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

#include <string>
#include <vector>

#include "subcake/generators.hpp"
#include "subcake/reports.hpp"

namespace subcake {

/// Batch runner driven by a JSON config:
///   { "master_seed": int,
///     "scenarios": [ { "type": "theorem1"|"theorem2"|"dc"|"lemma1", ... } ] }
///
/// Every scenario runs `trials` seeded trials; trial seeds derive from the
/// master seed by hashing, so identical configs reproduce byte-identical
/// reports. Statistical assertions compare the empirical rate against
/// (floor - 3 binomial sigma), never the floor itself.
struct SuiteResult {
  json trial_reports = json::array();
  std::string summary_csv;
  std::string plot_tsv;                 // scenario-level sweep rows
  bool assertions_passed = true;
  std::vector<std::string> assertion_log;
};

SuiteResult run_suite(const json& config);

/// Parses a generator object ({"kind": ..., "n": ..., ...}).
GeneratorSpec generator_from_json(const json& j);
json generator_to_json(const GeneratorSpec& spec);

}  // namespace subcake
