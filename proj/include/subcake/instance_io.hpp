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

#include <json.hpp>

#include "subcake/protocols.hpp"
#include "subcake/valuation.hpp"

namespace subcake {

using nlohmann::json;

/// Instance file schema:
///   { "n": int, "players": [ { "breakpoints": [rational...],
///                              "densities":  [rational...] } ] }
/// Rationals are strings in "p/q" or decimal form; plain JSON integers are
/// also accepted.
json instance_to_json(const Instance& instance);
Instance instance_from_json(const json& j);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

/// Allocation schema: player id -> list of [lo, hi] pairs, with certificate
/// rows appended per player.
json allocation_to_json(const Allocation& allocation, const FairnessCertificate& certificate);

/// Parses a rational from a JSON value (string or integer).
Rat rat_from_json(const json& j);

}  // namespace subcake
