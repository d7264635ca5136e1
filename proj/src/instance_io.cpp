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

#include "subcake/instance_io.hpp"

#include <fstream>
#include <stdexcept>

namespace subcake {

Rat rat_from_json(const json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  throw std::invalid_argument("expected a rational as string or integer, got: " + j.dump());
}

json instance_to_json(const Instance& instance) {
  json players = json::array();
  for (const auto& v : instance.valuations()) {
    json breakpoints = json::array();
    json densities = json::array();
    for (const auto& b : v.breakpoints()) breakpoints.push_back(rat_to_string(b));
    for (const auto& d : v.densities()) densities.push_back(rat_to_string(d));
    players.push_back({{"breakpoints", std::move(breakpoints)},
                       {"densities", std::move(densities)}});
  }
  return json{{"n", instance.n()}, {"players", std::move(players)}};
}

Instance instance_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("players"))
    throw std::invalid_argument("instance file: need \"n\" and \"players\"");
  const auto n = j.at("n").get<std::int64_t>();
  const auto& players = j.at("players");
  if (!players.is_array() || static_cast<std::int64_t>(players.size()) != n)
    throw std::invalid_argument("instance file: players array must have n entries");

  std::vector<Valuation> vals;
  vals.reserve(players.size());
  for (const auto& entry : players) {
    std::vector<Rat> breakpoints, densities;
    for (const auto& b : entry.at("breakpoints")) breakpoints.push_back(rat_from_json(b));
    for (const auto& d : entry.at("densities")) densities.push_back(rat_from_json(d));
    vals.emplace_back(std::move(breakpoints), std::move(densities));
  }
  return Instance(std::move(vals));
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  json j;
  in >> j;
  return instance_from_json(j);
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << instance_to_json(instance).dump(2) << "\n";
}

json allocation_to_json(const Allocation& allocation, const FairnessCertificate& certificate) {
  json players = json::object();
  for (const auto& [p, piece] : allocation.assignments) {
    json parts = json::array();
    for (const auto& iv : piece.fragments())
      parts.push_back({rat_to_string(iv.lo), rat_to_string(iv.hi)});
    players[std::to_string(p)] = std::move(parts);
  }
  json rows = json::array();
  for (const auto& row : certificate.rows)
    rows.push_back({{"player", row.player},
                    {"value", rat_to_string(row.value)},
                    {"threshold", rat_to_string(row.threshold)},
                    {"fair", row.fair}});
  return json{{"phase", allocation.phase},
              {"players", std::move(players)},
              {"certificates", std::move(rows)}};
}

}  // namespace subcake
