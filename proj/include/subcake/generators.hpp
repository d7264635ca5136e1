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

#include "subcake/rng.hpp"
#include "subcake/valuation.hpp"

namespace subcake {

/// Instance families for the simulation harness. Every generated valuation
/// is exact-rational and normalized; generation is a pure function of the
/// spec (including its seed).
struct GeneratorSpec {
  enum class Kind { Uniform, SpikeCluster, BlockRandom, Adversarial };

  Kind kind = Kind::Uniform;
  std::int64_t n = 1;
  std::uint64_t seed = 0;

  // SpikeCluster: every player puts `fraction` of their mass uniformly on
  // `region` and the rest uniformly outside it.
  Interval region = unit_interval();
  Rat fraction = Rat(1);

  // BlockRandom: seeded random densities on a uniform grid of this many
  // blocks.
  int num_blocks = 8;

  // Adversarial: a named profile, e.g. "right-mass",
  // "designated-disjoint-3", "block-spike-mix".
  std::string profile;
};

/// Builds the instance described by the spec. Throws std::invalid_argument
/// for inconsistent specs (for example a SpikeCluster with mass left over
/// but no room outside the region).
Instance generate(const GeneratorSpec& spec);

std::string generator_kind_name(GeneratorSpec::Kind kind);
GeneratorSpec::Kind generator_kind_from_name(const std::string& name);

}  // namespace subcake
