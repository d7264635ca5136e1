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

#include "subcake/generators.hpp"

#include <stdexcept>

namespace subcake {

namespace {

Valuation spike_valuation(const Interval& region, const Rat& fraction) {
  if (fraction < 0 || fraction > 1)
    throw std::invalid_argument("spike: fraction must lie in [0,1]");
  const Rat inside_len = region.length();
  const Rat outside_len = Rat(1) - inside_len;
  if (inside_len == 0 && fraction > 0)
    throw std::invalid_argument("spike: zero-length region cannot hold mass");
  if (outside_len == 0 && fraction < 1)
    throw std::invalid_argument("spike: no room outside the region for leftover mass");

  std::vector<Rat> breakpoints{Rat(0)};
  std::vector<Rat> densities;
  const Rat outside_density = outside_len == 0 ? Rat(0) : (Rat(1) - fraction) / outside_len;
  const Rat inside_density = inside_len == 0 ? Rat(0) : fraction / inside_len;
  if (region.lo > 0) {
    breakpoints.push_back(region.lo);
    densities.push_back(outside_density);
  }
  if (region.hi > region.lo) {
    breakpoints.push_back(region.hi);
    densities.push_back(inside_density);
  }
  if (region.hi < 1) {
    breakpoints.push_back(Rat(1));
    densities.push_back(outside_density);
  }
  return Valuation(std::move(breakpoints), std::move(densities));
}

Valuation block_random_valuation(int blocks, Rng& rng) {
  // Integer weights over a uniform grid; densities w_i * B / sum(w) keep
  // normalization exact. Zero-weight blocks give zero-density plateaus.
  std::vector<long> weights(static_cast<std::size_t>(blocks));
  long total = 0;
  do {
    total = 0;
    for (auto& w : weights) {
      w = static_cast<long>(rng.below(17));  // 0..16
      total += w;
    }
  } while (total == 0);

  std::vector<Rat> breakpoints;
  std::vector<Rat> densities;
  breakpoints.reserve(static_cast<std::size_t>(blocks) + 1);
  for (int i = 0; i <= blocks; ++i) breakpoints.push_back(make_rat(i, blocks));
  for (int i = 0; i < blocks; ++i)
    densities.push_back(make_rat(weights[static_cast<std::size_t>(i)] * blocks, total));
  return Valuation(std::move(breakpoints), std::move(densities));
}

Instance adversarial(const GeneratorSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.n);
  if (spec.profile == "right-mass") {
    const Valuation v = spike_valuation(Interval(make_rat(9, 10), Rat(1)), Rat(1));
    return Instance(std::vector<Valuation>(n, v));
  }
  if (spec.profile.rfind("designated-disjoint-", 0) == 0) {
    const int k = std::stoi(spec.profile.substr(std::string("designated-disjoint-").size()));
    if (k < 1 || static_cast<std::int64_t>(k) > spec.n)
      throw std::invalid_argument("designated-disjoint: bad count");
    // Designated players 0..k-1 hold all mass on short disjoint strips, the
    // rest are uniform.
    std::vector<Valuation> vals(n, Valuation::uniform());
    for (int i = 0; i < k; ++i) {
      const Rat lo = make_rat(i, k) + make_rat(1, 4 * k);
      const Rat hi = make_rat(i, k) + make_rat(2, 4 * k);
      vals[static_cast<std::size_t>(i)] = spike_valuation(Interval(lo, hi), Rat(1));
    }
    return Instance(std::move(vals));
  }
  if (spec.profile == "block-spike-mix") {
    // Three quarters seeded block-random, one quarter all-mass-right.
    Rng rng(spec.seed);
    const Valuation spike = spike_valuation(Interval(make_rat(9, 10), Rat(1)), Rat(1));
    std::vector<Valuation> vals;
    vals.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i % 4 == 3)
        vals.push_back(spike);
      else
        vals.push_back(block_random_valuation(spec.num_blocks, rng));
    }
    return Instance(std::move(vals));
  }
  if (spec.profile == "left-deposit-mix") {
    // Player 0 concentrated on [0, 1/10], a quarter of the rest all-mass-
    // right, the remainder uniform.
    const Valuation left = spike_valuation(Interval(Rat(0), make_rat(1, 10)), Rat(1));
    const Valuation right = spike_valuation(Interval(make_rat(9, 10), Rat(1)), Rat(1));
    std::vector<Valuation> vals;
    vals.reserve(n);
    vals.push_back(left);
    for (std::size_t i = 1; i < n; ++i)
      vals.push_back(i % 4 == 1 ? right : Valuation::uniform());
    return Instance(std::move(vals));
  }
  throw std::invalid_argument("unknown adversarial profile: " + spec.profile);
}

}  // namespace

Instance generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator: n must be >= 1");
  const auto n = static_cast<std::size_t>(spec.n);
  switch (spec.kind) {
    case GeneratorSpec::Kind::Uniform:
      return Instance(std::vector<Valuation>(n, Valuation::uniform()));
    case GeneratorSpec::Kind::SpikeCluster:
      return Instance(std::vector<Valuation>(n, spike_valuation(spec.region, spec.fraction)));
    case GeneratorSpec::Kind::BlockRandom: {
      if (spec.num_blocks < 1) throw std::invalid_argument("generator: blocks must be >= 1");
      Rng rng(spec.seed);
      std::vector<Valuation> vals;
      vals.reserve(n);
      for (std::size_t i = 0; i < n; ++i)
        vals.push_back(block_random_valuation(spec.num_blocks, rng));
      return Instance(std::move(vals));
    }
    case GeneratorSpec::Kind::Adversarial:
      return adversarial(spec);
  }
  throw std::invalid_argument("generator: unknown kind");
}

std::string generator_kind_name(GeneratorSpec::Kind kind) {
  switch (kind) {
    case GeneratorSpec::Kind::Uniform: return "Uniform";
    case GeneratorSpec::Kind::SpikeCluster: return "SpikeCluster";
    case GeneratorSpec::Kind::BlockRandom: return "BlockRandom";
    case GeneratorSpec::Kind::Adversarial: return "Adversarial";
  }
  return "Uniform";
}

GeneratorSpec::Kind generator_kind_from_name(const std::string& name) {
  if (name == "Uniform") return GeneratorSpec::Kind::Uniform;
  if (name == "SpikeCluster") return GeneratorSpec::Kind::SpikeCluster;
  if (name == "BlockRandom") return GeneratorSpec::Kind::BlockRandom;
  if (name == "Adversarial") return GeneratorSpec::Kind::Adversarial;
  throw std::invalid_argument("unknown generator kind: " + name);
}

}  // namespace subcake
