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

#include "subcake/lemma_checks.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace subcake {

Rat SamplingLemmaParams::bound() const {
  if (r == 0) return Rat(1);  // vacuous success
  const Rat d = (s - 1) * (t - 1) - 1;
  return Rat(1) - s * s / (d * d * r);
}

std::optional<std::string> SamplingLemmaParams::validate() const {
  if (n < 1) return "n must be >= 1";
  if (r < 0) return "r must be >= 0";
  if (eps <= 0 || eps > 1) return "eps must lie in (0, 1]";
  if (s <= 1 || t <= 1) return "s and t must exceed 1";
  if ((s - 1) * (t - 1) <= 1) return "(s-1)(t-1) must exceed 1";
  if (r > 0 && Rat(r) > eps * n / s) return "r exceeds eps*n/s";
  return std::nullopt;
}

Lemma1Result check_lemma1(const SamplingLemmaParams& params, std::int64_t trials, Rng& rng) {
  if (const auto problem = params.validate())
    throw std::invalid_argument("lemma1: " + *problem);
  if (trials < 1) throw std::invalid_argument("lemma1: trials must be >= 1");

  const std::int64_t draws = params.draws();
  const std::int64_t subset = params.subset_size();  // fixed subset {0..subset-1}
  Lemma1Result result;
  result.trials = trials;
  result.bound = params.bound();

  std::vector<bool> seen(static_cast<std::size_t>(subset), false);
  std::vector<std::int64_t> touched;
  touched.reserve(static_cast<std::size_t>(std::min(draws, subset)));

  for (std::int64_t trial = 0; trial < trials; ++trial) {
    std::int64_t distinct = 0;
    touched.clear();
    for (std::int64_t i = 0; i < draws && distinct < params.r; ++i) {
      const auto v = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(params.n)));
      if (v < subset && !seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        touched.push_back(v);
        ++distinct;
      }
    }
    if (distinct >= params.r) ++result.successes;
    for (std::int64_t v : touched) seen[static_cast<std::size_t>(v)] = false;
  }
  result.frequency = static_cast<double>(result.successes) / static_cast<double>(trials);
  return result;
}

double binomial_sigma(double p, std::int64_t trials) {
  const double clamped = std::min(std::max(p, 0.0), 1.0);
  return std::sqrt(clamped * (1.0 - clamped) / static_cast<double>(trials));
}

}  // namespace subcake
