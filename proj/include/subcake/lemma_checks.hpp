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

#include <optional>
#include <string>

#include "subcake/rational.hpp"
#include "subcake/rng.hpp"

namespace subcake {

/// Parameters of the with-replacement sampling bound: drawing ceil(t*r/eps)
/// elements from {1..n} lands at least r distinct elements inside a fixed
/// floor(eps*n)-subset with probability at least
/// 1 - s^2 / (((s-1)(t-1) - 1)^2 r).
struct SamplingLemmaParams {
  std::int64_t n = 1;
  Rat eps = Rat(1);
  Rat s = Rat(2);
  Rat t = Rat(2);
  std::int64_t r = 0;

  std::int64_t draws() const { return rat_ceil_i64(t * r / eps); }
  std::int64_t subset_size() const { return rat_floor_i64(eps * n); }

  /// The closed-form lower bound; exact rational.
  Rat bound() const;

  std::optional<std::string> validate() const;  // (s-1)(t-1) > 1, r <= eps*n/s
};

struct Lemma1Result {
  std::int64_t trials = 0;
  std::int64_t successes = 0;
  double frequency = 0.0;
  Rat bound;
};

/// Pure sampling Monte Carlo of the bound above; no oracle involved.
/// r = 0 succeeds vacuously.
Lemma1Result check_lemma1(const SamplingLemmaParams& params, std::int64_t trials, Rng& rng);

/// Binomial standard deviation of a frequency estimate at probability p.
double binomial_sigma(double p, std::int64_t trials);

}  // namespace subcake
