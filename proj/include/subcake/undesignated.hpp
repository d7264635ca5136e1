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

#include <functional>
#include <optional>
#include <string>

#include "subcake/protocols.hpp"

namespace subcake {

/// Parameters of the undesignated preassignment pipeline. The preassign
/// budget depends on (r, eps, t) only, which is the whole point: it does
/// not grow with n.
struct UndesignatedParams {
  std::int64_t n = 1;
  std::int64_t r = 1;
  Rat eps = Rat(1);      // fraction of players that may be victimized
  Rat t = make_rat(2, 1);

  Rat alpha_star() const { return Rat(128 * r) / n; }     // pcut value target
  std::int64_t draws() const { return rat_ceil_i64(t * r / eps); }
  std::int64_t retries() const { return rat_ceil_i64(t / eps); }
  std::int64_t victim_target() const { return rat_floor_i64(eps * n); }

  /// Diagnostic when the parameters violate a precondition, nullopt when
  /// they are admissible. Rejects the regime where 128r/n > 1: every cut
  /// would be unanswerable.
  std::optional<std::string> validate() const;
};

enum class PreassignStatus { Success, FailedSampling, FailedApproxFair };

struct PreassignOutcome {
  PreassignStatus status = PreassignStatus::Success;
  std::vector<PlayerId> selected;    // P', ascending (x_p, id)
  Rat cut_x;                         // x = max cut point over P'
  Allocation allocation;             // over P', inside [0, x]
  std::int64_t distinct_drawn = 0;   // |P_0|
  int attempts = 0;                  // constant-factor strategy attempts used
};

/// Draws players with replacement, selects the r smallest alpha*-cut points
/// among the distinct draws, and hands [0, x] to the constant-factor
/// strategy with c = 128 (retried up to ceil(t/eps) times for randomized
/// strategies). A repeated draw of the same player re-issues its cut query
/// only when charge_duplicates is set; the answer is memoized either way.
PreassignOutcome preassign_u(Oracle& oracle, const UndesignatedParams& params,
                             ApproxFairStrategy& strategy,
                             const std::function<PlayerId()>& draw, Rng& strategy_rng,
                             bool charge_duplicates);

struct CompletionOutcome {
  std::vector<PlayerId> victims;
  Allocation allocation;        // survivors
  bool degenerate_pool = false; // pool smaller than the victim target
};

/// Victimizes the floor(eps*n) lowest evaluators of the remainder, then
/// divides the remainder proportionally among the survivors.
CompletionOutcome completion(Oracle& oracle, const std::vector<PlayerId>& pool,
                             const PieceSet& remainder, std::int64_t victim_target);

struct Theorem1Options {
  bool charge_duplicates = false;
  bool check_lemma3_premise = true;  // ground-truth safety of the survivor set
};

struct Theorem1Run {
  PreassignStatus status = PreassignStatus::Success;
  std::vector<PlayerId> preassigned;
  Rat cut_x;
  Allocation preassign_allocation;
  FairnessCertificate preassign_certificate;   // threshold 1/n
  std::vector<PlayerId> victims;
  std::int64_t victim_target = 0;
  Allocation completion_allocation;
  FairnessSummary survivor_summary;            // threshold 1/n
  bool survivors_safe_premise = false;         // ground truth |Q|/n test
  bool degenerate_pool = false;
  bool pieces_respect_cut = false;             // preassigned in [0,x], rest in [x,1]
  std::int64_t distinct_drawn = 0;
  int attempts = 0;
  QueryLedger ledger;

  bool success() const { return status == PreassignStatus::Success; }
};

/// Full pipeline: preassign (phase "preassign") then victimize + divide
/// (phase "completion"), with exact certificates. Throws
/// std::invalid_argument when params.validate() reports a defect.
Theorem1Run run_theorem1(const Instance& instance, const UndesignatedParams& params,
                         std::uint64_t seed, ApproxFairStrategy& strategy,
                         const Theorem1Options& options = {});

/// Success floor 1 - 8/((2t-3)^2 r) - (1/64)^(t/eps); the last term drops
/// for strategies that cannot fail.
double theorem1_success_floor(const UndesignatedParams& params, bool strategy_failure_free);

}  // namespace subcake
