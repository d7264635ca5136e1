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

#include "subcake/undesignated.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace subcake {

std::optional<std::string> UndesignatedParams::validate() const {
  if (n < 1) return "n must be >= 1";
  if (r < 1) return "r must be >= 1";
  if (eps <= 0 || eps > 1) return "eps must lie in (0, 1]";
  if (t * 2 <= 3) return "t must exceed 3/2";
  if (Rat(r) > eps * n / 127)
    return "r exceeds eps*n/127: preassignment bound does not apply";
  if (alpha_star() > 1)
    return "128r/n exceeds 1: the pcut value target is unanswerable";
  return std::nullopt;
}

PreassignOutcome preassign_u(Oracle& oracle, const UndesignatedParams& params,
                             ApproxFairStrategy& strategy,
                             const std::function<PlayerId()>& draw, Rng& strategy_rng,
                             bool charge_duplicates) {
  const Interval cake = unit_interval();
  const Rat alpha = params.alpha_star();

  // Draws are with replacement; distinct players accumulate into P_0.
  // Identical queries are answered from the memo; the ledger charges per
  // draw only under charge_duplicates.
  std::map<PlayerId, CutAnswer> memo;
  for (std::int64_t i = 0; i < params.draws(); ++i) {
    const PlayerId p = draw();
    const auto it = memo.find(p);
    if (it == memo.end())
      memo.emplace(p, oracle.cut(cake, p, alpha));
    else if (charge_duplicates)
      oracle.cut(cake, p, alpha);
  }

  PreassignOutcome out;
  out.distinct_drawn = static_cast<std::int64_t>(memo.size());
  if (out.distinct_drawn < params.r) {
    out.status = PreassignStatus::FailedSampling;
    return out;
  }

  std::vector<std::pair<PlayerId, CutAnswer>> answers(memo.begin(), memo.end());
  PcutResult sel = pcut_select(answers, params.r);
  out.selected = sel.selected;
  out.cut_x = sel.cut_points.back();  // max over P'; selection is ascending

  const PieceSet prefix_piece{Interval(Rat(0), out.cut_x)};
  for (std::int64_t attempt = 1; attempt <= params.retries(); ++attempt) {
    out.attempts = static_cast<int>(attempt);
    auto result = approx_fair(oracle, strategy, out.selected, prefix_piece, Rat(128),
                              strategy_rng);
    if (result.success) {
      out.allocation = std::move(result.allocation);
      return out;
    }
    if (!strategy.randomized()) break;  // retries cannot change the outcome
  }
  out.status = PreassignStatus::FailedApproxFair;
  return out;
}

CompletionOutcome completion(Oracle& oracle, const std::vector<PlayerId>& pool,
                             const PieceSet& remainder, std::int64_t victim_target) {
  CompletionOutcome out;
  std::int64_t m = victim_target;
  if (m > static_cast<std::int64_t>(pool.size())) {
    m = static_cast<std::int64_t>(pool.size());
    out.degenerate_pool = true;
  }
  VictimizeResult vict = victimize(oracle, pool, remainder, m);
  out.victims = std::move(vict.victims);
  if (!vict.survivors.empty()) out.allocation = dc(oracle, vict.survivors, remainder);
  out.allocation.phase = oracle.phase();
  return out;
}

Theorem1Run run_theorem1(const Instance& instance, const UndesignatedParams& params,
                         std::uint64_t seed, ApproxFairStrategy& strategy,
                         const Theorem1Options& options) {
  if (params.n != instance.n())
    throw std::invalid_argument("theorem1: params.n does not match the instance");
  if (const auto problem = params.validate())
    throw std::invalid_argument("theorem1: " + *problem);

  Rng rng(seed);
  Oracle oracle(instance);
  oracle.set_phase("preassign");

  const std::int64_t n = instance.n();
  const auto draw = [&rng, n]() {
    return static_cast<PlayerId>(rng.below(static_cast<std::uint64_t>(n)));
  };

  Theorem1Run run;
  run.victim_target = params.victim_target();

  PreassignOutcome pre =
      preassign_u(oracle, params, strategy, draw, rng, options.charge_duplicates);
  run.status = pre.status;
  run.distinct_drawn = pre.distinct_drawn;
  run.attempts = pre.attempts;
  if (pre.status != PreassignStatus::Success) {
    run.ledger = oracle.ledger();
    return run;
  }

  run.preassigned = pre.selected;
  run.cut_x = pre.cut_x;
  run.preassign_allocation = pre.allocation;
  const Rat fair_threshold = Rat(1) / n;
  run.preassign_certificate = certify(instance, pre.allocation, fair_threshold);

  // Completion on C - C' = [x, 1] for everyone not preassigned.
  oracle.set_phase("completion");
  const PieceSet remainder{Interval(pre.cut_x, Rat(1))};
  std::vector<PlayerId> pool;
  pool.reserve(static_cast<std::size_t>(n) - pre.selected.size());
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  for (PlayerId p : pre.selected) taken[static_cast<std::size_t>(p)] = true;
  for (std::int64_t p = 0; p < n; ++p)
    if (!taken[static_cast<std::size_t>(p)]) pool.push_back(static_cast<PlayerId>(p));

  CompletionOutcome comp = completion(oracle, pool, remainder, run.victim_target);
  run.victims = std::move(comp.victims);
  run.degenerate_pool = comp.degenerate_pool;
  run.completion_allocation = std::move(comp.allocation);
  run.survivor_summary = certify_summary(instance, run.completion_allocation, fair_threshold);

  if (options.check_lemma3_premise) {
    std::vector<PlayerId> survivors;
    survivors.reserve(run.completion_allocation.assignments.size());
    for (const auto& [p, _] : run.completion_allocation.assignments) survivors.push_back(p);
    run.survivors_safe_premise = all_safe(instance, survivors, remainder);
  }

  bool respect = true;
  for (const auto& [p, piece] : run.preassign_allocation.assignments)
    if (!piece.empty() && piece.hi() > pre.cut_x) respect = false;
  for (const auto& [p, piece] : run.completion_allocation.assignments)
    if (!piece.empty() && piece.lo() < pre.cut_x) respect = false;
  run.pieces_respect_cut = respect;

  run.ledger = oracle.ledger();
  return run;
}

double theorem1_success_floor(const UndesignatedParams& params, bool strategy_failure_free) {
  const double t = rat_to_double(params.t);
  const double r = static_cast<double>(params.r);
  double floor = 1.0 - 8.0 / ((2 * t - 3) * (2 * t - 3) * r);
  if (!strategy_failure_free)
    floor -= std::pow(1.0 / 64.0, rat_to_double(params.t / params.eps));
  return floor;
}

}  // namespace subcake
