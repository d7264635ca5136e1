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

#include "subcake/protocols.hpp"
#include "subcake/undesignated.hpp"

namespace subcake {

/// Parameters of the designated preassignment pipeline. eps_prime = eps/r
/// drives the per-player deposit loop. constant_scale (sigma) shrinks the
/// sample count, round budget, and approver threshold proportionally so
/// the pipeline is exercisable at desk-scale n; sigma = 1 reproduces the
/// nominal constants exactly.
struct DesignatedParams {
  std::vector<PlayerId> designated;  // P_r, distinct ids
  std::int64_t n = 1;
  Rat eps = make_rat(1, 3);          // must satisfy 0 < eps <= 1/e
  Rat t = Rat(1);
  Rat constant_scale = Rat(1);       // sigma in (0, 1]

  std::int64_t r() const { return static_cast<std::int64_t>(designated.size()); }
  Rat eps_prime() const { return eps / Rat(static_cast<long>(designated.size())); }
  double log_inv_eps_prime() const;

  /// Samples per round: ceil(sigma * 2^10 * t / eps' * ln(1/eps')).
  std::int64_t samples_per_round() const;
  /// Round budget: ceil(sigma * 54 * ln(1/eps')^2).
  std::int64_t max_rounds() const;
  /// Keep condensing while at least this many sampled players approve:
  /// sigma * 2^9 * t * ln(1/eps').
  double approver_threshold() const;

  std::int64_t victim_target() const { return rat_floor_i64(eps * n); }

  std::optional<std::string> validate() const;
};

/// Fairness regime of the designated pipeline as a pure predicate:
/// (7 ln(r/eps))^2 <= ln n, the condition under which the compounded
/// halving bound still clears 1/n. n is a double because the regime only
/// opens at populations far beyond any runnable instance.
bool designated_fairness_regime(std::int64_t r, const Rat& eps, double n);

struct CondenseResult {
  Interval piece;          // the retained half
  PlayerId median_player;  // q0
  Rat median_cut;          // x_{q0}
  Rat alpha_left;
  Rat alpha_right;
};

/// One condense round: every approver half-cuts its own value of the piece,
/// the piece splits at the lower-median cut point (ties by ascending id,
/// multiset duplicates kept), and p keeps the side it values more (ties go
/// right). Output value to p is at least half its input value, exactly.
CondenseResult condense(Oracle& oracle, PlayerId p, const std::vector<PlayerId>& approvers,
                        const Interval& piece);

enum class DepositExit { EarlyExit, LoopExhausted };

struct DepositResult {
  Interval piece;
  DepositExit exit = DepositExit::EarlyExit;
  int condense_calls = 0;
  std::vector<std::int64_t> round_approvers;  // |P'| per executed round
};

/// Iteratively condenses [0,1] toward a piece player p values, stopping
/// when too few sampled players still approve of the current piece. A run
/// that exhausts its round budget returns the current piece flagged
/// LoopExhausted.
DepositResult deposit(Oracle& oracle, PlayerId p, const DesignatedParams& params, Rng& rng);

/// Ground-truth P(alpha, D): players valuing the piece at >= alpha.
/// Verification path only; not query-counted.
std::vector<PlayerId> approvers(const Instance& instance, const Rat& alpha,
                                const PieceSet& piece);

/// Overlap graph of deposit pieces: an edge requires positive-length
/// intersection (endpoint touching is not an interaction), components via
/// union-find.
struct RelationGraph {
  std::vector<PlayerId> owners;
  std::vector<PieceSet> pieces;                  // parallel to owners
  std::vector<std::pair<int, int>> edges;        // index pairs, i < j
  std::vector<std::vector<int>> components;      // index groups, ascending
};

RelationGraph relation_components(const std::vector<std::pair<PlayerId, PieceSet>>& pieces);

struct PreassignSOutcome {
  std::map<PlayerId, DepositResult> deposits;
  RelationGraph graph;
  std::map<PlayerId, PieceSet> assigned;        // C*_p
  std::map<PlayerId, int> component_size;       // k of p's component
  PieceSet deposit_union;                       // union of deposit pieces
};

/// Runs deposit per designated player (independent child rng streams),
/// groups overlapping deposits, and divides each component's union
/// proportionally among its owners.
PreassignSOutcome preassign_s(Oracle& oracle, const DesignatedParams& params, Rng& rng);

struct Theorem2Run {
  PreassignSOutcome pre;
  std::map<PlayerId, Rat> designated_value;     // ground truth of C*_p
  std::map<PlayerId, bool> halving_ok;          // value >= (1/2)^calls / k
  std::map<PlayerId, bool> polite;              // |P(eps', C_p)| <= eps' n
  bool all_polite = false;
  std::int64_t union_approvers = 0;             // |P(eps, union of deposits)|
  bool designated_all_fair_scaled = true;       // against (1/2)^calls / k
  bool designated_disjoint = false;
  PieceSet remainder;
  std::vector<PlayerId> victims;
  std::int64_t victim_target = 0;
  Allocation completion_allocation;
  FairnessSummary survivor_summary;             // threshold 1/n
  bool degenerate_pool = false;
  bool any_loop_exhausted = false;
  QueryLedger ledger;
};

/// Full designated pipeline: preassign (phase "preassign"), then victimize
/// and divide the complement of the deposits (phase "completion").
Theorem2Run run_theorem2(const Instance& instance, const DesignatedParams& params,
                         std::uint64_t seed);

/// Success floor 1 - (eps/r)^t.
double theorem2_success_floor(const DesignatedParams& params);

}  // namespace subcake
