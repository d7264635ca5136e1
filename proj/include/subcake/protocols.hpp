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

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "subcake/oracle.hpp"
#include "subcake/rng.hpp"

namespace subcake {

/// Pieces handed to players by one protocol phase. Assignments are pairwise
/// measure-disjoint and lie inside the piece the protocol ran on.
struct Allocation {
  std::map<PlayerId, PieceSet> assignments;
  std::string phase;
};

struct CertificateRow {
  PlayerId player = 0;
  Rat value;
  Rat threshold;
  bool fair = false;
};

/// Exact ground-truth fairness certificate (value >= threshold per player).
struct FairnessCertificate {
  std::vector<CertificateRow> rows;
  bool all_fair = true;
};

/// Streaming form for large allocations: counts only.
struct FairnessSummary {
  std::uint64_t players = 0;
  std::uint64_t fair = 0;
  bool all_fair() const { return fair == players; }
};

FairnessCertificate certify(const Instance& instance, const Allocation& allocation,
                            const Rat& threshold);
FairnessSummary certify_summary(const Instance& instance, const Allocation& allocation,
                                const Rat& threshold);

/// Proportional divide-and-conquer division. Every player in `players`
/// receives value >= mu_p(piece) / |players| exactly; a singleton receives
/// the whole piece without queries. Queries route through the fragmented
/// forms when the piece has more than one fragment.
Allocation dc(Oracle& oracle, const std::vector<PlayerId>& players, const PieceSet& piece);

/// Exact worst-case ledger total of dc() on a contiguous piece: two queries
/// per player per recursion level.
std::uint64_t dc_query_bound(std::int64_t players);

struct PcutResult {
  std::vector<PlayerId> selected;            // m smallest cut points, ties by id
  std::vector<Rat> cut_points;               // parallel to selected
  bool shortfall = false;                    // fewer than m finite answers
};

/// Issues Cut(D, p, alpha) for every p in `players` and keeps the m smallest
/// answers. Players whose piece holds less than alpha mass are never
/// selected ahead of finite answers.
PcutResult pcut(Oracle& oracle, const std::vector<PlayerId>& players, const Interval& piece,
                const Rat& alpha, std::int64_t m);

/// Selection half of pcut over precomputed answers (used where query
/// issuance is memoized by the caller).
PcutResult pcut_select(const std::vector<std::pair<PlayerId, CutAnswer>>& answers,
                       std::int64_t m);

struct VictimizeResult {
  std::vector<PlayerId> survivors;  // ascending id
  std::vector<PlayerId> victims;    // ascending id
};

/// Evaluates the piece for every player and removes the m lowest evaluators
/// (ties by ascending id).
VictimizeResult victimize(Oracle& oracle, const std::vector<PlayerId>& pool,
                          const PieceSet& piece, std::int64_t m);

/// mu_p(piece) >= |Q|/n, with boundary equality counting as safe.
/// Ground-truth predicate; not query-counted.
bool is_safe(const Instance& instance, PlayerId p, std::int64_t q_size, const PieceSet& piece);

/// True when all of Q is safe w.r.t. the piece.
bool all_safe(const Instance& instance, const std::vector<PlayerId>& q, const PieceSet& piece);

/// True when removing at most m players leaves a safe set. Decided by
/// greedily dropping the smallest-value player; each drop lowers the
/// |Q|/n threshold, so greedy removal is exact for this predicate.
bool m_safe(const Instance& instance, const std::vector<PlayerId>& q, const PieceSet& piece,
            std::int64_t m);

/// Failure bound of the randomized constant-factor division contract:
/// 2^13/(c^2 (c-32)) + 1024/c^3 + 128/c^2, defined for c > 32.
Rat approx_fair_failure_bound(const Rat& c);

/// A pluggable constant-factor fair-division routine: on success every
/// player receives value >= mu_p(piece) / (c * |players|).
class ApproxFairStrategy {
 public:
  virtual ~ApproxFairStrategy() = default;
  virtual std::string name() const = 0;
  /// Randomized strategies may fail and are retried with fresh randomness;
  /// deterministic ones are attempted once.
  virtual bool randomized() const = 0;
  virtual std::optional<Allocation> run(Oracle& oracle, const std::vector<PlayerId>& players,
                                        const PieceSet& piece, const Rat& c, Rng& rng) = 0;
};

/// Default strategy: exact proportional division. Never fails and gives
/// value >= mu_p(piece)/|players|, so it is c-fair for every c >= 1, at
/// O(|players| log |players|) queries.
class DcAdapter final : public ApproxFairStrategy {
 public:
  std::string name() const override { return "dc-adapter"; }
  bool randomized() const override { return false; }
  std::optional<Allocation> run(Oracle& oracle, const std::vector<PlayerId>& players,
                                const PieceSet& piece, const Rat& c, Rng& rng) override;
};

/// Registered strategies by name.
const std::map<std::string, std::shared_ptr<ApproxFairStrategy>>& approx_fair_registry();

struct ApproxFairOutcome {
  bool success = false;
  Allocation allocation;
};

/// One strategy invocation under the c-fair contract (c > 32 required for
/// the failure bound above to be meaningful; the call itself accepts any
/// c >= 1).
ApproxFairOutcome approx_fair(Oracle& oracle, ApproxFairStrategy& strategy,
                              const std::vector<PlayerId>& players, const PieceSet& piece,
                              const Rat& c, Rng& rng);

}  // namespace subcake
