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

#include <doctest.h>

#include <algorithm>

#include "subcake/generators.hpp"
#include "subcake/protocols.hpp"

using namespace subcake;

namespace {

Rat R(const char* s) { return rat_from_string(s); }

Valuation left_heavy() {
  return Valuation({R("0"), R("1/2"), R("1")}, {R("2"), R("0")});
}

Valuation right_heavy() {
  return Valuation({R("0"), R("1/2"), R("1")}, {R("0"), R("2")});
}

std::vector<PlayerId> all_players(const Instance& instance) {
  std::vector<PlayerId> ids;
  for (std::int64_t p = 0; p < instance.n(); ++p) ids.push_back(static_cast<PlayerId>(p));
  return ids;
}

Instance block_instance(std::int64_t n, std::uint64_t seed, int blocks = 6) {
  GeneratorSpec spec;
  spec.kind = GeneratorSpec::Kind::BlockRandom;
  spec.n = n;
  spec.seed = seed;
  spec.num_blocks = blocks;
  return generate(spec);
}

}  // namespace

TEST_CASE("dc: singleton takes the whole piece without queries") {
  Instance instance({Valuation::uniform()});
  Oracle oracle(instance);
  const Allocation a = dc(oracle, {0}, PieceSet::unit());
  CHECK(a.assignments.at(0) == PieceSet::unit());
  CHECK(oracle.ledger().total().total() == 0);
}

TEST_CASE("dc: two-player hand trace splits at the median half-cut") {
  Instance instance({Valuation::uniform(), right_heavy()});
  Oracle oracle(instance);
  const Allocation a = dc(oracle, all_players(instance), PieceSet::unit());

  CHECK(a.assignments.at(0) == PieceSet(Interval(R("0"), R("1/2"))));
  CHECK(a.assignments.at(1) == PieceSet(Interval(R("1/2"), R("1"))));
  CHECK(measure(instance.valuation(0), a.assignments.at(0)) == R("1/2"));
  CHECK(measure(instance.valuation(1), a.assignments.at(1)) == 1);
  // one eval + one cut per player at the single level
  CHECK(oracle.ledger().total().total() == 4);
}

TEST_CASE("dc: n identical uniform players each get exactly 1/n") {
  for (int n = 2; n <= 16; ++n) {
    Instance instance(std::vector<Valuation>(static_cast<std::size_t>(n), Valuation::uniform()));
    Oracle oracle(instance);
    const Allocation a = dc(oracle, all_players(instance), PieceSet::unit());
    for (const auto& [p, piece] : a.assignments)
      CHECK(measure(instance.valuation(p), piece) == make_rat(1, n));
  }
}

TEST_CASE("dc: exact proportionality and query bound on random instances") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(seed % 13) * 3;
    Instance instance = block_instance(n, seed);
    Oracle oracle(instance);
    const Allocation a = dc(oracle, all_players(instance), PieceSet::unit());

    std::vector<PieceSet> pieces;
    for (const auto& [p, piece] : a.assignments) {
      CHECK(measure(instance.valuation(p), piece) >= make_rat(1, n));
      pieces.push_back(piece);
    }
    CHECK(pairwise_disjoint(pieces));
    CHECK(oracle.ledger().total().total() <= dc_query_bound(n));
  }
}

TEST_CASE("dc: fragmented piece multiplies the ledger by the fragment count") {
  const std::int64_t n = 12;
  Instance instance = block_instance(n, 7);

  // contiguous baseline on [0,1]
  Oracle baseline(instance);
  dc(baseline, all_players(instance), PieceSet::unit());
  const std::uint64_t contiguous = baseline.ledger().total().total();

  // same instance on a 3-fragment piece
  const PieceSet fragmented = PieceSet::from_intervals({Interval(R("0"), R("1/4")),
                                                        Interval(R("1/3"), R("2/3")),
                                                        Interval(R("3/4"), R("1"))});
  Oracle oracle(instance);
  const Allocation a = dc(oracle, all_players(instance), fragmented);
  CHECK(oracle.ledger().total().total() <= 3 * dc_query_bound(n));
  CHECK(oracle.ledger().total().total() <= 3 * contiguous);

  // proportionality still exact w.r.t. the fragmented piece
  for (const auto& [p, piece] : a.assignments) {
    CHECK(measure(instance.valuation(p), piece) >=
          measure(instance.valuation(p), fragmented) / n);
    CHECK(piece.subset_of(fragmented));
  }
}

TEST_CASE("dc proportionality holds under the safety premise (safe sets get 1/n)") {
  int premise_hits = 0;
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    Instance instance = block_instance(10, seed);
    const PieceSet piece = PieceSet(Interval(R("1/4"), R("1")));

    // largest k such that the k highest-valuing players form a safe set
    std::vector<std::pair<Rat, PlayerId>> by_value;
    for (PlayerId p : all_players(instance))
      by_value.emplace_back(measure(instance.valuation(p), piece), p);
    std::sort(by_value.begin(), by_value.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::size_t k = by_value.size();
    while (k > 0 && by_value[k - 1].first < Rat(static_cast<long>(k)) / instance.n()) --k;

    std::vector<PlayerId> q;
    for (std::size_t i = 0; i < k; ++i) q.push_back(by_value[i].second);
    std::sort(q.begin(), q.end());
    if (q.size() < 2 || !all_safe(instance, q, piece)) continue;
    ++premise_hits;

    Oracle oracle(instance);
    const Allocation a = dc(oracle, q, piece);
    for (const auto& [p, share] : a.assignments)
      CHECK(measure(instance.valuation(p), share) >= Rat(1) / instance.n());
  }
  CHECK(premise_hits > 10);  // the scenario must actually exercise the lemma
}

TEST_CASE("pcut: ties break by ascending id") {
  Instance instance(std::vector<Valuation>(3, Valuation::uniform()));
  Oracle oracle(instance);
  const PcutResult r = pcut(oracle, {0, 1, 2}, unit_interval(), R("1/2"), 2);
  CHECK(r.selected == std::vector<PlayerId>{0, 1});
  CHECK(r.cut_points == std::vector<Rat>{R("1/2"), R("1/2")});
  CHECK(!r.shortfall);
  CHECK(oracle.ledger().total().cuts == 3);
}

TEST_CASE("pcut: mass concentration decides the selection") {
  Instance instance({right_heavy(), left_heavy()});
  Oracle oracle(instance);
  const PcutResult r = pcut(oracle, {0, 1}, unit_interval(), R("1/2"), 1);
  // left-concentrated reaches 1/2 at x=1/4, right-concentrated at 3/4
  CHECK(r.selected == std::vector<PlayerId>{1});
  CHECK(r.cut_points == std::vector<Rat>{R("1/4")});
}

TEST_CASE("pcut: unanswerable cuts produce an empty selection with shortfall") {
  Instance instance({right_heavy(), right_heavy()});
  Oracle oracle(instance);
  // neither player has any mass in [0, 1/2]
  const PcutResult r = pcut(oracle, {0, 1}, Interval(R("0"), R("1/2")), R("1/4"), 1);
  CHECK(r.selected.empty());
  CHECK(r.shortfall);
  CHECK(oracle.ledger().total().cuts == 2);  // failed cuts still charge
}

TEST_CASE("victimize: smallest evaluators are removed, ties by id") {
  // evaluations of [0, 1/2]: 0.1, 0.5, 0.9 by construction
  const Valuation low({R("0"), R("1/2"), R("1")}, {R("1/5"), R("9/5")});
  const Valuation mid = Valuation::uniform();
  const Valuation high({R("0"), R("1/2"), R("1")}, {R("9/5"), R("1/5")});
  Instance instance({mid, low, high});
  Oracle oracle(instance);
  const PieceSet piece(Interval(R("0"), R("1/2")));

  const VictimizeResult one = victimize(oracle, {0, 1, 2}, piece, 1);
  CHECK(one.victims == std::vector<PlayerId>{1});
  CHECK(one.survivors == std::vector<PlayerId>{0, 2});

  const VictimizeResult none = victimize(oracle, {0, 1, 2}, piece, 0);
  CHECK(none.survivors == std::vector<PlayerId>{0, 1, 2});

  const VictimizeResult all = victimize(oracle, {0, 1, 2}, piece, 3);
  CHECK(all.survivors.empty());
  CHECK(all.victims == std::vector<PlayerId>{0, 1, 2});
}

TEST_CASE("property: victimize size contract |output| = |input| - m") {
  Rng rng(4242);
  for (int iter = 0; iter < 25; ++iter) {
    const std::int64_t n = 3 + static_cast<std::int64_t>(rng.below(12));
    Instance instance = block_instance(n, rng.next());
    Oracle oracle(instance);
    const std::int64_t m = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n + 1)));
    const VictimizeResult r =
        victimize(oracle, all_players(instance), PieceSet(Interval(R("1/8"), R("7/8"))), m);
    CHECK(static_cast<std::int64_t>(r.survivors.size()) == n - m);
    CHECK(static_cast<std::int64_t>(r.victims.size()) == m);
  }
}

TEST_CASE("is_safe: inclusive boundary and degenerate cases") {
  Instance instance(std::vector<Valuation>(8, Valuation::uniform()));
  // uniform player, |Q| = n/4 = 2: 1/2 >= 2/8
  CHECK(is_safe(instance, 0, 2, PieceSet(Interval(R("0"), R("1/2")))));
  // boundary: value exactly |Q|/n counts as safe
  CHECK(is_safe(instance, 0, 4, PieceSet(Interval(R("0"), R("1/2")))));
  CHECK(!is_safe(instance, 0, 5, PieceSet(Interval(R("0"), R("1/2")))));
  // zero-value piece is dangerous for any nonempty Q
  Instance rh({right_heavy()});
  CHECK(!is_safe(rh, 0, 1, PieceSet(Interval(R("0"), R("1/2")))));
}

TEST_CASE("m_safe: iterated removal decides the predicate") {
  // uniform players value [0,1/2] at 1/2; with |Q|=4, n=8 the set is safe
  Instance instance({Valuation::uniform(), Valuation::uniform(), Valuation::uniform(),
                     right_heavy(), right_heavy(), right_heavy(), right_heavy(),
                     right_heavy()});
  const PieceSet left(Interval(R("0"), R("1/2")));

  CHECK(m_safe(instance, {0, 1, 2}, left, 0));  // already safe: 1/2 >= 3/8
  // one dangerous player (values the left half at 0): removable
  CHECK(!m_safe(instance, {0, 1, 2, 3}, left, 0));
  CHECK(m_safe(instance, {0, 1, 2, 3}, left, 1));
  // all players value the piece at 0: no removal short of everyone helps
  CHECK(!m_safe(instance, {3, 4, 5, 6}, left, 3));
  CHECK(m_safe(instance, {3, 4, 5, 6}, left, 4));  // empty remainder is vacuously safe
}

TEST_CASE("constant-factor failure bound matches the exact proof arithmetic") {
  // at c = 128: 1/192 + 1/2048 + 1/128 = 83/6144 < 1/64
  CHECK(approx_fair_failure_bound(R("128")) == R("83/6144"));
  CHECK(approx_fair_failure_bound(R("128")) < R("1/64"));
  // at c = 64: 1/16 + 1/256 + 1/32 = 25/256 <= 2^9/64^2 = 1/8
  CHECK(approx_fair_failure_bound(R("64")) == R("25/256"));
  CHECK(approx_fair_failure_bound(R("64")) <= R("1/8"));
  CHECK(make_rat(512, 64 * 64) == R("1/8"));
  CHECK_THROWS_AS(approx_fair_failure_bound(R("32")), std::invalid_argument);
  // the simplified t >= 64 chain stays above the exact bound
  for (long t = 64; t <= 1024; t *= 2)
    CHECK(approx_fair_failure_bound(Rat(t)) <= make_rat(512, t * t));
}

TEST_CASE("approx_fair with the proportional adapter is c-fair for every c >= 1") {
  Instance instance({Valuation::uniform(), Valuation::uniform()});
  Oracle oracle(instance);
  Rng rng(1);
  DcAdapter strategy;
  const auto outcome =
      approx_fair(oracle, strategy, {0, 1}, PieceSet::unit(), R("128"), rng);
  REQUIRE(outcome.success);
  for (const auto& [p, piece] : outcome.allocation.assignments) {
    const Rat value = measure(instance.valuation(p), piece);
    CHECK(value == R("1/2"));
    CHECK(value >= R("1") / (R("128") * 2));  // the c-fair contract, amply met
  }
  CHECK(approx_fair_registry().count("dc-adapter") == 1);
}

TEST_CASE("pcut is deterministic: identical runs give identical output") {
  Instance instance = block_instance(9, 31337);
  Oracle o1(instance), o2(instance);
  const PcutResult a = pcut(o1, all_players(instance), unit_interval(), R("1/3"), 4);
  const PcutResult b = pcut(o2, all_players(instance), unit_interval(), R("1/3"), 4);
  CHECK(a.selected == b.selected);
  CHECK(a.cut_points == b.cut_points);
}
