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

#include "subcake/protocols.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

namespace subcake {

FairnessCertificate certify(const Instance& instance, const Allocation& allocation,
                            const Rat& threshold) {
  FairnessCertificate cert;
  cert.rows.reserve(allocation.assignments.size());
  for (const auto& [p, piece] : allocation.assignments) {
    CertificateRow row;
    row.player = p;
    row.value = measure(instance.valuation(p), piece);
    row.threshold = threshold;
    row.fair = row.value >= threshold;
    cert.all_fair = cert.all_fair && row.fair;
    cert.rows.push_back(std::move(row));
  }
  return cert;
}

FairnessSummary certify_summary(const Instance& instance, const Allocation& allocation,
                                const Rat& threshold) {
  FairnessSummary s;
  for (const auto& [p, piece] : allocation.assignments) {
    ++s.players;
    if (measure(instance.valuation(p), piece) >= threshold) ++s.fair;
  }
  return s;
}

namespace {

struct DcEntry {
  Rat x;
  PlayerId player;
};

// Even-Paz recursion: each player half-cuts at floor(k/2)/k of their own
// value of the piece, the group splits at the floor(k/2)-th smallest cut
// point (ties by id), and the halves recurse on the two sides.
void dc_recurse(Oracle& oracle, std::span<DcEntry> group, const PieceSet& piece,
                Allocation& out) {
  if (group.size() == 1) {
    out.assignments[group.front().player] = piece;
    return;
  }
  if (piece.empty()) {
    for (const auto& e : group) out.assignments[e.player] = PieceSet();
    return;
  }

  const std::int64_t k = static_cast<std::int64_t>(group.size());
  const std::int64_t m = k / 2;
  for (auto& e : group) {
    const Rat beta = oracle.eval_all(piece, e.player);
    Rat alpha = beta * m;
    alpha /= k;
    e.x = *oracle.cut(piece, e.player, alpha);  // alpha <= beta, always answerable
  }

  const auto less = [](const DcEntry& a, const DcEntry& b) {
    const int c = cmp(a.x, b.x);
    return c < 0 || (c == 0 && a.player < b.player);
  };
  std::nth_element(group.begin(), group.begin() + (m - 1), group.end(), less);
  const Rat split = group[static_cast<std::size_t>(m - 1)].x;

  auto [left_piece, right_piece] = piece.split_at(split);
  dc_recurse(oracle, group.subspan(0, static_cast<std::size_t>(m)), left_piece, out);
  dc_recurse(oracle, group.subspan(static_cast<std::size_t>(m)), right_piece, out);
}

}  // namespace

Allocation dc(Oracle& oracle, const std::vector<PlayerId>& players, const PieceSet& piece) {
  if (players.empty()) throw std::invalid_argument("dc: empty player set");
  Allocation out;
  out.phase = oracle.phase();
  std::vector<DcEntry> scratch;
  scratch.reserve(players.size());
  for (PlayerId p : players) scratch.push_back({Rat(0), p});
  dc_recurse(oracle, std::span<DcEntry>(scratch), piece, out);
  return out;
}

std::uint64_t dc_query_bound(std::int64_t players) {
  if (players <= 1) return 0;
  return 2 * static_cast<std::uint64_t>(players) + dc_query_bound(players / 2) +
         dc_query_bound(players - players / 2);
}

PcutResult pcut_select(const std::vector<std::pair<PlayerId, CutAnswer>>& answers,
                       std::int64_t m) {
  std::vector<std::pair<Rat, PlayerId>> finite;
  finite.reserve(answers.size());
  for (const auto& [p, x] : answers)
    if (x) finite.emplace_back(*x, p);
  std::sort(finite.begin(), finite.end(), [](const auto& a, const auto& b) {
    const int c = cmp(a.first, b.first);
    return c < 0 || (c == 0 && a.second < b.second);
  });

  PcutResult result;
  const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(std::max<std::int64_t>(m, 0)),
                                                 finite.size());
  result.shortfall = static_cast<std::int64_t>(finite.size()) < m;
  result.selected.reserve(take);
  result.cut_points.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    result.selected.push_back(finite[i].second);
    result.cut_points.push_back(finite[i].first);
  }
  return result;
}

PcutResult pcut(Oracle& oracle, const std::vector<PlayerId>& players, const Interval& piece,
                const Rat& alpha, std::int64_t m) {
  std::vector<std::pair<PlayerId, CutAnswer>> answers;
  answers.reserve(players.size());
  for (PlayerId p : players) answers.emplace_back(p, oracle.cut(piece, p, alpha));
  return pcut_select(answers, m);
}

VictimizeResult victimize(Oracle& oracle, const std::vector<PlayerId>& pool,
                          const PieceSet& piece, std::int64_t m) {
  if (m < 0 || m > static_cast<std::int64_t>(pool.size()))
    throw std::invalid_argument("victimize: m out of range");

  std::vector<std::pair<Rat, PlayerId>> values;
  values.reserve(pool.size());
  for (PlayerId p : pool) {
    Rat v = piece.empty() ? Rat(0) : oracle.eval_all(piece, p);
    values.emplace_back(std::move(v), p);
  }
  const auto less = [](const auto& a, const auto& b) {
    const int c = cmp(a.first, b.first);
    return c < 0 || (c == 0 && a.second < b.second);
  };
  if (m > 0 && static_cast<std::size_t>(m) < values.size())
    std::nth_element(values.begin(), values.begin() + (m - 1), values.end(), less);

  VictimizeResult result;
  result.victims.reserve(static_cast<std::size_t>(m));
  result.survivors.reserve(values.size() - static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i < static_cast<std::size_t>(m))
      result.victims.push_back(values[i].second);
    else
      result.survivors.push_back(values[i].second);
  }
  std::sort(result.victims.begin(), result.victims.end());
  std::sort(result.survivors.begin(), result.survivors.end());
  return result;
}

bool is_safe(const Instance& instance, PlayerId p, std::int64_t q_size, const PieceSet& piece) {
  return measure(instance.valuation(p), piece) >= Rat(q_size) / instance.n();
}

bool all_safe(const Instance& instance, const std::vector<PlayerId>& q, const PieceSet& piece) {
  const Rat threshold = Rat(static_cast<long>(q.size())) / instance.n();
  for (PlayerId p : q)
    if (measure(instance.valuation(p), piece) < threshold) return false;
  return true;
}

bool m_safe(const Instance& instance, const std::vector<PlayerId>& q, const PieceSet& piece,
            std::int64_t m) {
  std::vector<Rat> values;
  values.reserve(q.size());
  for (PlayerId p : q) values.push_back(measure(instance.valuation(p), piece));
  std::sort(values.begin(), values.end());

  const std::int64_t size = static_cast<std::int64_t>(values.size());
  const std::int64_t max_drops = std::min(m, size);
  for (std::int64_t drops = 0; drops <= max_drops; ++drops) {
    if (drops == size) return true;  // empty set is vacuously safe
    // after dropping the `drops` smallest, the minimum is values[drops]
    if (values[static_cast<std::size_t>(drops)] >= Rat(size - drops) / instance.n()) return true;
  }
  return false;
}

Rat approx_fair_failure_bound(const Rat& c) {
  if (c <= 32) throw std::invalid_argument("failure bound defined for c > 32");
  const Rat c2 = c * c;
  return Rat(8192) / (c2 * (c - 32)) + Rat(1024) / (c2 * c) + Rat(128) / c2;
}

std::optional<Allocation> DcAdapter::run(Oracle& oracle, const std::vector<PlayerId>& players,
                                         const PieceSet& piece, const Rat& c, Rng& rng) {
  (void)c;
  (void)rng;
  return dc(oracle, players, piece);
}

const std::map<std::string, std::shared_ptr<ApproxFairStrategy>>& approx_fair_registry() {
  static const std::map<std::string, std::shared_ptr<ApproxFairStrategy>> registry = {
      {"dc-adapter", std::make_shared<DcAdapter>()},
  };
  return registry;
}

ApproxFairOutcome approx_fair(Oracle& oracle, ApproxFairStrategy& strategy,
                              const std::vector<PlayerId>& players, const PieceSet& piece,
                              const Rat& c, Rng& rng) {
  if (players.empty()) throw std::invalid_argument("approx_fair: empty player set");
  if (c < 1) throw std::invalid_argument("approx_fair: c must be >= 1");
  ApproxFairOutcome outcome;
  auto allocation = strategy.run(oracle, players, piece, c, rng);
  if (allocation) {
    outcome.success = true;
    outcome.allocation = std::move(*allocation);
  }
  return outcome;
}

}  // namespace subcake
