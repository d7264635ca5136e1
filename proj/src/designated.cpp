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

#include "subcake/designated.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace subcake {

double DesignatedParams::log_inv_eps_prime() const {
  return std::log(1.0 / rat_to_double(eps_prime()));
}

std::int64_t DesignatedParams::samples_per_round() const {
  const double h = rat_to_double(constant_scale) * 1024.0 * rat_to_double(t) /
                   rat_to_double(eps_prime()) * log_inv_eps_prime();
  return static_cast<std::int64_t>(std::ceil(h));
}

std::int64_t DesignatedParams::max_rounds() const {
  const double l = log_inv_eps_prime();
  return static_cast<std::int64_t>(std::ceil(rat_to_double(constant_scale) * 54.0 * l * l));
}

double DesignatedParams::approver_threshold() const {
  return rat_to_double(constant_scale) * 512.0 * rat_to_double(t) * log_inv_eps_prime();
}

std::optional<std::string> DesignatedParams::validate() const {
  if (n < 1) return "n must be >= 1";
  if (designated.empty()) return "need at least one designated player";
  std::set<PlayerId> distinct(designated.begin(), designated.end());
  if (distinct.size() != designated.size()) return "designated ids must be distinct";
  for (PlayerId p : designated)
    if (p < 0 || p >= n) return "designated id out of range";
  if (eps <= 0 || rat_to_double(eps) > 1.0 / std::exp(1.0))
    return "eps must lie in (0, 1/e]";
  if (t < 1) return "t must be >= 1";
  if (constant_scale <= 0 || constant_scale > 1) return "constant_scale must lie in (0, 1]";
  return std::nullopt;
}

bool designated_fairness_regime(std::int64_t r, const Rat& eps, double n) {
  const double lhs = 7.0 * std::log(static_cast<double>(r) / rat_to_double(eps));
  return lhs * lhs <= std::log(n);
}

CondenseResult condense(Oracle& oracle, PlayerId p, const std::vector<PlayerId>& approvers,
                        const Interval& piece) {
  if (approvers.empty()) throw std::invalid_argument("condense: empty approver multiset");
  if (piece.is_empty()) throw std::invalid_argument("condense: zero-length piece");

  // Each q half-cuts by its own value of the piece; beta_q = 0 contributes
  // the left endpoint.
  std::vector<std::pair<Rat, PlayerId>> cuts;
  cuts.reserve(approvers.size());
  for (PlayerId q : approvers) {
    const Rat beta = oracle.eval_all(piece, q);
    const CutAnswer x = oracle.cut(piece, q, beta / 2);
    cuts.emplace_back(*x, q);
  }
  // Lower median; ties by ascending id, duplicate draws keep multiplicity.
  std::stable_sort(cuts.begin(), cuts.end(), [](const auto& a, const auto& b) {
    const int c = cmp(a.first, b.first);
    return c < 0 || (c == 0 && a.second < b.second);
  });
  const auto& median = cuts[(cuts.size() - 1) / 2];

  CondenseResult result;
  result.median_player = median.second;
  result.median_cut = median.first;
  result.alpha_left = oracle.eval_all(Interval(piece.lo, median.first), p);
  result.alpha_right = oracle.eval_all(Interval(median.first, piece.hi), p);
  result.piece = result.alpha_left > result.alpha_right
                     ? Interval(piece.lo, median.first)
                     : Interval(median.first, piece.hi);
  return result;
}

DepositResult deposit(Oracle& oracle, PlayerId p, const DesignatedParams& params, Rng& rng) {
  const Rat eps_prime = params.eps_prime();
  const std::int64_t h = params.samples_per_round();
  const std::int64_t rounds = params.max_rounds();
  const double threshold = params.approver_threshold();
  const std::uint64_t n = static_cast<std::uint64_t>(oracle.n());

  DepositResult result;
  Interval piece = unit_interval();
  for (std::int64_t round = 0; round < rounds; ++round) {
    std::vector<PlayerId> approvers;
    for (std::int64_t i = 0; i < h; ++i) {
      const PlayerId q = static_cast<PlayerId>(rng.below(n));
      if (oracle.eval_all(piece, q) >= eps_prime) approvers.push_back(q);
    }
    result.round_approvers.push_back(static_cast<std::int64_t>(approvers.size()));
    if (static_cast<double>(approvers.size()) < threshold) {
      result.piece = piece;
      result.exit = DepositExit::EarlyExit;
      return result;
    }
    piece = condense(oracle, p, approvers, piece).piece;
    ++result.condense_calls;
  }
  result.piece = piece;
  result.exit = DepositExit::LoopExhausted;
  return result;
}

std::vector<PlayerId> approvers(const Instance& instance, const Rat& alpha,
                                const PieceSet& piece) {
  std::vector<PlayerId> out;
  for (std::int64_t p = 0; p < instance.n(); ++p)
    if (measure(instance.valuation(static_cast<PlayerId>(p)), piece) >= alpha)
      out.push_back(static_cast<PlayerId>(p));
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(static_cast<std::size_t>(size)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

RelationGraph relation_components(const std::vector<std::pair<PlayerId, PieceSet>>& pieces) {
  RelationGraph g;
  for (const auto& [owner, piece] : pieces) {
    g.owners.push_back(owner);
    g.pieces.push_back(piece);
  }
  const int count = static_cast<int>(g.owners.size());
  UnionFind uf(count);
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (g.pieces[static_cast<std::size_t>(i)].overlaps_positively(
              g.pieces[static_cast<std::size_t>(j)])) {
        g.edges.emplace_back(i, j);
        uf.unite(i, j);
      }

  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < count; ++i) by_root[uf.find(i)].push_back(i);
  for (auto& [_, members] : by_root) g.components.push_back(std::move(members));
  std::sort(g.components.begin(), g.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return g;
}

PreassignSOutcome preassign_s(Oracle& oracle, const DesignatedParams& params, Rng& rng) {
  PreassignSOutcome out;

  std::vector<std::pair<PlayerId, PieceSet>> deposit_pieces;
  for (std::size_t i = 0; i < params.designated.size(); ++i) {
    const PlayerId p = params.designated[i];
    Rng stream = rng.child(i);
    DepositResult dep = deposit(oracle, p, params, stream);
    deposit_pieces.emplace_back(p, PieceSet(dep.piece));
    out.deposits.emplace(p, std::move(dep));
  }

  out.graph = relation_components(deposit_pieces);
  for (const auto& [_, piece] : deposit_pieces)
    out.deposit_union = out.deposit_union.set_union(piece);

  for (const auto& component : out.graph.components) {
    std::vector<PlayerId> members;
    PieceSet joint;
    for (int idx : component) {
      members.push_back(out.graph.owners[static_cast<std::size_t>(idx)]);
      joint = joint.set_union(out.graph.pieces[static_cast<std::size_t>(idx)]);
    }
    Allocation shares = dc(oracle, members, joint);
    for (auto& [p, piece] : shares.assignments) {
      out.component_size[p] = static_cast<int>(members.size());
      out.assigned[p] = std::move(piece);
    }
  }
  return out;
}

Theorem2Run run_theorem2(const Instance& instance, const DesignatedParams& params,
                         std::uint64_t seed) {
  if (params.n != instance.n())
    throw std::invalid_argument("theorem2: params.n does not match the instance");
  if (const auto problem = params.validate())
    throw std::invalid_argument("theorem2: " + *problem);

  Rng rng(seed);
  Oracle oracle(instance);
  oracle.set_phase("preassign");

  Theorem2Run run;
  run.victim_target = params.victim_target();
  run.pre = preassign_s(oracle, params, rng);

  const Rat eps_prime = params.eps_prime();
  const Rat polite_bound = eps_prime * instance.n();
  run.all_polite = true;
  std::vector<PieceSet> assigned_pieces;
  for (PlayerId p : params.designated) {
    const DepositResult& dep = run.pre.deposits.at(p);
    run.any_loop_exhausted = run.any_loop_exhausted || dep.exit == DepositExit::LoopExhausted;

    const auto approver_count = static_cast<std::int64_t>(
        approvers(instance, eps_prime, PieceSet(dep.piece)).size());
    const bool is_polite = Rat(static_cast<long>(approver_count)) <= polite_bound;
    run.polite[p] = is_polite;
    run.all_polite = run.all_polite && is_polite;

    const PieceSet& share = run.pre.assigned.at(p);
    const Rat value = measure(instance.valuation(p), share);
    run.designated_value[p] = value;
    const int k = run.pre.component_size.at(p);
    const Rat bound = half_pow(static_cast<unsigned>(dep.condense_calls)) / k;
    run.halving_ok[p] = value >= bound;
    run.designated_all_fair_scaled = run.designated_all_fair_scaled && run.halving_ok[p];
    assigned_pieces.push_back(share);
  }
  run.designated_disjoint = pairwise_disjoint(assigned_pieces);
  run.union_approvers = static_cast<std::int64_t>(
      approvers(instance, params.eps, run.pre.deposit_union).size());

  // Completion on the complement of the deposits.
  oracle.set_phase("completion");
  run.remainder = run.pre.deposit_union.complement_in_unit();

  std::vector<bool> taken(static_cast<std::size_t>(instance.n()), false);
  for (PlayerId p : params.designated) taken[static_cast<std::size_t>(p)] = true;
  std::vector<PlayerId> pool;
  pool.reserve(static_cast<std::size_t>(instance.n() - params.r()));
  for (std::int64_t p = 0; p < instance.n(); ++p)
    if (!taken[static_cast<std::size_t>(p)]) pool.push_back(static_cast<PlayerId>(p));

  CompletionOutcome comp = completion(oracle, pool, run.remainder, run.victim_target);
  run.victims = std::move(comp.victims);
  run.degenerate_pool = comp.degenerate_pool;
  run.completion_allocation = std::move(comp.allocation);
  run.survivor_summary =
      certify_summary(instance, run.completion_allocation, Rat(1) / instance.n());

  run.ledger = oracle.ledger();
  return run;
}

double theorem2_success_floor(const DesignatedParams& params) {
  return 1.0 - std::pow(rat_to_double(params.eps_prime()), rat_to_double(params.t));
}

}  // namespace subcake
