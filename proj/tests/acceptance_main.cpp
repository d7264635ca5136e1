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

// End-to-end verification suite. Each criterion prints one pass/fail line;
// the exit code is the number of failed criteria.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>
#include <vector>

#include "subcake/instance_io.hpp"
#include "subcake/lemma_checks.hpp"
#include "subcake/suite.hpp"

using namespace subcake;

namespace {

Rat R(const char* s) { return rat_from_string(s); }

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

// Trials are embarrassingly parallel: results are keyed by trial index and
// every trial derives its own seed, so scheduling cannot change outcomes.
void parallel_trials(std::int64_t count, const std::function<void(std::int64_t)>& body) {
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 4u));
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      for (std::int64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  for (auto& t : pool) t.join();
}

std::vector<PlayerId> all_players(const Instance& instance) {
  std::vector<PlayerId> ids;
  for (std::int64_t p = 0; p < instance.n(); ++p) ids.push_back(static_cast<PlayerId>(p));
  return ids;
}

// ---------------------------------------------------------------------------
// 1. Proportional division is exact on seeded heterogeneous instances.
bool criterion1(std::string& detail) {
  Stopwatch watch;
  Rng seeds(101);
  std::int64_t violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::BlockRandom;
    spec.n = 2 + static_cast<std::int64_t>(seeds.below(63));  // 2..64
    spec.num_blocks = 6;
    spec.seed = seeds.next();
    const Instance instance = generate(spec);
    Oracle oracle(instance);
    const Allocation a = dc(oracle, all_players(instance), PieceSet::unit());
    for (const auto& [p, piece] : a.assignments)
      if (measure(instance.valuation(p), piece) < Rat(1) / instance.n()) ++violations;
  }
  const double secs = watch.seconds();
  std::ostringstream out;
  out << "200 instances, violations=" << violations << ", " << secs << "s (limit 10s)";
  detail = out.str();
  return violations == 0 && secs < 10.0;
}

// ---------------------------------------------------------------------------
// 2. Divide-and-conquer query complexity: <= 2n*ceil(log2 n), and <= k times
//    that on a k-fragment cake.
bool criterion2(std::string& detail) {
  Rng seeds(202);
  for (std::int64_t n = 2; n <= 1024; n *= 2) {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::BlockRandom;
    spec.n = n;
    spec.num_blocks = 4;
    spec.seed = seeds.next();
    const Instance instance = generate(spec);
    Oracle oracle(instance);
    dc(oracle, all_players(instance), PieceSet::unit());
    const std::uint64_t bound =
        2 * static_cast<std::uint64_t>(n) *
        static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(n))));
    if (oracle.ledger().total().total() > bound) {
      detail = "contiguous bound violated at n=" + std::to_string(n);
      return false;
    }
  }
  // odd sizes exercise the ceil in the bound
  for (std::int64_t n : {3, 5, 37, 637, 1023}) {
    const Instance instance(
        std::vector<Valuation>(static_cast<std::size_t>(n), Valuation::uniform()));
    Oracle oracle(instance);
    dc(oracle, all_players(instance), PieceSet::unit());
    const std::uint64_t bound =
        2 * static_cast<std::uint64_t>(n) *
        static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(n))));
    if (oracle.ledger().total().total() > bound) {
      detail = "contiguous bound violated at odd n=" + std::to_string(n);
      return false;
    }
  }
  // fragmented cakes: k fragments charge at most k times the contiguous bound
  for (int k = 2; k <= 4; ++k) {
    const std::int64_t n = 64;
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::BlockRandom;
    spec.n = n;
    spec.num_blocks = 6;
    spec.seed = seeds.next();
    const Instance instance = generate(spec);
    std::vector<Interval> parts;
    for (int i = 0; i < k; ++i)
      parts.emplace_back(make_rat(2 * i, 2 * k), make_rat(2 * i + 1, 2 * k));
    Oracle oracle(instance);
    dc(oracle, all_players(instance), PieceSet::from_intervals(std::move(parts)));
    const std::uint64_t bound =
        static_cast<std::uint64_t>(k) * 2 * static_cast<std::uint64_t>(n) *
        static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(n))));
    if (oracle.ledger().total().total() > bound) {
      detail = "fragmented bound violated at k=" + std::to_string(k);
      return false;
    }
  }
  detail = "n in {2..1024} doubling plus odd sizes, k in {2,3,4}";
  return true;
}

// ---------------------------------------------------------------------------
// 3. Sublinearity witness: the preassign budget depends on (r, eps, t) only,
//    while completion grows like n log n.
bool criterion3(std::string& detail) {
  DcAdapter strategy;
  Theorem1Options options;
  options.charge_duplicates = true;  // per-draw accounting: ceil(t r/eps) cuts exactly
  options.check_lemma3_premise = false;

  const std::vector<std::int64_t> sizes{12700, 127000, 1270000};
  std::vector<std::uint64_t> preassign, completion;
  for (std::int64_t n : sizes) {
    const Instance instance(
        std::vector<Valuation>(static_cast<std::size_t>(n), Valuation::uniform()));
    UndesignatedParams params;
    params.n = n;
    params.r = 10;
    params.eps = R("1/10");
    params.t = R("2");
    const Theorem1Run run = run_theorem1(instance, params, 33, strategy, options);
    if (run.status != PreassignStatus::Success) {
      detail = "pipeline failed at n=" + std::to_string(n);
      return false;
    }
    preassign.push_back(run.ledger.phase("preassign").total());
    completion.push_back(run.ledger.phase("completion").total());
  }

  const bool preassign_flat = preassign[0] == preassign[1] && preassign[1] == preassign[2];
  bool completion_ok = completion[0] < completion[1] && completion[1] < completion[2];
  const double base = static_cast<double>(sizes[0]) * std::log2(static_cast<double>(sizes[0]));
  for (std::size_t i = 1; i < sizes.size() && completion_ok; ++i) {
    const double model =
        static_cast<double>(sizes[i]) * std::log2(static_cast<double>(sizes[i])) / base;
    const double ratio =
        static_cast<double>(completion[i]) / static_cast<double>(completion[0]);
    completion_ok = ratio >= 0.5 * model && ratio <= 4.0 * model;
  }

  std::ostringstream out;
  out << "preassign " << preassign[0] << "/" << preassign[1] << "/" << preassign[2]
      << ", completion " << completion[0] << "/" << completion[1] << "/" << completion[2];
  detail = out.str();
  return preassign_flat && completion_ok;
}

// ---------------------------------------------------------------------------
// 4. Statistical floor of the undesignated pipeline over 300 seeds.
bool criterion4(std::string& detail) {
  Stopwatch watch;
  const std::int64_t trials = 300;
  UndesignatedParams params;
  params.n = 12700;
  params.r = 10;
  params.eps = R("1/10");
  params.t = R("2");

  std::vector<int> success(static_cast<std::size_t>(trials), 0);
  parallel_trials(trials, [&](std::int64_t i) {
    const std::uint64_t trial_seed = mix_seed(404, static_cast<std::uint64_t>(i));
    GeneratorSpec spec;
    spec.n = params.n;
    spec.seed = mix_seed(trial_seed, 1);
    if (i % 2 == 0) {
      spec.kind = GeneratorSpec::Kind::BlockRandom;
      spec.num_blocks = 8;
    } else {
      spec.kind = GeneratorSpec::Kind::Adversarial;
      spec.profile = "block-spike-mix";
      spec.num_blocks = 8;
    }
    const Instance instance = generate(spec);
    DcAdapter strategy;
    Theorem1Options options;
    options.check_lemma3_premise = false;
    const Theorem1Run run =
        run_theorem1(instance, params, mix_seed(trial_seed, 2), strategy, options);
    const bool ok = run.status == PreassignStatus::Success &&
                    run.preassign_certificate.all_fair &&
                    static_cast<std::int64_t>(run.victims.size()) == params.victim_target() &&
                    run.survivor_summary.all_fair();
    success[static_cast<std::size_t>(i)] = ok ? 1 : 0;
  });

  std::int64_t successes = 0;
  for (int s : success) successes += s;
  const double rate = static_cast<double>(successes) / static_cast<double>(trials);
  const double floor = theorem1_success_floor(params, /*strategy_failure_free=*/true);
  const double required = floor - 3.0 * binomial_sigma(floor, trials);
  const double secs = watch.seconds();

  std::ostringstream out;
  out << "empirical rate " << rate << " (floor " << floor << ", required " << required << "), "
      << secs << "s (limit 300s)";
  detail = out.str();
  return rate >= required && secs < 300.0;
}

// ---------------------------------------------------------------------------
// 5. Sampling-bound Monte Carlo at the published parameter point.
bool criterion5(std::string& detail) {
  Stopwatch watch;
  SamplingLemmaParams params;
  params.n = 127000;
  params.eps = R("1/5");
  params.s = R("127");
  params.t = R("2");
  params.r = 200;

  Rng rng(505);
  const Lemma1Result result = check_lemma1(params, 1000, rng);
  const double bound = rat_to_double(result.bound);  // 0.99483872
  const double required = bound - 3.0 * binomial_sigma(bound, 1000);
  const double secs = watch.seconds();

  std::ostringstream out;
  out << "frequency " << result.frequency << " vs required " << required << " (bound " << bound
      << "), " << secs << "s (limit 30s)";
  detail = out.str();
  return result.frequency >= required && secs < 30.0;
}

// ---------------------------------------------------------------------------
// 6. Condense halving and median properties over 500 randomized calls.
bool criterion6(std::string& detail) {
  Rng rng(606);
  std::int64_t halving_violations = 0, median_violations = 0;
  for (int iter = 0; iter < 500; ++iter) {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::BlockRandom;
    spec.n = 3 + static_cast<std::int64_t>(rng.below(10));
    spec.num_blocks = 6;
    spec.seed = rng.next();
    const Instance instance = generate(spec);
    Oracle oracle(instance);

    const Rat a = make_rat(static_cast<long>(rng.below(96)), 128);
    const Rat b = a + make_rat(static_cast<long>(1 + rng.below(31)), 128);
    const Interval piece(a, b);
    const PlayerId p = static_cast<PlayerId>(rng.below(static_cast<std::uint64_t>(spec.n)));
    std::vector<PlayerId> approvers;
    const std::size_t count = 1 + rng.below(12);
    for (std::size_t i = 0; i < count; ++i)
      approvers.push_back(
          static_cast<PlayerId>(rng.below(static_cast<std::uint64_t>(spec.n))));

    const Rat before = measure(instance.valuation(p), piece);
    const CondenseResult r = condense(oracle, p, approvers, piece);
    if (measure(instance.valuation(p), r.piece) * 2 < before) ++halving_violations;

    std::vector<Rat> cuts;
    for (PlayerId q : approvers) {
      const Rat beta = measure(instance.valuation(q), piece);
      cuts.push_back(*instance.valuation(q).cut_point(piece, beta / 2));
    }
    std::ptrdiff_t at_most = 0, at_least = 0;
    for (const Rat& x : cuts) {
      if (x <= r.median_cut) ++at_most;
      if (x >= r.median_cut) ++at_least;
    }
    const auto half = static_cast<std::ptrdiff_t>((cuts.size() + 1) / 2);
    if (at_most < half || at_least < half) ++median_violations;
  }
  std::ostringstream out;
  out << "500 calls, halving violations=" << halving_violations
      << ", median violations=" << median_violations;
  detail = out.str();
  return halving_violations == 0 && median_violations == 0;
}

// ---------------------------------------------------------------------------
// 7. Deposit politeness at the desk profile. The nominal-constant bound
//    needs more samples than any runnable population, so the check is the
//    property-based 90% substitute at sigma = 1/64.
bool criterion7(std::string& detail) {
  const std::int64_t trials = 100;
  DesignatedParams params;
  params.designated = {0};
  params.n = 5000;
  params.eps = R("1/5");  // r = 1, so eps' = 1/5
  params.t = R("1");
  params.constant_scale = R("1/64");

  std::vector<int> polite(static_cast<std::size_t>(trials), 0);
  parallel_trials(trials, [&](std::int64_t i) {
    GeneratorSpec spec;
    spec.n = params.n;
    if (i % 2 == 0) {
      spec.kind = GeneratorSpec::Kind::Uniform;
    } else {
      spec.kind = GeneratorSpec::Kind::Adversarial;
      spec.profile = "left-deposit-mix";
    }
    const Instance instance = generate(spec);
    Oracle oracle(instance);
    Rng rng(mix_seed(707, static_cast<std::uint64_t>(i)));
    const DepositResult result = deposit(oracle, 0, params, rng);
    const auto count =
        approvers(instance, params.eps_prime(), PieceSet(result.piece)).size();
    polite[static_cast<std::size_t>(i)] =
        Rat(static_cast<long>(count)) <= params.eps_prime() * params.n ? 1 : 0;
  });

  std::int64_t polite_count = 0;
  for (int s : polite) polite_count += s;
  std::ostringstream out;
  out << "polite in " << polite_count << "/100 deposits (need >= 90)";
  detail = out.str();
  return polite_count >= 90;
}

// ---------------------------------------------------------------------------
// 8. Designated pipeline at the desk profile; the nominal 1/n fairness
//    regime is out of reach for any runnable n, so the per-trial exact bound
//    is (1/2)^(condense calls) / k, with the regime predicate checked as a
//    pure function.
bool criterion8(std::string& detail) {
  const std::int64_t trials = 100;
  DesignatedParams params;
  params.designated = {0, 1, 2};
  params.n = 3000;
  params.eps = R("367/1000");  // desk-rational stand-in for 1/e, <= 1/e
  params.t = R("1");
  params.constant_scale = R("1/64");

  std::vector<int> disjoint(static_cast<std::size_t>(trials), 0);
  std::vector<int> victims_on_target(static_cast<std::size_t>(trials), 0);
  std::vector<int> survivors_fair(static_cast<std::size_t>(trials), 0);
  std::vector<int> halving(static_cast<std::size_t>(trials), 0);

  GeneratorSpec spec;
  spec.kind = GeneratorSpec::Kind::Adversarial;
  spec.profile = "designated-disjoint-3";
  spec.n = params.n;
  const Instance instance = generate(spec);

  parallel_trials(trials, [&](std::int64_t i) {
    const Theorem2Run run =
        run_theorem2(instance, params, mix_seed(808, static_cast<std::uint64_t>(i)));
    disjoint[static_cast<std::size_t>(i)] = run.designated_disjoint ? 1 : 0;
    victims_on_target[static_cast<std::size_t>(i)] =
        static_cast<std::int64_t>(run.victims.size()) == run.victim_target ? 1 : 0;
    survivors_fair[static_cast<std::size_t>(i)] = run.survivor_summary.all_fair() ? 1 : 0;
    halving[static_cast<std::size_t>(i)] = run.designated_all_fair_scaled ? 1 : 0;
  });

  std::int64_t disjoint_count = 0, victims_count = 0, fair_count = 0, halving_count = 0;
  for (std::int64_t i = 0; i < trials; ++i) {
    disjoint_count += disjoint[static_cast<std::size_t>(i)];
    victims_count += victims_on_target[static_cast<std::size_t>(i)];
    fair_count += survivors_fair[static_cast<std::size_t>(i)];
    halving_count += halving[static_cast<std::size_t>(i)];
  }

  // the fairness regime predicate is exercised as a pure function
  const bool regime_ok = designated_fairness_regime(1, R("367/1000"), 3e21) &&
                         !designated_fairness_regime(1, R("367/1000"), 2e21) &&
                         !designated_fairness_regime(3, R("367/1000"), 9e18);

  std::ostringstream out;
  out << "disjoint " << disjoint_count << "/100, victims-on-target " << victims_count
      << "/100, survivors fair " << fair_count << "/100 (need >= 90), halving-exact "
      << halving_count << "/100, regime predicate " << (regime_ok ? "ok" : "bad");
  detail = out.str();
  return disjoint_count == trials && victims_count == trials && fair_count >= 90 &&
         halving_count == trials && regime_ok;
}

// ---------------------------------------------------------------------------
// 9. Constant-factor failure-bound arithmetic, exact.
bool criterion9(std::string& detail) {
  const bool c128 = approx_fair_failure_bound(R("128")) == R("83/6144") &&
                    approx_fair_failure_bound(R("128")) < R("1/64");
  const bool c64 = approx_fair_failure_bound(R("64")) == R("25/256") &&
                   approx_fair_failure_bound(R("64")) <= R("1/8") &&
                   make_rat(512, 4096) == R("1/8");
  detail = "failure_bound(128) = 83/6144 < 1/64; failure_bound(64) = 25/256 <= 2^9/64^2";
  return c128 && c64;
}

// ---------------------------------------------------------------------------
// 10. Fragment accounting: one query over k fragments charges exactly k.
bool criterion10(std::string& detail) {
  Rng rng(1010);
  for (int k = 1; k <= 8; ++k) {
    for (int iter = 0; iter < 8; ++iter) {
      std::vector<Interval> parts;
      for (int i = 0; i < k; ++i)
        parts.emplace_back(make_rat(2 * i, 2 * k), make_rat(2 * i + 1, 2 * k));
      const PieceSet piece = PieceSet::from_intervals(std::move(parts));

      GeneratorSpec spec;
      spec.kind = GeneratorSpec::Kind::BlockRandom;
      spec.n = 2;
      spec.num_blocks = 6;
      spec.seed = rng.next();
      const Instance instance = generate(spec);
      Oracle oracle(instance);

      oracle.eval_all(piece, 0);
      if (oracle.ledger().total().evals != static_cast<std::uint64_t>(k)) {
        detail = "eval charge mismatch at k=" + std::to_string(k);
        return false;
      }
      const Rat mass = measure(instance.valuation(1), piece);
      oracle.cut(piece, 1, mass);
      if (oracle.ledger().total().cuts != static_cast<std::uint64_t>(k)) {
        detail = "cut charge mismatch at k=" + std::to_string(k);
        return false;
      }
    }
  }
  detail = "k in {1..8}, eval and cut, 8 random valuations each";
  return true;
}

// ---------------------------------------------------------------------------
// 11. Reproducibility: identical configs yield byte-identical reports.
bool criterion11(std::string& detail) {
  const json config = {
      {"master_seed", 1111},
      {"scenarios", json::array({
          {{"type", "dc"},
           {"generator", {{"kind", "BlockRandom"}, {"n", 24}, {"blocks", 6}}},
           {"trials", 5}},
          {{"type", "theorem1"},
           {"generator", {{"kind", "BlockRandom"}, {"n", 1270}, {"blocks", 4}}},
           {"r", 1}, {"eps", "1/10"}, {"t", "2"}, {"trials", 5},
           {"charge_duplicates", true}},
          {{"type", "theorem2"},
           {"generator",
            {{"kind", "Adversarial"}, {"n", 600}, {"profile", "designated-disjoint-2"}}},
           {"designated", {0, 1}}, {"eps", "1/3"}, {"t", "1"}, {"scale", "1/64"},
           {"trials", 3}},
          {{"type", "lemma1"},
           {"n", 2000}, {"eps", "1/4"}, {"s", "8"}, {"t", "3"}, {"r", 20},
           {"trials", 200}},
      })},
  };
  const SuiteResult a = run_suite(config);
  const SuiteResult b = run_suite(config);
  const bool identical = a.trial_reports.dump(2) == b.trial_reports.dump(2) &&
                         a.summary_csv == b.summary_csv && a.plot_tsv == b.plot_tsv;
  detail = identical ? "two runs, byte-identical JSON, CSV, and TSV"
                     : "reports differ between reruns";
  return identical && a.assertions_passed;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    bool (*run)(std::string&);
  };
  const std::vector<Criterion> criteria = {
      {1, "proportional division exact on 200 seeded instances", criterion1},
      {2, "divide-and-conquer query-count bounds", criterion2},
      {3, "preassign budget is n-independent; completion grows ~ n log n", criterion3},
      {4, "undesignated pipeline beats its statistical floor (300 seeds)", criterion4},
      {5, "sampling-bound Monte Carlo meets the closed-form floor", criterion5},
      {6, "condense halving and median properties (500 calls)", criterion6},
      {7, "deposit politeness at the desk profile (>= 90/100)", criterion7},
      {8, "designated pipeline end-to-end at the desk profile", criterion8},
      {9, "constant-factor failure-bound arithmetic", criterion9},
      {10, "fragmented queries charge exactly k per query", criterion10},
      {11, "suite reports are byte-identical across reruns", criterion11},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d: %s -- %s\n", ok ? "PASS" : "FAIL", criterion.id,
                criterion.label, detail.c_str());
    std::fflush(stdout);
  }
  if (failures == 0)
    std::printf("all %zu criteria passed\n", criteria.size());
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures;
}
