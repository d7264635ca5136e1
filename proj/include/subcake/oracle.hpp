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

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "subcake/valuation.hpp"

namespace subcake {

enum class QueryKind { Cut, Eval };

struct PhaseCounts {
  std::uint64_t cuts = 0;
  std::uint64_t evals = 0;

  std::uint64_t total() const { return cuts + evals; }
  friend bool operator==(const PhaseCounts&, const PhaseCounts&) = default;
};

/// Monotone per-phase query counters. A query over a piece of k fragments
/// charges exactly k, even when the answer is found in the first fragment.
class QueryLedger {
 public:
  void add(const std::string& phase, QueryKind kind, std::uint64_t count);

  const std::map<std::string, PhaseCounts>& by_phase() const { return by_phase_; }
  PhaseCounts phase(const std::string& name) const;
  PhaseCounts total() const;

 private:
  std::map<std::string, PhaseCounts> by_phase_;
};

/// Answer of a Cut query; empty means the piece does not hold alpha mass
/// (the protocol-visible "no such point" reply).
using CutAnswer = std::optional<Point>;

/// Answers Cut/Eval queries against an instance and counts them. One oracle
/// serves one protocol run; distinct runs use distinct oracles.
class Oracle {
 public:
  explicit Oracle(const Instance& instance) : instance_(&instance) {}

  const Instance& instance() const { return *instance_; }
  std::int64_t n() const { return instance_->n(); }

  void set_phase(std::string phase) { phase_ = std::move(phase); }
  const std::string& phase() const { return phase_; }
  const QueryLedger& ledger() const { return ledger_; }

  /// Cut(D, p, alpha): smallest x in D with mu_p([D.lo, x]) == alpha.
  CutAnswer cut(const Interval& piece, PlayerId p, const Rat& alpha);

  /// Eval(D, p, x): mu_p([D.lo, x]); x must lie in D.
  Rat eval(const Interval& piece, PlayerId p, const Rat& x);

  /// Eval(D, p): whole-piece form, equivalent to x = D.hi.
  Rat eval_all(const Interval& piece, PlayerId p);

  /// Fragmented forms: the piece is treated as one virtual cake (fragments
  /// concatenated in ascending order) and the ledger is charged once per
  /// fragment. Cut returns a real point inside some fragment.
  CutAnswer cut(const PieceSet& piece, PlayerId p, const Rat& alpha);
  Rat eval(const PieceSet& piece, PlayerId p, const Rat& x);
  Rat eval_all(const PieceSet& piece, PlayerId p);

 private:
  const Instance* instance_;
  QueryLedger ledger_;
  std::string phase_ = "default";
};

}  // namespace subcake
