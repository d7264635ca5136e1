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

#include "subcake/oracle.hpp"

#include <stdexcept>

namespace subcake {

void QueryLedger::add(const std::string& phase, QueryKind kind, std::uint64_t count) {
  auto& c = by_phase_[phase];
  if (kind == QueryKind::Cut)
    c.cuts += count;
  else
    c.evals += count;
}

PhaseCounts QueryLedger::phase(const std::string& name) const {
  const auto it = by_phase_.find(name);
  return it == by_phase_.end() ? PhaseCounts{} : it->second;
}

PhaseCounts QueryLedger::total() const {
  PhaseCounts t;
  for (const auto& [_, c] : by_phase_) {
    t.cuts += c.cuts;
    t.evals += c.evals;
  }
  return t;
}

CutAnswer Oracle::cut(const Interval& piece, PlayerId p, const Rat& alpha) {
  ledger_.add(phase_, QueryKind::Cut, 1);
  return instance_->valuation(p).cut_point(piece, alpha);
}

Rat Oracle::eval(const Interval& piece, PlayerId p, const Rat& x) {
  if (!piece.contains(x))
    throw std::invalid_argument("eval: point lies outside the queried piece");
  ledger_.add(phase_, QueryKind::Eval, 1);
  return instance_->valuation(p).value(Interval(piece.lo, x));
}

Rat Oracle::eval_all(const Interval& piece, PlayerId p) {
  ledger_.add(phase_, QueryKind::Eval, 1);
  return instance_->valuation(p).value(piece);
}

CutAnswer Oracle::cut(const PieceSet& piece, PlayerId p, const Rat& alpha) {
  if (piece.empty()) throw std::invalid_argument("cut: empty piece set");
  ledger_.add(phase_, QueryKind::Cut, piece.fragment_count());
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("cut: alpha must lie in [0,1]");
  const Valuation& v = instance_->valuation(p);
  Rat before(0);
  for (const auto& frag : piece.fragments()) {
    const Rat mass = v.value(frag);
    if (alpha <= before + mass) return v.cut_point(frag, alpha - before);
    before += mass;
  }
  return std::nullopt;  // alpha exceeds the piece's total mass
}

Rat Oracle::eval(const PieceSet& piece, PlayerId p, const Rat& x) {
  if (piece.empty()) throw std::invalid_argument("eval: empty piece set");
  ledger_.add(phase_, QueryKind::Eval, piece.fragment_count());
  const Valuation& v = instance_->valuation(p);
  Rat sum(0);
  for (const auto& frag : piece.fragments()) {
    if (frag.hi <= x) {
      sum += v.value(frag);
    } else if (frag.lo < x) {
      sum += v.value(Interval(frag.lo, x));
    }
  }
  return sum;
}

Rat Oracle::eval_all(const PieceSet& piece, PlayerId p) {
  if (piece.empty()) throw std::invalid_argument("eval: empty piece set");
  ledger_.add(phase_, QueryKind::Eval, piece.fragment_count());
  return instance_->valuation(p).value(piece);
}

}  // namespace subcake
