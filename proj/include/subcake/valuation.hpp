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
#include <memory>
#include <optional>
#include <vector>

#include "subcake/cake.hpp"

namespace subcake {

using PlayerId = std::int32_t;

/// A player's value measure: a normalized piecewise-constant density over
/// [0,1] with rational breakpoints. Immutable; copies share storage, so
/// instances with many identical players stay cheap.
class Valuation {
 public:
  /// breakpoints: ascending, first 0, last 1; densities: one nonnegative
  /// rational per consecutive pair. Total mass must be exactly 1.
  /// Zero-width segments are dropped. Throws std::invalid_argument.
  Valuation(std::vector<Rat> breakpoints, std::vector<Rat> densities);

  static Valuation uniform();

  const std::vector<Rat>& breakpoints() const { return data_->breakpoints; }
  const std::vector<Rat>& densities() const { return data_->densities; }

  /// mu([0,x]).
  Rat prefix_value(const Rat& x) const;

  /// mu of an interval / piece set. Exact ground-truth integration; this is
  /// the verification path and is never query-counted.
  Rat value(const Interval& piece) const;
  Rat value(const PieceSet& piece) const;

  /// Smallest x in [D.lo, D.hi] with mu([D.lo, x]) == alpha; the left
  /// endpoint of any zero-density plateau reaching alpha. nullopt when
  /// mu(D) < alpha.
  std::optional<Point> cut_point(const Interval& piece, const Rat& alpha) const;

 private:
  struct Data {
    std::vector<Rat> breakpoints;
    std::vector<Rat> densities;
    std::vector<Rat> prefix;  // prefix[i] = mu([0, breakpoints[i]])
  };
  std::shared_ptr<const Data> data_;
};

/// A cake-cutting instance: n players with normalized valuations,
/// ids 0..n-1.
class Instance {
 public:
  explicit Instance(std::vector<Valuation> valuations);

  std::int64_t n() const { return static_cast<std::int64_t>(valuations_.size()); }
  const Valuation& valuation(PlayerId p) const { return valuations_.at(static_cast<std::size_t>(p)); }
  const std::vector<Valuation>& valuations() const { return valuations_; }

 private:
  std::vector<Valuation> valuations_;
};

/// Ground-truth measure of a piece under a valuation (alias for
/// Valuation::value; reads better at call sites that contrast it with
/// query-counted oracle paths).
inline Rat measure(const Valuation& v, const PieceSet& piece) { return v.value(piece); }
inline Rat measure(const Valuation& v, const Interval& piece) { return v.value(piece); }

}  // namespace subcake
