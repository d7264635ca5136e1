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

#include <utility>
#include <vector>

#include "subcake/rational.hpp"

namespace subcake {

/// A point on the unit cake: an exact rational in [0,1].
using Point = Rat;

/// Closed subinterval of the unit cake. lo == hi denotes a zero-measure
/// interval.
struct Interval {
  Point lo;
  Point hi;

  Interval();                       // [0,0]
  Interval(Point lo, Point hi);     // validates 0 <= lo <= hi <= 1

  Rat length() const { return hi - lo; }
  bool is_empty() const { return lo == hi; }
  bool contains(const Point& x) const { return lo <= x && x <= hi; }

  friend bool operator==(const Interval& a, const Interval& b) = default;
};

/// Returns the unit cake [0,1].
Interval unit_interval();

/// A finite union of disjoint intervals, sorted by left endpoint. Touching
/// endpoints are allowed and kept as separate fragments: fragment count is
/// part of the query-accounting contract and is never collapsed implicitly.
class PieceSet {
 public:
  PieceSet() = default;
  explicit PieceSet(Interval single);

  /// Normalizes: drops zero-measure intervals, sorts. Throws if any two
  /// inputs overlap with positive length.
  static PieceSet from_intervals(std::vector<Interval> parts);

  /// The whole cake as a single fragment.
  static PieceSet unit();

  const std::vector<Interval>& fragments() const { return parts_; }
  std::size_t fragment_count() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  Rat total_length() const;
  Point lo() const;  // leftmost point; piece must be nonempty
  Point hi() const;  // rightmost point; piece must be nonempty

  /// Splits at a real point x into (prefix, suffix) in fragment order.
  /// Fragments strictly left of x go to the prefix, a fragment containing x
  /// is divided, the rest go to the suffix.
  std::pair<PieceSet, PieceSet> split_at(const Point& x) const;

  /// Set union; positively overlapping fragments are merged, touching
  /// fragments are kept separate.
  PieceSet set_union(const PieceSet& other) const;

  /// [0,1] minus this piece (positive-length gaps only).
  PieceSet complement_in_unit() const;

  /// True when the two pieces share a set of positive length.
  bool overlaps_positively(const PieceSet& other) const;

  /// Measure-theoretic subset test (endpoint touching tolerated).
  bool subset_of(const PieceSet& other) const;

  friend bool operator==(const PieceSet& a, const PieceSet& b) = default;

 private:
  std::vector<Interval> parts_;
};

/// True when every pair of pieces is measure-disjoint.
bool pairwise_disjoint(const std::vector<PieceSet>& pieces);

}  // namespace subcake
