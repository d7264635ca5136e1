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

#include "subcake/cake.hpp"

#include <algorithm>
#include <stdexcept>

namespace subcake {

Interval::Interval() : lo(0), hi(0) {}

Interval::Interval(Point lo_in, Point hi_in) : lo(std::move(lo_in)), hi(std::move(hi_in)) {
  if (lo < 0 || hi > 1 || lo > hi)
    throw std::invalid_argument("interval must satisfy 0 <= lo <= hi <= 1");
}

Interval unit_interval() { return Interval(Rat(0), Rat(1)); }

PieceSet::PieceSet(Interval single) {
  if (!single.is_empty()) parts_.push_back(std::move(single));
}

PieceSet PieceSet::from_intervals(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& iv) { return iv.is_empty(); });
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i].lo < parts[i - 1].hi)
      throw std::invalid_argument("piece set fragments overlap");
  PieceSet s;
  s.parts_ = std::move(parts);
  return s;
}

PieceSet PieceSet::unit() { return PieceSet(unit_interval()); }

Rat PieceSet::total_length() const {
  Rat sum(0);
  for (const auto& iv : parts_) sum += iv.length();
  return sum;
}

Point PieceSet::lo() const {
  if (parts_.empty()) throw std::logic_error("lo() on empty piece set");
  return parts_.front().lo;
}

Point PieceSet::hi() const {
  if (parts_.empty()) throw std::logic_error("hi() on empty piece set");
  return parts_.back().hi;
}

std::pair<PieceSet, PieceSet> PieceSet::split_at(const Point& x) const {
  std::vector<Interval> left, right;
  for (const auto& iv : parts_) {
    if (iv.hi <= x) {
      left.push_back(iv);
    } else if (iv.lo >= x) {
      right.push_back(iv);
    } else {
      left.emplace_back(iv.lo, x);
      right.emplace_back(x, iv.hi);
    }
  }
  PieceSet l, r;
  l.parts_ = std::move(left);
  r.parts_ = std::move(right);
  return {std::move(l), std::move(r)};
}

PieceSet PieceSet::set_union(const PieceSet& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  std::sort(all.begin(), all.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  std::vector<Interval> merged;
  for (auto& iv : all) {
    if (iv.is_empty()) continue;
    if (!merged.empty() && iv.lo < merged.back().hi) {
      if (iv.hi > merged.back().hi) merged.back().hi = iv.hi;
    } else {
      merged.push_back(std::move(iv));
    }
  }
  PieceSet s;
  s.parts_ = std::move(merged);
  return s;
}

PieceSet PieceSet::complement_in_unit() const {
  std::vector<Interval> gaps;
  Rat cursor(0);
  for (const auto& iv : parts_) {
    if (cursor < iv.lo) gaps.emplace_back(cursor, iv.lo);
    if (iv.hi > cursor) cursor = iv.hi;
  }
  if (cursor < 1) gaps.emplace_back(cursor, Rat(1));
  PieceSet s;
  s.parts_ = std::move(gaps);
  return s;
}

bool PieceSet::overlaps_positively(const PieceSet& other) const {
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const Interval& a = parts_[i];
    const Interval& b = other.parts_[j];
    const Rat lo = std::max(a.lo, b.lo);
    const Rat hi = std::min(a.hi, b.hi);
    if (lo < hi) return true;
    if (a.hi <= b.hi)
      ++i;
    else
      ++j;
  }
  return false;
}

bool PieceSet::subset_of(const PieceSet& other) const {
  // Every fragment must be covered by consecutive fragments of `other`
  // (touching joins count as coverage).
  for (const auto& a : parts_) {
    Rat pos = a.lo;
    for (const auto& b : other.parts_) {
      if (b.hi <= pos) continue;
      if (b.lo > pos) break;  // gap before pos
      pos = std::min(a.hi, b.hi);
      if (pos == a.hi) break;
    }
    if (pos != a.hi) return false;
  }
  return true;
}

bool pairwise_disjoint(const std::vector<PieceSet>& pieces) {
  struct Edge {
    Rat lo, hi;
  };
  std::vector<Edge> all;
  for (const auto& p : pieces)
    for (const auto& iv : p.fragments()) all.push_back({iv.lo, iv.hi});
  std::sort(all.begin(), all.end(),
            [](const Edge& a, const Edge& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < all.size(); ++i)
    if (all[i].lo < all[i - 1].hi) return false;
  return true;
}

}  // namespace subcake
