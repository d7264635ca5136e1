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

#include "subcake/valuation.hpp"

#include <algorithm>
#include <stdexcept>

namespace subcake {

Valuation::Valuation(std::vector<Rat> breakpoints, std::vector<Rat> densities) {
  if (breakpoints.size() < 2 || densities.size() + 1 != breakpoints.size())
    throw std::invalid_argument("valuation: need k+1 breakpoints for k densities");
  if (breakpoints.front() != 0 || breakpoints.back() != 1)
    throw std::invalid_argument("valuation: breakpoints must span [0,1]");

  auto data = std::make_shared<Data>();
  data->breakpoints.push_back(breakpoints.front());
  for (std::size_t i = 0; i < densities.size(); ++i) {
    if (breakpoints[i + 1] < breakpoints[i])
      throw std::invalid_argument("valuation: breakpoints must be ascending");
    if (densities[i] < 0)
      throw std::invalid_argument("valuation: densities must be nonnegative");
    if (breakpoints[i + 1] == breakpoints[i]) continue;  // zero-width segment
    data->breakpoints.push_back(breakpoints[i + 1]);
    data->densities.push_back(densities[i]);
  }

  data->prefix.resize(data->breakpoints.size());
  data->prefix[0] = 0;
  for (std::size_t i = 0; i < data->densities.size(); ++i)
    data->prefix[i + 1] =
        data->prefix[i] + data->densities[i] * (data->breakpoints[i + 1] - data->breakpoints[i]);
  if (data->prefix.back() != 1)
    throw std::invalid_argument("valuation: total mass must be exactly 1");
  data_ = std::move(data);
}

Valuation Valuation::uniform() {
  return Valuation({Rat(0), Rat(1)}, {Rat(1)});
}

Rat Valuation::prefix_value(const Rat& x) const {
  const auto& bp = data_->breakpoints;
  const auto& pm = data_->prefix;
  if (x <= 0) return Rat(0);
  if (x >= 1) return Rat(1);
  // last breakpoint <= x
  const auto it = std::upper_bound(bp.begin(), bp.end(), x);
  const std::size_t seg = static_cast<std::size_t>(it - bp.begin()) - 1;
  if (seg + 1 >= bp.size()) return pm.back();
  return pm[seg] + data_->densities[seg] * (x - bp[seg]);
}

Rat Valuation::value(const Interval& piece) const {
  return prefix_value(piece.hi) - prefix_value(piece.lo);
}

Rat Valuation::value(const PieceSet& piece) const {
  Rat sum(0);
  for (const auto& iv : piece.fragments()) sum += value(iv);
  return sum;
}

std::optional<Point> Valuation::cut_point(const Interval& piece, const Rat& alpha) const {
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("cut: alpha must lie in [0,1]");
  if (alpha == 0) return piece.lo;  // smallest point reaching zero mass

  const Rat target = prefix_value(piece.lo) + alpha;
  if (prefix_value(piece.hi) < target) return std::nullopt;

  const auto& pm = data_->prefix;
  const auto& bp = data_->breakpoints;
  // first breakpoint whose cumulative mass reaches the target
  const auto it = std::lower_bound(pm.begin(), pm.end(), target);
  const std::size_t j = static_cast<std::size_t>(it - pm.begin());
  if (j == 0) return bp.front();
  // target was reached inside segment j-1 (its density is positive there)
  return bp[j - 1] + (target - pm[j - 1]) / data_->densities[j - 1];
}

Instance::Instance(std::vector<Valuation> valuations) : valuations_(std::move(valuations)) {
  if (valuations_.empty()) throw std::invalid_argument("instance: need at least one player");
}

}  // namespace subcake
