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
#include <string>

#include <gmpxx.h>

namespace subcake {

/// Exact rational number. All value computations in the library are exact;
/// doubles appear only in statistical summaries and sampling-size formulas.
using Rat = mpq_class;

/// Builds a canonical rational from a numerator/denominator pair.
Rat make_rat(long num, long den);

/// Parses "p/q", integer ("3"), or decimal ("0.25") forms. Exact.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& text);

/// Formats as "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rat& value);

double rat_to_double(const Rat& value);

/// ceil(value) and floor(value) as 64-bit integers. Throws std::overflow_error when
/// the result does not fit.
std::int64_t rat_ceil_i64(const Rat& value);
std::int64_t rat_floor_i64(const Rat& value);

/// (1/2)^k as an exact rational, k >= 0.
Rat half_pow(unsigned k);

}  // namespace subcake
