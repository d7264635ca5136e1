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

#include "subcake/rational.hpp"

#include <limits>
#include <stdexcept>

namespace subcake {

namespace {

bool valid_number(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

std::int64_t mpz_to_i64(const mpz_class& z) {
  if (!z.fits_slong_p())
    throw std::overflow_error("rational out of int64 range: " + z.get_str());
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_from_string(const std::string& text) {
  std::string s = text;
  // strip surrounding whitespace
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("empty rational");
  s = s.substr(b, e - b + 1);

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!valid_number(num) || !valid_number(den))
      throw std::invalid_argument("malformed rational: " + text);
    Rat r{mpz_class(num), mpz_class(den)};
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
  }

  if (const auto dot = s.find('.'); dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    bool negative = false;
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
      negative = head[0] == '-';
      head = head.substr(1);
    }
    if (head.empty()) head = "0";
    if (frac.empty() || !valid_number(head) || !valid_number(frac))
      throw std::invalid_argument("malformed decimal: " + text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class units = mpz_class(head) * scale + mpz_class(frac);
    Rat r(units, scale);
    r.canonicalize();
    return negative ? Rat(-r) : r;
  }

  if (!valid_number(s)) throw std::invalid_argument("malformed rational: " + text);
  return Rat(mpz_class(s));
}

std::string rat_to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double rat_to_double(const Rat& value) { return value.get_d(); }

std::int64_t rat_ceil_i64(const Rat& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return mpz_to_i64(q);
}

std::int64_t rat_floor_i64(const Rat& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return mpz_to_i64(q);
}

Rat half_pow(unsigned k) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  Rat r(1, den);
  r.canonicalize();
  return r;
}

}  // namespace subcake
