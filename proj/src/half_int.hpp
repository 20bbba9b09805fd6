/*
 * Copyright 2026 the spindiff authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SPINDIFF_HALF_INT_HPP
#define SPINDIFF_HALF_INT_HPP

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace spindiff {

/// Half-integer quantum number (S, j, m, tau) stored exactly as twice its value.
/// All lattice indexing in the library is done in twice-value units so that
/// grids of half-integers stay integer-valued.
class HalfInt {
public:
  constexpr HalfInt() : twice_(0) {}
  constexpr explicit HalfInt(long twice_value) : twice_(twice_value) {}

  static constexpr HalfInt from_int(long v) { return HalfInt(2 * v); }

  constexpr long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_negative() const { return twice_ < 0; }

  double value() const { return 0.5 * static_cast<double>(twice_); }

  /// x(x+1) as an exact rational, e.g. S(S+1) for half-integer S.
  mpq_class times_plus_one() const {
    mpq_class r(twice_ * (twice_ + 2), 4);
    r.canonicalize();
    return r;
  }

  double times_plus_one_d() const {
    return 0.25 * static_cast<double>(twice_) * static_cast<double>(twice_ + 2);
  }

  HalfInt abs() const { return HalfInt(std::labs(twice_)); }

  /// "3/2" for half-integers, "2" for integers.
  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.twice_); }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

private:
  long twice_;
};

/// Parses "k" or "k/2" (k a positive integer) into a spin magnitude.
/// Anything else, including zero and floats, is rejected.
inline HalfInt parse_spin(const std::string& text) {
  std::size_t pos = 0;
  long k = 0;
  try {
    k = std::stol(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid spin string '" + text + "': expected k or k/2");
  }
  if (k <= 0) throw std::invalid_argument("invalid spin string '" + text + "': spin must be positive");
  if (pos == text.size()) return HalfInt(2 * k);
  if (text.substr(pos) == "/2") return HalfInt(k);
  throw std::invalid_argument("invalid spin string '" + text + "': expected k or k/2");
}

}  // namespace spindiff

#endif
