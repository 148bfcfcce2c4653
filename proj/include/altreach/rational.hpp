// Copyright 2026 the altreach authors
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

#ifndef ALTREACH_RATIONAL_HPP
#define ALTREACH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace altreach {

// All weights and coefficients are exact rationals; no floating point
// anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Prints in lowest terms as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

/// Parses "p", "p/q" or "-p/q" with integral p, q and q > 0.
std::optional<Rat> parse_rational(std::string_view text);

/// lcm of the denominators of a range of rationals; 1 for an empty range.
template <typename Range>
Int denominator_lcm(const Range& values) {
  Int l = 1;
  for (const Rat& r : values) {
    Int d = denominator(r);
    l = lcm(l, d);
  }
  return l;
}

}  // namespace altreach

#endif  // ALTREACH_RATIONAL_HPP
