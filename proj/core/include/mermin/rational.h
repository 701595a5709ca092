// Copyright 2026 The Mermin Device Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MERMIN_RATIONAL_H
#define MERMIN_RATIONAL_H

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace mermin {

/// Exact probabilities and weights over arbitrary-precision integers, so sums
/// of user-supplied weights with unrelated denominators cannot overflow.
///
/// Compare against Rational(k), never a bare integer: with Boost 1.74 in C++20
/// mode the mixed operator== recurses through the rewritten candidates.
using Rational = boost::rational<boost::multiprecision::cpp_int>;

std::string to_string(const Rational &r);

/// Parses "p", "p/q" or a terminating decimal such as "0.375".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational &r);

}  // namespace mermin

#endif
