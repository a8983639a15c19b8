// Copyright 2026 The groupcrit Authors
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

#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace groupcrit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "num/den" in lowest terms; integers print as "k/1".
std::string to_fraction(const Rational& r);

/// Fixed-point rendering rounded half away from zero, e.g. "0.333333".
std::string to_decimal(const Rational& r, int places = 6);

/// Accepts "3", "-3", "3/4". Throws Error on anything else or a zero denominator.
Rational parse_rational(const std::string& text);

BigInt factorial(int k);

}  // namespace groupcrit
