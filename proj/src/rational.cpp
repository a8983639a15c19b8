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

#include "groupcrit/rational.hpp"

#include <regex>

#include "groupcrit/error.hpp"

namespace groupcrit {

std::string to_fraction(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

std::string to_decimal(const Rational& r, int places) {
  BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = 1;
  for (int k = 0; k < places; ++k) scale *= 10;
  const BigInt scaled = (num * scale * 2 + den) / (den * 2);
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  if (static_cast<int>(frac.size()) < places) frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (places > 0) out += "." + frac;
  return out;
}

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) throw Error("not a rational number: '" + text + "'");
  const BigInt num(match[1].str());
  const BigInt den(match[2].matched ? match[2].str() : std::string("1"));
  if (den == 0) throw Error("zero denominator in '" + text + "'");
  return Rational(num, den);
}

BigInt factorial(int k) {
  BigInt out = 1;
  for (int j = 2; j <= k; ++j) out *= j;
  return out;
}

}  // namespace groupcrit
