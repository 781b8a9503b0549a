// Copyright 2026 The Authors.
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

#include "sbomatch/rational.h"

#include <cctype>
#include <string>
#include <string_view>

#include "sbomatch/errors.h"

namespace sbomatch {

namespace {

boost::multiprecision::cpp_int ParseInteger(std::string_view digits,
                                            std::string_view whole) {
  if (digits.empty()) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InputError("malformed rational '" + std::string(whole) + "'");
    }
  }
  return boost::multiprecision::cpp_int(std::string(digits));
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  boost::multiprecision::cpp_int num;
  boost::multiprecision::cpp_int den = 1;
  if (slash == std::string_view::npos) {
    num = ParseInteger(body, text);
  } else {
    num = ParseInteger(body.substr(0, slash), text);
    den = ParseInteger(body.substr(slash + 1), text);
    if (den == 0) {
      throw InputError("zero denominator in '" + std::string(text) + "'");
    }
  }
  Rational value(num, den);
  return negative ? Rational(-value) : value;
}

std::string ToString(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

long long Ceil(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  boost::multiprecision::cpp_int q = num / den;  // truncates toward zero
  if (q * den < num) ++q;
  return q.convert_to<long long>();
}

}  // namespace sbomatch
