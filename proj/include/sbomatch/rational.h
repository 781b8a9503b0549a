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

#ifndef SBOMATCH_RATIONAL_H_
#define SBOMATCH_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sbomatch {

// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Pair weights; nonnegative by instance validation. Gains share the type.
using Weight = Rational;

// Accepts "p", "-p" and "p/q" with decimal integers. Throws InputError.
Rational ParseRational(std::string_view text);

// "p" when the denominator is one, "p/q" otherwise.
std::string ToString(const Rational& value);

// ceil(value) as an integer; value must fit in a long long.
long long Ceil(const Rational& value);

}  // namespace sbomatch

#endif  // SBOMATCH_RATIONAL_H_
