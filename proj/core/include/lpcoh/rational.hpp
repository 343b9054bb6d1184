// Copyright 2026 The lpcoh Authors
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

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lpcoh {

/// Exact rational number. GMP keeps the representation canonical
/// (denominator > 0, coprime numerator and denominator) after every operation.
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q" (decimal integers). Throws InvalidArgument.
Rational parseRational(std::string_view text);

/// Canonical text form: "3/2", "-1", "0".
std::string toString(const Rational& value);

int sign(const Rational& value);

/// 2^exponent, exponent may be negative.
Rational pow2(int exponent);

/// The rational with the smallest denominator (then smallest |numerator|)
/// in the closed interval [lo, hi]. Requires lo <= hi.
Rational simplestBetween(const Rational& lo, const Rational& hi);

RatVector unitVector(std::size_t dim, std::size_t index);

Rational dot(const RatVector& a, const RatVector& b);

bool isZero(const RatVector& v);

}  // namespace lpcoh
