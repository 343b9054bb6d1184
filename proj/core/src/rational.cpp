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

#include "lpcoh/rational.hpp"

#include <cctype>

#include "lpcoh/error.hpp"

namespace lpcoh {

namespace {

bool isIntegerLiteral(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class parseInteger(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational parseRational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!isIntegerLiteral(num) || !isIntegerLiteral(den) || den.front() == '-' ||
      den.front() == '+') {
    fail(ErrorCode::InvalidArgument,
         "not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class d = parseInteger(den);
  if (d == 0) fail(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  Rational r(parseInteger(num), d);
  r.canonicalize();
  return r;
}

std::string toString(const Rational& value) { return value.get_str(10); }

int sign(const Rational& value) { return sgn(value); }

Rational pow2(int exponent) {
  mpz_class p = 1;
  if (exponent >= 0) {
    p <<= static_cast<mp_bitcnt_t>(exponent);
    return Rational(p);
  }
  p <<= static_cast<mp_bitcnt_t>(-exponent);
  return Rational(mpz_class(1), p);
}

Rational simplestBetween(const Rational& lo, const Rational& hi) {
  if (lo > hi) fail(ErrorCode::InvalidArgument, "simplestBetween: lo > hi");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplestBetween(-hi, -lo);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // Both ends lie strictly inside (fl, fl + 1).
  const Rational inner = simplestBetween(1 / (hi - fl), 1 / (lo - fl));
  Rational r = Rational(fl) + 1 / inner;
  r.canonicalize();
  return r;
}

RatVector unitVector(std::size_t dim, std::size_t index) {
  RatVector v(dim, Rational(0));
  v.at(index) = 1;
  return v;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "dot product of unequal lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool isZero(const RatVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace lpcoh
