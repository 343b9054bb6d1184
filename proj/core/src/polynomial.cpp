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

#include "lpcoh/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "lpcoh/error.hpp"

namespace lpcoh {

RatPolynomial::RatPolynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

RatPolynomial::RatPolynomial(std::initializer_list<Rational> ascending)
    : coeffs_(ascending) {
  trim();
}

RatPolynomial RatPolynomial::constant(const Rational& c) { return RatPolynomial({c}); }

RatPolynomial RatPolynomial::linear(const Rational& root) {
  return RatPolynomial({-root, Rational(1)});
}

RatPolynomial RatPolynomial::monomial(std::size_t degree, const Rational& coef) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coef;
  return RatPolynomial(std::move(c));
}

void RatPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& RatPolynomial::leading() const {
  if (coeffs_.empty()) fail(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational RatPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RatPolynomial::evalDouble(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

RatPolynomial RatPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return RatPolynomial();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RatPolynomial(std::move(d));
}

RatPolynomial RatPolynomial::monic() const {
  if (isZero()) return *this;
  const Rational inv = 1 / leading();
  return inv * (*this);
}

RatPolynomial RatPolynomial::shifted(const Rational& c) const {
  // Repeated synthetic division (Taylor shift).
  std::vector<Rational> a = coeffs_;
  const std::size_t n = a.size();
  if (c == 0 || n <= 1) return *this;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = n - 1; i > k; --i) a[i - 1] += c * a[i];
  }
  return RatPolynomial(std::move(a));
}

RatPolynomial RatPolynomial::reflected() const {
  std::vector<Rational> a = coeffs_;
  for (std::size_t i = 1; i < a.size(); i += 2) a[i] = -a[i];
  return RatPolynomial(std::move(a));
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return RatPolynomial(std::move(c));
}

RatPolynomial operator-(const RatPolynomial& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c) x = -x;
  return RatPolynomial(std::move(c));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) { return a + (-b); }

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.isZero() || b.isZero()) return RatPolynomial();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPolynomial(std::move(c));
}

RatPolynomial operator*(const Rational& s, const RatPolynomial& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c) x *= s;
  return RatPolynomial(std::move(c));
}

std::string RatPolynomial::toString(const std::string& var) const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    const bool unit = mag == 1;
    if (!unit || i == 0) os << lpcoh::toString(mag);
    if (i >= 1) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.isZero()) fail(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  if (a.degree() < b.degree()) return {RatPolynomial(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> q(rem.size() - db, Rational(0));
  const Rational invLead = 1 / bc.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    const Rational f = rem[k] * invLead;
    q[k - db] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * bc[j];
  }
  rem.resize(db);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(rem))};
}

RatPolynomial exactQuotient(const RatPolynomial& a, const RatPolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.isZero()) fail(ErrorCode::Internal, "polynomial division is not exact");
  return q;
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.isZero()) {
    RatPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<std::pair<RatPolynomial, std::size_t>> squarefreeDecomposition(const RatPolynomial& p) {
  std::vector<std::pair<RatPolynomial, std::size_t>> out;
  if (p.degree() < 1) return out;
  const RatPolynomial f = p.monic();
  const RatPolynomial fp = f.derivative();
  const RatPolynomial a0 = gcd(f, fp);
  RatPolynomial b = exactQuotient(f, a0);
  RatPolynomial c = exactQuotient(fp, a0);
  RatPolynomial d = c - b.derivative();
  std::size_t i = 1;
  while (b.degree() >= 1) {
    const RatPolynomial a = gcd(b, d);
    b = exactQuotient(b, a);
    c = exactQuotient(d, a);
    d = c - b.derivative();
    if (a.degree() >= 1) out.emplace_back(a, i);
    ++i;
  }
  return out;
}

namespace {

// f0, f1, -rem(f0, f1), ... up to the last nonzero term.
std::vector<RatPolynomial> signedRemainderSequence(const RatPolynomial& f0,
                                                   const RatPolynomial& f1) {
  std::vector<RatPolynomial> seq{f0};
  if (f1.isZero()) return seq;
  seq.push_back(f1);
  while (true) {
    const auto& a = seq[seq.size() - 2];
    const auto& b = seq.back();
    RatPolynomial r = divmod(a, b).second;
    if (r.isZero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int signAtInfinity(const RatPolynomial& p, bool plus) {
  const int s = sign(p.leading());
  return (plus || p.degree() % 2 == 0) ? s : -s;
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::size_t variationsAtInfinity(const std::vector<RatPolynomial>& seq, bool plus) {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const auto& p : seq) s.push_back(signAtInfinity(p, plus));
  return variations(s);
}

std::size_t variationsAt(const std::vector<RatPolynomial>& seq, const Rational& x) {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const auto& p : seq) s.push_back(sign(p(x)));
  return variations(s);
}

}  // namespace

std::size_t countDistinctRealRoots(const RatPolynomial& p) {
  if (p.isZero()) fail(ErrorCode::ZeroPolynomial, "root count of zero polynomial");
  if (p.degree() < 1) return 0;
  const auto seq = signedRemainderSequence(p, p.derivative());
  return variationsAtInfinity(seq, false) - variationsAtInfinity(seq, true);
}

std::size_t countRealRootsWithMultiplicity(const RatPolynomial& p) {
  if (p.isZero()) fail(ErrorCode::ZeroPolynomial, "root count of zero polynomial");
  std::size_t total = 0;
  for (const auto& [factor, mult] : squarefreeDecomposition(p)) {
    total += mult * countDistinctRealRoots(factor);
  }
  return total;
}

std::size_t countDistinctRealRootsIn(const RatPolynomial& p, const Rational& a,
                                     const Rational& b) {
  if (p.isZero()) fail(ErrorCode::ZeroPolynomial, "root count of zero polynomial");
  if (p.degree() < 1 || !(a < b)) return 0;
  const auto seq = signedRemainderSequence(p, p.derivative());
  return variationsAt(seq, a) - variationsAt(seq, b);
}

int cauchyIndex(const RatPolynomial& num, const RatPolynomial& den) {
  if (den.isZero()) fail(ErrorCode::ZeroPolynomial, "Cauchy index with zero denominator");
  const RatPolynomial r = divmod(num, den).second;
  const auto seq = signedRemainderSequence(den, r);
  return static_cast<int>(variationsAtInfinity(seq, false)) -
         static_cast<int>(variationsAtInfinity(seq, true));
}

namespace {

std::vector<mpz_class> positiveDivisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rationalRoots(const RatPolynomial& p) {
  if (p.isZero()) fail(ErrorCode::ZeroPolynomial, "roots of zero polynomial");
  std::vector<Rational> roots;
  // Integer coefficients with common denominators cleared.
  mpz_class lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> a;
  for (const auto& c : p.coefficients()) a.push_back(mpz_class(c * lcm));
  std::size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  if (a.size() - low <= 1) return roots;
  const mpz_class a0 = a[low];
  const mpz_class an = a.back();
  const mpz_class cap("1000000000000");
  if (abs(a0) > cap || abs(an) > cap) return roots;
  const auto num = positiveDivisors(a0);
  const auto den = positiveDivisors(an);
  for (const auto& d : num)
    for (const auto& e : den) {
      for (int s : {1, -1}) {
        Rational r(s * d, e);
        r.canonicalize();
        if (p(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) {
          roots.push_back(r);
        }
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace lpcoh
