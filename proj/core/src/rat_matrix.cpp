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

#include "lpcoh/rat_matrix.hpp"

#include <utility>

#include "lpcoh/error.hpp"

namespace lpcoh {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::fromColumns(const std::vector<RatVector>& columns,
                                 std::size_t rows) {
  RatMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) fail(ErrorCode::DimensionMismatch, "column length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<RatVector> RatMatrix::columns() const {
  std::vector<RatVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational RatMatrix::trace() const {
  if (!isSquare()) fail(ErrorCode::NonSquare, "trace of non-square matrix");
  Rational s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

bool RatMatrix::isZero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

RatMatrix RatMatrix::rref(std::vector<std::size_t>* pivots) const {
  RatMatrix m = *this;
  std::vector<std::size_t> piv;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t sel = lead;
    while (sel < rows_ && m(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != lead) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap(m(sel, k), m(lead, k));
    }
    const Rational inv = 1 / m(lead, c);
    for (std::size_t k = c; k < cols_; ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < cols_; ++k) m(r, k) -= f * m(lead, k);
    }
    piv.push_back(c);
    ++lead;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t RatMatrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

std::vector<RatVector> RatMatrix::nullspace() const {
  std::vector<std::size_t> piv;
  const RatMatrix r = rref(&piv);
  std::vector<bool> isPivot(cols_, false);
  for (auto p : piv) isPivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (isPivot[free]) continue;
    RatVector v(cols_, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational RatMatrix::determinant() const {
  if (!isSquare()) fail(ErrorCode::NonSquare, "determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return Rational(1);
  RatMatrix m = *this;
  int sgn = 1;
  Rational prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t sel = k + 1;
      while (sel < n && m(sel, k) == 0) ++sel;
      if (sel == n) return Rational(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(sel, c), m(k, c));
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sgn * m(n - 1, n - 1);
}

RatMatrix RatMatrix::inverse() const {
  if (!isSquare()) fail(ErrorCode::NonSquare, "inverse of non-square matrix");
  const std::size_t n = rows_;
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  std::vector<std::size_t> piv;
  const RatMatrix red = aug.rref(&piv);
  if (piv.size() < n || piv[n - 1] != n - 1) {
    fail(ErrorCode::SingularMatrix, "matrix is not invertible");
  }
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  return inv;
}

RatVector RatMatrix::apply(const RatVector& x) const {
  if (x.size() != cols_) fail(ErrorCode::DimensionMismatch, "matrix-vector product");
  RatVector y(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      if (x[c] != 0) y[r] += (*this)(r, c) * x[c];
    }
  return y;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product");
  RatMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(ErrorCode::DimensionMismatch, "matrix sum");
  RatMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(ErrorCode::DimensionMismatch, "matrix difference");
  RatMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix m = a;
  for (auto& x : m.data_) x *= s;
  return m;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool solveExact(const RatMatrix& a, const RatVector& b, RatVector* x) {
  if (b.size() != a.rows()) fail(ErrorCode::DimensionMismatch, "right-hand side length");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  std::vector<std::size_t> piv;
  const RatMatrix red = aug.rref(&piv);
  if (!piv.empty() && piv.back() == a.cols()) return false;
  if (x) {
    RatVector sol(a.cols(), Rational(0));
    for (std::size_t i = 0; i < piv.size(); ++i) sol[piv[i]] = red(i, a.cols());
    *x = std::move(sol);
  }
  return true;
}

}  // namespace lpcoh
