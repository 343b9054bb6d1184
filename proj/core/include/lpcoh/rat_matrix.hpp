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

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lpcoh/rational.hpp"

namespace lpcoh {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix fromColumns(const std::vector<RatVector>& columns,
                               std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool isSquare() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RatVector column(std::size_t c) const;
  RatVector row(std::size_t r) const;
  std::vector<RatVector> columns() const;

  RatMatrix transposed() const;
  Rational trace() const;
  bool isZero() const;

  /// Reduced row echelon form; `pivots` receives the pivot columns.
  RatMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  /// Basis of {x : A x = 0}, one vector per free column.
  std::vector<RatVector> nullspace() const;
  /// Fraction-free (Bareiss) determinant; throws NonSquare.
  Rational determinant() const;
  /// Throws SingularMatrix or NonSquare.
  RatMatrix inverse() const;

  RatVector apply(const RatVector& x) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Solves A x = b exactly when a solution exists.
/// Returns false (and leaves x untouched) when b is not in the column space.
bool solveExact(const RatMatrix& a, const RatVector& b, RatVector* x);

}  // namespace lpcoh
