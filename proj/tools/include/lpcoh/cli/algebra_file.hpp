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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lpcoh/classifier.hpp"
#include "lpcoh/lie_algebra.hpp"

namespace lpcoh::cli {

/// Malformed input file (exit code 4).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One bracket record; indices are 1-based as in the file.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational coef;
  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

struct AlgebraFile {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<BracketEntry> brackets;
  std::optional<Verdict> expectedVerdict;
  std::optional<Rational> expectedExponent;
  friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

/// Throws ParseError for malformed JSON, missing fields, indices outside
/// 1..dim, non-rational coefficients, or two records for the same (i, j, k)
/// with different coefficients.
AlgebraFile parseAlgebraFile(std::string_view json);
/// Reads and parses; unreadable files are a ParseError too.
AlgebraFile loadAlgebraFile(const std::string& path);
std::string serializeAlgebraFile(const AlgebraFile& file);

/// Each record sets c(i, j, k); a missing mirror (j, i, k) is filled in as
/// -coef. Contradictory mirrors are left for validate() to report.
LieAlgebra toLieAlgebra(const AlgebraFile& file);

/// Records for every nonzero c(i, j, k) with i < j.
AlgebraFile fromLieAlgebra(std::string name, const LieAlgebra& algebra,
                           std::optional<Verdict> expectedVerdict = std::nullopt,
                           std::optional<Rational> expectedExponent = std::nullopt);

}  // namespace lpcoh::cli
