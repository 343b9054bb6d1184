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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpcoh/classifier.hpp"
#include "lpcoh/cli/algebra_file.hpp"
#include "lpcoh/lie_algebra.hpp"

namespace lpcoh::cli {

struct CatalogEntry {
  std::string name;
  std::string description;
  LieAlgebra algebra;
  Verdict expected;
  std::optional<Rational> expectedExponent;  // Heintze entries only
};

/// Built-in algebras with their expected verdicts, in a fixed order.
const std::vector<CatalogEntry>& catalog();
/// Throws InvalidArgument for unknown names.
const CatalogEntry& catalogEntry(std::string_view name);
AlgebraFile toAlgebraFile(const CatalogEntry& entry);

}  // namespace lpcoh::cli
