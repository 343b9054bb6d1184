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

#include "lpcoh/classifier.hpp"
#include "lpcoh/cli/algebra_file.hpp"

namespace lpcoh::cli {

inline constexpr std::string_view kReportSchema = "lpcoh.report/1";
inline constexpr std::string_view kToolVersion = "0.1.0";

struct Report {
  std::string schema{kReportSchema};
  std::string toolVersion{kToolVersion};
  AlgebraFile input;
  Rational tolerance;
  Classification classification;
  std::optional<double> timingSeconds;  // only with --timing
  friend bool operator==(const Report&, const Report&) = default;
};

Report makeReport(const AlgebraFile& input, const Rational& tolerance,
                  const Classification& classification);

/// Pretty-printed JSON with a trailing newline. Exact quantities are strings.
std::string toJson(const Report& report);
/// Inverse of toJson; throws ParseError (including a schema mismatch).
Report reportFromJson(std::string_view json);
/// Line-oriented rendering with the same numeric content as the JSON.
std::string toText(const Report& report);

}  // namespace lpcoh::cli
