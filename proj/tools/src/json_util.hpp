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

#include <string>

#include <json.hpp>

#include "lpcoh/cli/algebra_file.hpp"
#include "lpcoh/error.hpp"

namespace lpcoh::cli::detail {

inline const nlohmann::json& require(const nlohmann::json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return obj[key];
}

inline std::string requireString(const nlohmann::json& obj, const char* key) {
  const auto& v = require(obj, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

// Rational from a "p/q" string or a JSON integer; floats are rejected.
inline Rational asRational(const nlohmann::json& v, const std::string& what) {
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  if (!v.is_string()) throw ParseError(what + " must be a rational string");
  try {
    return parseRational(v.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

inline Rational rationalField(const nlohmann::json& obj, const char* key) {
  return asRational(require(obj, key), std::string("field '") + key + "'");
}

nlohmann::json algebraFileJson(const AlgebraFile& f);

}  // namespace lpcoh::cli::detail
