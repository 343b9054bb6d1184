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

#include "lpcoh/cli/algebra_file.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "lpcoh/error.hpp"
#include "json_util.hpp"

namespace lpcoh::cli {

using nlohmann::json;

AlgebraFile parseAlgebraFile(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("algebra file must be a JSON object");
  AlgebraFile f;
  f.name = detail::requireString(doc, "name");
  const json& dim = detail::require(doc, "dim");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) {
    throw ParseError("'dim' must be a positive integer");
  }
  f.dim = dim.get<std::size_t>();
  if (doc.contains("basis")) {
    const json& basis = doc["basis"];
    if (!basis.is_array() || basis.size() != f.dim) throw ParseError("'basis' must list dim labels");
    for (const auto& b : basis) {
      if (!b.is_string()) throw ParseError("basis labels must be strings");
      f.basis.push_back(b.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < f.dim; ++i) f.basis.push_back("e" + std::to_string(i + 1));
  }
  const json& brackets = detail::require(doc, "brackets");
  if (!brackets.is_array()) throw ParseError("'brackets' must be an array");
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> seen;
  for (const auto& rec : brackets) {
    if (!rec.is_object()) throw ParseError("bracket records must be objects");
    BracketEntry e;
    std::size_t* slots[] = {&e.i, &e.j, &e.k};
    const char* keys[] = {"i", "j", "k"};
    for (int n = 0; n < 3; ++n) {
      const json& v = detail::require(rec, keys[n]);
      if (!v.is_number_unsigned()) throw ParseError(std::string("index '") + keys[n] + "' must be an integer");
      *slots[n] = v.get<std::size_t>();
      if (*slots[n] < 1 || *slots[n] > f.dim) {
        throw ParseError(std::string("index '") + keys[n] + "' = " + std::to_string(*slots[n]) +
                         " outside 1.." + std::to_string(f.dim));
      }
    }
    e.coef = detail::rationalField(rec, "coef");
    const auto key = std::make_tuple(e.i, e.j, e.k);
    auto it = seen.find(key);
    if (it != seen.end()) {
      if (it->second != e.coef) {
        std::ostringstream os;
        os << "conflicting records for (" << e.i << "," << e.j << "," << e.k << ")";
        throw ParseError(os.str());
      }
      continue;
    }
    seen.emplace(key, e.coef);
    f.brackets.push_back(e);
  }
  if (doc.contains("expected")) {
    const json& ex = doc["expected"];
    if (!ex.is_object()) throw ParseError("'expected' must be an object");
    if (ex.contains("verdict")) {
      try {
        f.expectedVerdict = parseVerdict(detail::requireString(ex, "verdict"));
      } catch (const Error& err) {
        throw ParseError(err.what());
      }
    }
    if (ex.contains("exponent")) f.expectedExponent = detail::rationalField(ex, "exponent");
  }
  return f;
}

AlgebraFile loadAlgebraFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parseAlgebraFile(os.str());
}

json detail::algebraFileJson(const AlgebraFile& f) {
  json doc = json::object();
  doc["name"] = f.name;
  doc["dim"] = f.dim;
  doc["basis"] = f.basis;
  json brackets = json::array();
  for (const auto& e : f.brackets) {
    brackets.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"coef", toString(e.coef)}});
  }
  doc["brackets"] = std::move(brackets);
  if (f.expectedVerdict || f.expectedExponent) {
    json ex = json::object();
    if (f.expectedVerdict) ex["verdict"] = std::string(to_string(*f.expectedVerdict));
    if (f.expectedExponent) ex["exponent"] = toString(*f.expectedExponent);
    doc["expected"] = std::move(ex);
  }
  return doc;
}

std::string serializeAlgebraFile(const AlgebraFile& f) { return detail::algebraFileJson(f).dump(2) + "\n"; }

LieAlgebra toLieAlgebra(const AlgebraFile& f) {
  LieAlgebra g(f.dim, f.basis);
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, bool> given;
  for (const auto& e : f.brackets) {
    g.c(e.i - 1, e.j - 1, e.k - 1) = e.coef;
    given[{e.i, e.j, e.k}] = true;
  }
  for (const auto& e : f.brackets) {
    if (!given.count({e.j, e.i, e.k})) g.c(e.j - 1, e.i - 1, e.k - 1) = -e.coef;
  }
  return g;
}

AlgebraFile fromLieAlgebra(std::string name, const LieAlgebra& g, std::optional<Verdict> verdict,
                           std::optional<Rational> exponent) {
  AlgebraFile f;
  f.name = std::move(name);
  f.dim = g.dim();
  f.basis = g.basisNames();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      for (std::size_t k = 0; k < g.dim(); ++k) {
        if (g.c(i, j, k) != 0) f.brackets.push_back({i + 1, j + 1, k + 1, g.c(i, j, k)});
      }
    }
  }
  f.expectedVerdict = verdict;
  f.expectedExponent = std::move(exponent);
  return f;
}

}  // namespace lpcoh::cli
