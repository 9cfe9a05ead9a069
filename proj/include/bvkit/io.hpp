/*
  Copyright 2026 The bvkit Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef BVKIT_IO_HPP
#define BVKIT_IO_HPP

#include "bvkit/construction.hpp"
#include "bvkit/core_types.hpp"
#include "bvkit/counterexample.hpp"
#include "bvkit/modulus.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bvkit {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

/// 17 significant digits; parses back to the same double.
std::string format_double(double v);

// CSV with header `x,y`, rows in increasing x.
std::string to_csv(const PiecewiseLinear& f);
PiecewiseLinear pl_from_csv(std::string_view text);

// {"breakpoints": [[x, y], ...]}
Json to_json(const PiecewiseLinear& f);
PiecewiseLinear pl_from_json(const Json& j);

// {"kind": "power", "L": 1.0, "alpha": 0.5}, {"kind": "linear", "L": ...},
// {"kind": "log_reciprocal", "L": ...}, {"kind": "tabulated", "table": [[h, w], ...]}
Json to_json(const ModulusSpec& w);
ModulusSpec modulus_from_json(const Json& j);
ModulusSpec modulus_from_json_text(std::string_view text);

// Tabulated modulus plus {"flags": {...}}.
Json to_json(const ModulusTable& t);
ModulusTable modulus_table_from_json(const Json& j);

Json counterexample_report(const CounterexampleFunction& ce, double blowup_threshold = 2.0);

/// anchors, midpoints, termination and the exact segment records.
Json anchors_json(const ConstructionResult& res);
Json diagnostics_json(const ConstructionResult& res);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

/// Dispatches on extension: `.json` is parsed as JSON, anything else as CSV.
PiecewiseLinear read_function(const std::filesystem::path& path);

/// Pretty-printed with two-space indentation and a trailing newline.
std::string dump(const Json& j);

} // namespace bvkit

#endif // BVKIT_IO_HPP
