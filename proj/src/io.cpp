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

#include "bvkit/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

namespace bvkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view field, std::size_t line) {
  const std::string buf(trim(field));
  if (buf.empty()) throw ParseError("empty field on line " + std::to_string(line));
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || errno == ERANGE)
    throw ParseError("malformed number '" + buf + "' on line " + std::to_string(line));
  return v;
}

double number(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) throw ParseError(std::string("missing numeric field '") + key + "'");
  return j.at(key).get<double>();
}

Json points_json(const PiecewiseLinear& f) {
  Json arr = Json::array();
  for (const auto& p : f.breakpoints()) arr.push_back(Json::array({p.x, p.y}));
  return arr;
}

PiecewiseLinear points_from_json(const Json& arr) {
  if (!arr.is_array()) throw ParseError("expected an array of [x, y] pairs");
  std::vector<Point> pts;
  pts.reserve(arr.size());
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw ParseError("expected an [x, y] pair of numbers");
    pts.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  return PiecewiseLinear(std::move(pts));
}

Json gap_json(const GapReport& g) {
  return Json{{"worst_gap", g.worst_gap}, {"worst_at", g.worst_at}, {"slack", g.slack}, {"ok", g.ok}};
}

} // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const PiecewiseLinear& f) {
  std::string out = "x,y\n";
  out.reserve(f.size() * 48);
  for (const auto& p : f.breakpoints()) {
    out += format_double(p.x);
    out += ',';
    out += format_double(p.y);
    out += '\n';
  }
  return out;
}

PiecewiseLinear pl_from_csv(std::string_view text) {
  std::vector<Point> pts;
  std::size_t line_no = 0;
  bool header = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    if (!header) {
      if (line != "x,y") throw ParseError("CSV must start with the header 'x,y'");
      header = true;
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos)
      throw ParseError("expected two comma-separated fields on line " + std::to_string(line_no));
    pts.push_back({parse_double(line.substr(0, comma), line_no), parse_double(line.substr(comma + 1), line_no)});
  }
  if (!header) throw ParseError("CSV is empty");
  return PiecewiseLinear(std::move(pts));
}

Json to_json(const PiecewiseLinear& f) { return Json{{"breakpoints", points_json(f)}}; }

PiecewiseLinear pl_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("breakpoints")) throw ParseError("expected an object with 'breakpoints'");
  return points_from_json(j.at("breakpoints"));
}

Json to_json(const ModulusSpec& w) {
  return std::visit(
      [](const auto& m) -> Json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PowerModulus>)
          return Json{{"kind", "power"}, {"L", m.L}, {"alpha", m.alpha}};
        else if constexpr (std::is_same_v<T, LinearModulus>)
          return Json{{"kind", "linear"}, {"L", m.L}};
        else if constexpr (std::is_same_v<T, LogReciprocalModulus>)
          return Json{{"kind", "log_reciprocal"}, {"L", m.L}};
        else
          return Json{{"kind", "tabulated"}, {"table", points_json(m.table)}};
      },
      w.variant());
}

ModulusSpec modulus_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw ParseError("modulus JSON needs a string 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "power") return ModulusSpec::power(number(j, "L"), number(j, "alpha"));
  if (kind == "linear") return ModulusSpec::linear(number(j, "L"));
  if (kind == "log_reciprocal") return ModulusSpec::log_reciprocal(number(j, "L"));
  if (kind == "tabulated") {
    if (!j.contains("table")) throw ParseError("tabulated modulus needs a 'table'");
    return ModulusSpec::tabulated(points_from_json(j.at("table")));
  }
  throw ParseError("unknown modulus kind '" + kind + "'");
}

ModulusSpec modulus_from_json_text(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid modulus JSON: ") + e.what());
  }
  return modulus_from_json(j);
}

Json to_json(const ModulusTable& t) {
  Json j{{"kind", "tabulated"}, {"table", points_json(t.table)}};
  j["flags"] = Json{{"subadditive_checked", t.flags.subadditive_checked},
                    {"concave_checked", t.flags.concave_checked},
                    {"reproducing_checked", t.flags.reproducing_checked}};
  return j;
}

ModulusTable modulus_table_from_json(const Json& j) {
  const ModulusSpec spec = modulus_from_json(j);
  const auto* tab = std::get_if<TabulatedModulus>(&spec.variant());
  if (tab == nullptr) throw ParseError("modulus table JSON must have kind 'tabulated'");
  ModulusFlags flags;
  if (j.contains("flags")) {
    const Json& fl = j.at("flags");
    flags.subadditive_checked = fl.value("subadditive_checked", false);
    flags.concave_checked = fl.value("concave_checked", false);
    flags.reproducing_checked = fl.value("reproducing_checked", false);
  }
  return ModulusTable(tab->table, flags);
}

Json counterexample_report(const CounterexampleFunction& ce, double blowup_threshold) {
  Json witnesses = Json::object();
  const std::pair<const char*, double> gammas[] = {{"0.25", 0.25}, {"0.5", 0.5}, {"0.75", 0.75}, {"0.9", 0.9}};
  for (const auto& [key, gamma] : gammas) {
    const auto n = gamma_blowup_witness(ce, gamma, blowup_threshold);
    witnesses[key] = n ? Json(*n) : Json(nullptr);
  }
  return Json{{"alpha", ce.spec.alpha},
              {"beta", ce.spec.beta},
              {"N", ce.spec.n_terms},
              {"holder_seminorm_nodes", holder_seminorm_nodes(ce)},
              {"truncation_var_error", ce.truncation_var_error},
              {"blowup_threshold", blowup_threshold},
              {"blowup_witnesses", witnesses}};
}

Json anchors_json(const ConstructionResult& res) {
  Json segs = Json::array();
  for (const auto& s : res.segments)
    segs.push_back(Json{{"interval", Json::array({s.lo, s.hi})}, {"sign", s.sign}, {"offset", s.offset + 0.0}});
  return Json{{"anchors", res.anchors.anchors},
              {"midpoints", res.anchors.midpoints},
              {"terminated", to_string(res.anchors.terminated)},
              {"segments", segs}};
}

Json diagnostics_json(const ConstructionResult& res) {
  const auto& d = res.diagnostics;
  return Json{{"passed", res.passed()},
              {"modulus_check", gap_json(d.modulus_check)},
              {"varfn_check", gap_json(d.varfn_check)},
              {"truncation_var_error", d.truncation_var_error},
              {"midpoint_residual", d.midpoint_residual},
              {"mesh_slack", d.mesh_slack},
              {"anchor_count", res.anchors.anchors.size()},
              {"terminated", to_string(res.anchors.terminated)},
              {"V_flags",
               Json{{"subadditive_checked", res.V.flags.subadditive_checked},
                    {"concave_checked", res.V.flags.concave_checked},
                    {"reproducing_checked", res.V.flags.reproducing_checked}}},
              {"warnings", d.warnings}};
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

PiecewiseLinear read_function(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  if (path.extension() == ".json") {
    try {
      return pl_from_json(Json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid function JSON: ") + e.what());
    }
  }
  return pl_from_csv(text);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace bvkit
