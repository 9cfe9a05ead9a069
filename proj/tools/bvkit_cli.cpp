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

// Command-line front end. Talks to the library only through the C API.

#include "bvkit/bvkit.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int code;
  std::string message;
};

void check(bvkit_status s, const char* what) {
  if (s != BVKIT_OK) throw Failure{kExitUsage, std::string(what) + ": " + bvkit_last_error()};
}

struct PlDeleter {
  void operator()(bvkit_pl* p) const { bvkit_pl_free(p); }
};
using PlPtr = std::unique_ptr<bvkit_pl, PlDeleter>;

std::string take(char* s) {
  std::string out(s);
  bvkit_string_free(s);
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

PlPtr read_input(const std::string& path) {
  bvkit_pl* f = nullptr;
  check(bvkit_pl_read(path.c_str(), &f), "reading input");
  return PlPtr(f);
}

std::string render(const bvkit_pl* f, const std::string& format) {
  char* s = nullptr;
  check(format == "json" ? bvkit_pl_to_json(f, &s) : bvkit_pl_to_csv(f, &s), "formatting");
  return take(s);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary | std::ios::trunc);
  if (!file) throw Failure{kExitUsage, "cannot write '" + out + "'"};
  file << text;
}

struct Options {
  std::string input;
  std::string out;
  std::string format = "csv";
  std::string omega;
  std::string omega_prime;
  double alpha = 0.5;
  double beta = 0.0;
  int terms = 100;
  double sup_norm = 1.0;
  double at = 0.0;
  bvkit_tolerances tol{};
};

int run_variation(const Options& o, bool have_at) {
  const PlPtr f = read_input(o.input);
  if (have_at) {
    double a = 0.0;
    check(bvkit_pl_breakpoints(f.get(), &a, nullptr, 1), "reading breakpoints");
    double v = 0.0;
    check(bvkit_total_variation(f.get(), a, o.at, &v), "total variation");
    emit(fmt(v) + "\n", o.out);
    return kExitOk;
  }
  bvkit_pl* prof = nullptr;
  check(bvkit_variation_function(f.get(), &prof), "variation function");
  const PlPtr p(prof);
  emit(render(p.get(), o.format), o.out);
  return kExitOk;
}

int run_modulus(const Options& o) {
  const PlPtr f = read_input(o.input);
  bvkit_pl* table = nullptr;
  check(bvkit_minimal_modulus_table(f.get(), o.tol.grid_n, &table), "minimal modulus");
  const PlPtr t(table);
  emit(render(t.get(), o.format), o.out);
  return kExitOk;
}

int run_counterexample(const Options& o) {
  bvkit_counterexample* ce = nullptr;
  check(bvkit_counterexample_build(o.alpha, o.beta, o.terms, &ce), "counterexample");
  const std::unique_ptr<bvkit_counterexample, void (*)(bvkit_counterexample*)> guard(ce, bvkit_counterexample_free);
  check(bvkit_counterexample_write(ce, o.out.c_str()), "writing artifacts");
  return kExitOk;
}

int run_construct(const Options& o) {
  bvkit_construction* c = nullptr;
  check(bvkit_construction_build(o.omega.c_str(), o.omega_prime.c_str(), o.sup_norm, &o.tol, &c), "construction");
  const std::unique_ptr<bvkit_construction, void (*)(bvkit_construction*)> guard(c, bvkit_construction_free);
  check(bvkit_construction_write(c, o.out.c_str()), "writing artifacts");
  int passed = 0;
  check(bvkit_construction_passed(c, &passed), "construction");
  if (passed) return kExitOk;
  char* diag = nullptr;
  check(bvkit_construction_diagnostics(c, &diag), "diagnostics");
  std::cout << take(diag);
  return kExitVerify;
}

int run_verify(const Options& o) {
  const PlPtr f = read_input(o.input);
  int ok = 0;
  double worst_h = 0.0, worst_gap = 0.0;
  check(bvkit_is_modulus_for(o.omega.c_str(), f.get(), o.tol.grid_n, o.tol.eq_tol, &ok, &worst_h, &worst_gap),
        "verify");
  std::cout << "{\n  \"ok\": " << (ok ? "true" : "false") << ",\n  \"worst_h\": " << fmt(worst_h)
            << ",\n  \"worst_gap\": " << fmt(worst_gap) << ",\n  \"eq_tol\": " << fmt(o.tol.eq_tol) << "\n}\n";
  return ok ? kExitOk : kExitVerify;
}

} // namespace

int main(int argc, char** argv) {
  Options o;
  bvkit_tolerances_default(&o.tol);

  CLI::App app{"Bounded-variation and modulus-of-continuity toolkit"};
  app.require_subcommand(1);
  auto add_tol = [&o](CLI::App* sub) {
    sub->add_option("--grid-n", o.tol.grid_n, "Sampling grid size")->check(CLI::Range(16, 1 << 24));
    sub->add_option("--eq-tol", o.tol.eq_tol, "Comparison slack")->check(CLI::PositiveNumber);
  };
  const auto formats = CLI::IsMember({"csv", "json"});

  auto* var = app.add_subcommand("variation", "Total variation or the variation function of f");
  var->add_option("--input", o.input, "Function file (.csv or .json)")->required();
  auto* at = var->add_option("--at", o.at, "Print var(f; a, x) at this x");
  var->add_option("--out", o.out, "Output file (default stdout)");
  var->add_option("--format", o.format, "csv or json")->check(formats);

  auto* mod = app.add_subcommand("modulus", "Minimal modulus table of f");
  mod->add_option("--input", o.input, "Function file (.csv or .json)")->required();
  mod->add_option("--out", o.out, "Output file (default stdout)");
  mod->add_option("--format", o.format, "csv or json")->check(formats);
  add_tol(mod);

  auto* ce = app.add_subcommand("counterexample", "Hoelder function whose variation function is not Hoelder");
  ce->add_option("--alpha", o.alpha, "Hoelder exponent in (0, 1)");
  ce->add_option("--beta", o.beta, "Node decay exponent (default 1/alpha - 1)");
  ce->add_option("--terms", o.terms, "Number of bumps");
  ce->add_option("--out", o.out, "Output directory")->required();

  auto* con = app.add_subcommand("construct", "Build f with the given modulus and variation function");
  con->add_option("--omega", o.omega, "Modulus JSON for f")->required();
  con->add_option("--omega-prime", o.omega_prime, "Modulus JSON shaping var_f")->required();
  con->add_option("--sup-norm", o.sup_norm, "Bound on omega'")->check(CLI::PositiveNumber);
  con->add_option("--stop-x", o.tol.stop_x, "Truncate anchors below this x")->check(CLI::PositiveNumber);
  con->add_option("--out", o.out, "Output directory")->required();
  add_tol(con);

  auto* ver = app.add_subcommand("verify", "Check that omega is a modulus of continuity for f");
  ver->add_option("--input", o.input, "Function file (.csv or .json)")->required();
  ver->add_option("--omega", o.omega, "Modulus JSON")->required();
  add_tol(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (var->parsed()) return run_variation(o, at->count() > 0);
    if (mod->parsed()) return run_modulus(o);
    if (ce->parsed()) return run_counterexample(o);
    if (con->parsed()) return run_construct(o);
    return run_verify(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
}
