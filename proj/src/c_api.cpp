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

#include "bvkit/bvkit.h"

#include "bvkit/construction.hpp"
#include "bvkit/counterexample.hpp"
#include "bvkit/io.hpp"
#include "bvkit/modulus.hpp"
#include "bvkit/variation.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>

struct bvkit_pl {
  bvkit::PiecewiseLinear f;
};

struct bvkit_counterexample {
  bvkit::CounterexampleFunction ce;
};

struct bvkit_construction {
  bvkit::ConstructionResult res;
};

namespace {

thread_local std::string g_last_error;

template <class F>
bvkit_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return BVKIT_OK;
  } catch (const bvkit::DomainError& e) {
    g_last_error = e.what();
    return BVKIT_E_DOMAIN;
  } catch (const bvkit::ArgumentError& e) {
    g_last_error = e.what();
    return BVKIT_E_ARGUMENT;
  } catch (const bvkit::ParseError& e) {
    g_last_error = e.what();
    return BVKIT_E_PARSE;
  } catch (const bvkit::IoError& e) {
    g_last_error = e.what();
    return BVKIT_E_IO;
  } catch (const std::filesystem::filesystem_error& e) {
    g_last_error = e.what();
    return BVKIT_E_IO;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return BVKIT_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BVKIT_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return BVKIT_E_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw bvkit::ArgumentError(std::string(what) + " must not be null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bvkit::ToleranceConfig to_config(const bvkit_tolerances* tol) {
  bvkit::ToleranceConfig cfg;
  if (tol != nullptr) {
    cfg.eq_tol = tol->eq_tol;
    cfg.grid_n = tol->grid_n;
    cfg.bisect_tol = tol->bisect_tol;
    cfg.stop_x = tol->stop_x;
    cfg.max_anchors = tol->max_anchors;
  }
  cfg.validate();
  return cfg;
}

std::filesystem::path out_dir(const char* dir) {
  need(dir, "dir");
  std::filesystem::path p(dir);
  std::filesystem::create_directories(p);
  return p;
}

} // namespace

extern "C" {

void bvkit_tolerances_default(bvkit_tolerances* out) {
  if (out == nullptr) return;
  const bvkit::ToleranceConfig cfg;
  *out = {cfg.eq_tol, cfg.grid_n, cfg.bisect_tol, cfg.stop_x, cfg.max_anchors};
}

const char* bvkit_last_error(void) { return g_last_error.c_str(); }

const char* bvkit_version(void) { return "0.1.0"; }

void bvkit_string_free(char* s) { std::free(s); }

bvkit_status bvkit_pl_create(const double* xs, const double* ys, size_t n, bvkit_pl** out) {
  return guarded([&] {
    need(xs, "xs");
    need(ys, "ys");
    need(out, "out");
    *out = new bvkit_pl{bvkit::PiecewiseLinear({xs, n}, {ys, n})};
  });
}

bvkit_status bvkit_pl_read(const char* path, bvkit_pl** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new bvkit_pl{bvkit::read_function(path)};
  });
}

bvkit_status bvkit_pl_parse_csv(const char* text, bvkit_pl** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new bvkit_pl{bvkit::pl_from_csv(text)};
  });
}

bvkit_status bvkit_pl_to_csv(const bvkit_pl* f, char** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = dup_string(bvkit::to_csv(f->f));
  });
}

bvkit_status bvkit_pl_to_json(const bvkit_pl* f, char** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = dup_string(bvkit::dump(bvkit::to_json(f->f)));
  });
}

bvkit_status bvkit_pl_size(const bvkit_pl* f, size_t* out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = f->f.size();
  });
}

bvkit_status bvkit_pl_breakpoints(const bvkit_pl* f, double* xs, double* ys, size_t cap) {
  return guarded([&] {
    need(f, "f");
    const auto& pts = f->f.breakpoints();
    const size_t n = std::min(cap, pts.size());
    for (size_t i = 0; i < n; ++i) {
      if (xs != nullptr) xs[i] = pts[i].x;
      if (ys != nullptr) ys[i] = pts[i].y;
    }
  });
}

bvkit_status bvkit_pl_eval(const bvkit_pl* f, double x, double* out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = f->f(x);
  });
}

void bvkit_pl_free(bvkit_pl* f) { delete f; }

bvkit_status bvkit_total_variation(const bvkit_pl* f, double a, double b, double* out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = bvkit::total_variation(f->f, a, b);
  });
}

bvkit_status bvkit_variation_function(const bvkit_pl* f, bvkit_pl** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = new bvkit_pl{bvkit::variation_function(f->f).profile};
  });
}

bvkit_status bvkit_lipschitz_constant(const bvkit_pl* f, double* out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = bvkit::lipschitz_constant(f->f);
  });
}

bvkit_status bvkit_minimal_modulus(const bvkit_pl* f, double h, double* out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = bvkit::minimal_modulus(f->f, h);
  });
}

bvkit_status bvkit_minimal_modulus_table(const bvkit_pl* f, int grid_n, bvkit_pl** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    if (grid_n < 1) throw bvkit::ArgumentError("grid_n must be positive");
    const double len = f->f.domain().length();
    std::vector<double> grid(static_cast<size_t>(grid_n) + 1);
    for (int i = 0; i <= grid_n; ++i) grid[static_cast<size_t>(i)] = len * i / grid_n;
    *out = new bvkit_pl{bvkit::minimal_modulus_table(f->f, grid).table};
  });
}

bvkit_status bvkit_is_modulus_for(const char* omega_json, const bvkit_pl* f, int grid_n, double eq_tol, int* ok,
                                  double* worst_h, double* worst_gap) {
  return guarded([&] {
    need(omega_json, "omega_json");
    need(f, "f");
    const auto w = bvkit::modulus_from_json_text(omega_json);
    const auto check = bvkit::is_modulus_for(w, f->f, grid_n, eq_tol);
    if (ok != nullptr) *ok = check.ok ? 1 : 0;
    if (worst_h != nullptr) *worst_h = check.worst_h;
    if (worst_gap != nullptr) *worst_gap = check.worst_gap;
  });
}

bvkit_status bvkit_counterexample_build(double alpha, double beta, int n_terms, bvkit_counterexample** out) {
  return guarded([&] {
    need(out, "out");
    auto spec = bvkit::CounterexampleSpec::with_default_beta(alpha, n_terms);
    if (beta > 0.0) spec.beta = beta;
    *out = new bvkit_counterexample{bvkit::build_counterexample(spec)};
  });
}

bvkit_status bvkit_counterexample_function(const bvkit_counterexample* ce, bvkit_pl** out) {
  return guarded([&] {
    need(ce, "ce");
    need(out, "out");
    *out = new bvkit_pl{ce->ce.f};
  });
}

bvkit_status bvkit_counterexample_report(const bvkit_counterexample* ce, char** out) {
  return guarded([&] {
    need(ce, "ce");
    need(out, "out");
    *out = dup_string(bvkit::dump(bvkit::counterexample_report(ce->ce)));
  });
}

bvkit_status bvkit_counterexample_write(const bvkit_counterexample* ce, const char* dir) {
  return guarded([&] {
    need(ce, "ce");
    const auto p = out_dir(dir);
    bvkit::write_text(p / "f.csv", bvkit::to_csv(ce->ce.f));
    bvkit::write_text(p / "varfn.csv", bvkit::to_csv(bvkit::variation_function(ce->ce.f).profile));
    bvkit::write_text(p / "report.json", bvkit::dump(bvkit::counterexample_report(ce->ce)));
  });
}

void bvkit_counterexample_free(bvkit_counterexample* ce) { delete ce; }

bvkit_status bvkit_construction_build(const char* omega_json, const char* omega_prime_json, double sup_norm,
                                      const bvkit_tolerances* tol, bvkit_construction** out) {
  return guarded([&] {
    need(omega_json, "omega_json");
    need(omega_prime_json, "omega_prime_json");
    need(out, "out");
    const auto w = bvkit::modulus_from_json_text(omega_json);
    const auto wp = bvkit::modulus_from_json_text(omega_prime_json);
    *out = new bvkit_construction{bvkit::build_construction(w, wp, sup_norm, to_config(tol))};
  });
}

bvkit_status bvkit_construction_passed(const bvkit_construction* c, int* out) {
  return guarded([&] {
    need(c, "c");
    need(out, "out");
    *out = c->res.passed() ? 1 : 0;
  });
}

bvkit_status bvkit_construction_function(const bvkit_construction* c, bvkit_pl** out) {
  return guarded([&] {
    need(c, "c");
    need(out, "out");
    *out = new bvkit_pl{c->res.f};
  });
}

bvkit_status bvkit_construction_majorant(const bvkit_construction* c, bvkit_pl** out) {
  return guarded([&] {
    need(c, "c");
    need(out, "out");
    *out = new bvkit_pl{c->res.V.table};
  });
}

bvkit_status bvkit_construction_anchors(const bvkit_construction* c, double* buf, size_t cap, size_t* n) {
  return guarded([&] {
    need(c, "c");
    const auto& a = c->res.anchors.anchors;
    if (n != nullptr) *n = a.size();
    if (buf != nullptr)
      for (size_t i = 0; i < std::min(cap, a.size()); ++i) buf[i] = a[i];
  });
}

bvkit_status bvkit_construction_diagnostics(const bvkit_construction* c, char** out) {
  return guarded([&] {
    need(c, "c");
    need(out, "out");
    *out = dup_string(bvkit::dump(bvkit::diagnostics_json(c->res)));
  });
}

bvkit_status bvkit_construction_write(const bvkit_construction* c, const char* dir) {
  return guarded([&] {
    need(c, "c");
    const auto p = out_dir(dir);
    bvkit::write_text(p / "anchors.json", bvkit::dump(bvkit::anchors_json(c->res)));
    bvkit::write_text(p / "f.csv", bvkit::to_csv(c->res.f));
    bvkit::write_text(p / "V.csv", bvkit::to_csv(c->res.V.table));
    bvkit::write_text(p / "diagnostics.json", bvkit::dump(bvkit::diagnostics_json(c->res)));
  });
}

void bvkit_construction_free(bvkit_construction* c) { delete c; }

} // extern "C"
