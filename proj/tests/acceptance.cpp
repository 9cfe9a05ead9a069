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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "bvkit/construction.hpp"
#include "bvkit/counterexample.hpp"
#include "bvkit/modulus.hpp"
#include "bvkit/variation.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef BVKIT_CLI_PATH
#error "BVKIT_CLI_PATH must point at the CLI binary"
#endif

using namespace bvkit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Ctx {
  Outcome out;
  void expect(bool cond, const std::string& what) {
    if (!cond && out.ok) {
      out.ok = false;
      out.detail = what;
    }
  }
};

PiecewiseLinear to_pl(const oracle::Pts& p) {
  std::vector<Point> pts;
  for (const auto& [x, y] : p) pts.push_back({x, y});
  return PiecewiseLinear(std::move(pts));
}

oracle::Pts to_pts(const PiecewiseLinear& f) {
  oracle::Pts p;
  for (const auto& q : f.breakpoints()) p.push_back({q.x, q.y});
  return p;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 1. Additivity, refinement monotonicity, partition sums below the total.
Outcome criterion1() {
  Ctx c;
  std::mt19937_64 rng(oracle::seed(1001));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_add = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const auto f = to_pl(oracle::random_function(rng, 2 + static_cast<int>(u(rng) * 49)));
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    const double m = a + (b - a) * u(rng);
    const double whole = total_variation(f, a, b);
    const double parts = total_variation(f, a, m) + total_variation(f, m, b);
    const double rel = std::fabs(whole - parts) / std::max(whole, 1e-300);
    worst_add = std::max(worst_add, whole == 0.0 ? std::fabs(parts) : rel);
    const double tv = total_variation(f);
    for (int k = 0; k < 100; ++k) {
      std::vector<double> coarse{0.0, 1.0};
      const int nc = 1 + static_cast<int>(u(rng) * 10);
      for (int i = 0; i < nc; ++i) coarse.push_back(u(rng));
      std::sort(coarse.begin(), coarse.end());
      std::vector<double> fine = coarse;
      const int nf = 1 + static_cast<int>(u(rng) * 20);
      for (int i = 0; i < nf; ++i) fine.push_back(u(rng));
      std::sort(fine.begin(), fine.end());
      const double sc = variation_over_partition(f, Partition(coarse));
      const double sf = variation_over_partition(f, Partition(fine));
      c.expect(sc <= sf + 1e-12, "refinement lowered the partition sum");
      c.expect(sf <= tv + 1e-12, "partition sum above total variation");
    }
  }
  c.expect(worst_add <= 1e-12, "additivity residual " + num(worst_add));
  if (c.out.ok) c.out.detail = "additivity residual " + num(worst_add);
  return c.out;
}

// 2. omega_f <= omega_{var_f} at every exact candidate offset.
Outcome criterion2() {
  Ctx c;
  std::mt19937_64 rng(oracle::seed(1002));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = -INFINITY;
  for (int t = 0; t < 500; ++t) {
    const auto f = to_pl(oracle::random_function(rng, 2 + static_cast<int>(u(rng) * 49)));
    const auto v = variation_function(f).profile;
    const auto hs = candidate_offsets(f, 1.0);
    const auto wf = minimal_modulus_at(f, hs), wv = minimal_modulus_at(v, hs);
    for (std::size_t i = 0; i < hs.size(); ++i) worst = std::max(worst, wf[i] - wv[i]);
  }
  c.expect(worst <= 1e-12, "omega_f exceeds omega_var by " + num(worst));
  c.out.detail = "max omega_f - omega_var " + num(worst);
  return c.out;
}

// 3. Lipschitz equality.
Outcome criterion3() {
  Ctx c;
  std::mt19937_64 rng(oracle::seed(1003));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int mismatches = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto f = to_pl(oracle::random_function(rng, 2 + static_cast<int>(u(rng) * 49)));
    if (lipschitz_constant(f) != lipschitz_constant(variation_function(f).profile)) ++mismatches;
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  c.out.detail = "1000 functions, " + std::to_string(mismatches) + " mismatches";
  return c.out;
}

// 4. Minimal-modulus tables: subadditive, reproducing, minimal.
Outcome criterion4() {
  Ctx c;
  std::mt19937_64 rng(oracle::seed(1004));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int n = 128;
  std::vector<double> grid(n + 1);
  for (int i = 0; i <= n; ++i) grid[i] = static_cast<double>(i) / n;
  double worst_sub = -INFINITY, worst_rep = 0.0, worst_min = -INFINITY;
  for (int t = 0; t < 100; ++t) {
    const auto p = oracle::random_function(rng, 2 + static_cast<int>(u(rng) * 30));
    const auto f = to_pl(p);
    const auto table = minimal_modulus_table(f, grid);
    for (double a : grid)
      for (double b : grid)
        if (a + b <= 1.0) worst_sub = std::max(worst_sub, table(a + b) - table(a) - table(b));
    const auto rep = omega_of_omega(table);
    for (const auto& q : table.table.breakpoints()) worst_rep = std::max(worst_rep, std::fabs(rep(q.x) - q.y));
    // Covering moduli: L h^a with L at least the exact Hoelder-a seminorm,
    // and omega_f lifted by a random multiple of h.
    for (int k = 0; k < 10; ++k) {
      ModulusSpec w = ModulusSpec::linear(1.0);
      if (k % 2 == 0) {
        const double a = 0.2 + 0.8 * u(rng);
        w = ModulusSpec::power(oracle::holder(p, a) * (1.0 + u(rng)), a);
      } else {
        // omega_f is convex between consecutive offsets, so its chords over
        // the offset set lie above it; lift * h interpolates exactly.
        const double lift = u(rng);
        std::vector<double> nodes = candidate_offsets(f, 1.0);
        nodes.insert(nodes.begin(), 0.0);
        if (nodes.back() < 1.0) nodes.push_back(1.0);
        std::vector<Point> pts;
        for (double h : nodes) pts.push_back({h, oracle::modulus(p, h) + lift * h});
        for (std::size_t i = 1; i < pts.size(); ++i) pts[i].y = std::max(pts[i].y, pts[i - 1].y);
        w = ModulusSpec::tabulated(PiecewiseLinear(pts));
      }
      c.expect(is_modulus_for(w, f, 512, 1e-9).ok, "generated covering modulus rejected");
      for (double h : grid) worst_min = std::max(worst_min, table(h) - w(h));
    }
  }
  c.expect(worst_sub <= 1e-9, "subadditivity gap " + num(worst_sub));
  c.expect(worst_rep <= 1e-9, "reproduction gap " + num(worst_rep));
  c.expect(worst_min <= 1e-12, "minimality gap " + num(worst_min));
  if (c.out.ok)
    c.out.detail = "subadditive " + num(worst_sub) + ", reproducing " + num(worst_rep) + ", minimal " + num(worst_min);
  return c.out;
}

// 5. Majorant pipeline.
Outcome criterion5() {
  Ctx c;
  std::mt19937_64 rng(oracle::seed(1005));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_env = 0.0, worst_conc = 0.0, worst_rep = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto tab = oracle::random_modulus_table(rng, 3 + static_cast<int>(u(rng) * 20), 0.5 + u(rng));
    const double sup = tab.back().second * (1.0 + u(rng));
    const auto w = ModulusSpec::tabulated(to_pl(tab));
    const auto V = prepare_target_modulus(w, sup);
    for (const auto& q : V.table.breakpoints()) c.expect(q.y >= w(q.x) - 1e-12, "output below input");
    for (const auto& [h, y] : tab) c.expect(V(h) >= y - 1e-12, "output below input node");
    const auto& b = V.table.breakpoints();
    for (std::size_t i = 1; i + 1 < b.size(); ++i) {
      const double lam = (b[i].x - b[i - 1].x) / (b[i + 1].x - b[i - 1].x);
      worst_conc = std::max(worst_conc, b[i - 1].y + lam * (b[i + 1].y - b[i - 1].y) - b[i].y);
    }
    for (double h : {1.0, 1.25, 2.0, 10.0}) c.expect(V(h) == V(1.0), "not constant beyond 1");
    const auto rep = omega_of_omega(V);
    for (const auto& q : b) worst_rep = std::max(worst_rep, std::fabs(rep(q.x) - q.y));
    // Envelope of steepest supporting lines over the majorant's input.
    const auto input = omega_of_omega(eventually_constant_majorant(w, sup, ToleranceConfig{}));
    const auto hull = oracle::concave_hull(to_pts(input.table));
    for (int k = 0; k < 10000; ++k) {
      const double h = k / 9999.0;
      worst_env = std::max(worst_env, std::fabs(V(h) - oracle::interp(hull, h)));
    }
  }
  c.expect(worst_conc <= 1e-9, "second difference " + num(worst_conc));
  c.expect(worst_rep <= 1e-9, "reproduction gap " + num(worst_rep));
  c.expect(worst_env <= 1e-6, "envelope gap " + num(worst_env));

  std::vector<Point> sq;
  for (double h : tabulation_nodes(ToleranceConfig{})) sq.push_back({h, h * h});
  sq.push_back({2.0, 1.0});
  const auto lin = concave_majorant(ModulusTable(PiecewiseLinear(sq)));
  double worst_sq = 0.0;
  for (const auto& q : lin.table.breakpoints()) worst_sq = std::max(worst_sq, std::fabs(q.y - std::min(q.x, 1.0)));
  c.expect(worst_sq <= 1e-9, "min(h^2,1) majorant off by " + num(worst_sq));
  const auto full = prepare_target_modulus(ModulusSpec::tabulated(PiecewiseLinear(sq)), 1.0);
  double worst_full = 0.0;
  for (const auto& q : full.table.breakpoints())
    worst_full = std::max(worst_full, std::fabs(q.y - (2 * q.x - q.x * q.x)));
  if (c.out.ok)
    c.out.detail = "envelope " + num(worst_env) + ", concavity " + num(worst_conc) + ", min(h^2,1) -> min(h,1) " +
                   num(worst_sq) + ", full pipeline vs 2h-h^2 " + num(worst_full);
  return c.out;
}

// 6. Counterexample at N = 10^4.
Outcome criterion6() {
  Ctx c;
  const int N = 10000;
  const auto ce = build_counterexample(CounterexampleSpec{0.5, 1.0, N});
  long double ref = 0;
  for (int k = 1; k <= N; ++k) ref += 2.0L * (1.0L / (2.0L * k * std::pow(std::log(k + 1.0L), 2)));
  const double tv = total_variation(ce.f);
  const double rel = std::fabs(tv - static_cast<double>(ref)) / static_cast<double>(ref);
  c.expect(rel <= 1e-10, "(a) relative error " + num(rel));

  const auto prof = variation_function(ce.f).profile;
  const double slack = 2.0 / std::log(N + 1.0);
  int bad = 0;
  for (int n = 1; n <= N / 2; ++n)
    if (prof(ce.x(2 * n - 1)) + slack < 1.0 / std::log(n + 1.0)) ++bad;
  c.expect(bad == 0, "(b) " + std::to_string(bad) + " nodes below the integral bound");

  const double K = holder_seminorm(ce.f, 0.5);
  const double K_half = holder_seminorm(build_counterexample(CounterexampleSpec{0.5, 1.0, N / 2}).f, 0.5);
  const double drift = std::fabs(K - K_half) / K_half;
  c.expect(std::isfinite(K) && drift < 0.05, "(c) seminorm drift " + num(drift));

  // var_f of the untruncated function is at least the retained sum plus 1/log(N+2).
  double best = 0.0;
  int at = 0;
  for (int n = 1; n <= N; ++n) {
    const double r = varfn_untruncated_lower_bound(ce, n) / std::pow(ce.x(2 * n - 1), 0.5);
    if (r > best) {
      best = r;
      at = n;
    }
  }
  c.expect(best > 3.0, "(d) best ratio " + num(best));
  if (c.out.ok)
    c.out.detail = "(a) " + num(rel) + " (b) ok (c) K=" + num(K) + " drift " + num(drift) + " (d) ratio " + num(best) +
                   " at n=" + std::to_string(at);
  return c.out;
}

// 7. sqrt with sqrt.
Outcome criterion7() {
  Ctx c;
  const auto w = ModulusSpec::power(1.0, 0.5);
  const auto res = build_construction(w, w, 1.0);
  const auto& a = res.anchors.anchors;
  c.expect(a.size() == 2 && a[0] == 1.0 && a[1] == 0.0, "anchors are not {1, 0}");
  double worst = 0.0;
  for (const auto& q : res.f.breakpoints()) {
    const double want = q.x <= 0.25 ? std::sqrt(q.x) : 1.0 - std::sqrt(q.x);
    worst = std::max(worst, std::fabs(q.y - want));
  }
  c.expect(worst <= 1e-9, "shape gap " + num(worst));
  const auto& d = res.diagnostics;
  c.expect(d.varfn_check.worst_gap <= 1e-9, "var_f gap " + num(d.varfn_check.worst_gap));
  c.expect(d.modulus_check.worst_gap <= 1e-9, "modulus gap " + num(d.modulus_check.worst_gap));
  if (c.out.ok)
    c.out.detail = "shape " + num(worst) + ", var_f " + num(d.varfn_check.worst_gap) + ", modulus " +
                   num(d.modulus_check.worst_gap);
  return c.out;
}

// 8. sqrt with log-reciprocal.
Outcome criterion8() {
  Ctx c;
  ToleranceConfig cfg;
  cfg.stop_x = 1e-4;
  cfg.grid_n = 4096;
  const auto res = build_construction(ModulusSpec::power(1.0, 0.5), ModulusSpec::log_reciprocal(1.0), 1.0, cfg);
  const auto& a = res.anchors.anchors;
  for (std::size_t i = 1; i < a.size(); ++i) c.expect(a[i] < a[i - 1], "anchors not strictly decreasing");
  const auto& d = res.diagnostics;
  c.expect(d.midpoint_residual <= 1e-10, "midpoint residual " + num(d.midpoint_residual));
  c.expect(d.modulus_check.worst_gap <= cfg.eq_tol + d.mesh_slack, "modulus gap " + num(d.modulus_check.worst_gap));
  const double x_last = a.back();
  c.expect(d.varfn_check.worst_gap <= res.V(x_last) + 1e-6, "var_f gap " + num(d.varfn_check.worst_gap));
  if (c.out.ok)
    c.out.detail = std::to_string(a.size()) + " anchors, x_last " + num(x_last) + ", V(x_last) " +
                   num(res.V(x_last)) + ", modulus gap " + num(d.modulus_check.worst_gap) + ", var_f gap " +
                   num(d.varfn_check.worst_gap);
  return c.out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// 9. Byte-identical CLI artifacts across runs.
Outcome criterion9() {
  Ctx c;
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "bvkit_acceptance_cli";
  fs::remove_all(root);
  const std::string cli = BVKIT_CLI_PATH;
  const std::string root_s = root.string();
  const std::string sq = R"('{"kind":"power","L":1,"alpha":0.5}')";
  const std::string lg = R"('{"kind":"log_reciprocal","L":1}')";
  const std::vector<std::pair<std::string, std::string>> jobs = {
      {"ce", "counterexample --alpha 0.5 --beta 1 --terms 10000"},
      {"sqrt", "construct --omega " + sq + " --omega-prime " + sq + " --sup-norm 1"},
      {"log", "construct --omega " + sq + " --omega-prime " + lg + " --sup-norm 1 --stop-x 1e-4 --grid-n 4096"},
  };
  int files = 0;
  for (const auto& [name, args] : jobs) {
    for (int run = 0; run < 2; ++run) {
      const std::string dir = root_s + "/" + name + std::to_string(run);
      const std::string cmd = cli + " " + args + " --out " + dir + " > /dev/null";
      c.expect(std::system(cmd.c_str()) == 0, name + " run " + std::to_string(run) + " failed");
    }
    for (const auto& e : fs::directory_iterator(root / (name + "0"))) {
      const auto other = root / (name + "1") / e.path().filename();
      c.expect(fs::exists(other) && slurp(e.path()) == slurp(other), name + "/" + e.path().filename().string() + " differs");
      ++files;
    }
  }
  c.expect(files == 11, "expected 11 artifacts, found " + std::to_string(files));
  if (c.out.ok) c.out.detail = std::to_string(files) + " artifacts identical across two runs";
  return c.out;
}

} // namespace

int main() {
  struct Row {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Row> rows = {
      {1, "variation algebra", 10, criterion1},       {2, "omega_f <= omega_var", 30, criterion2},
      {3, "lipschitz equality", 1e9, criterion3},     {4, "minimal modulus tables", 1e9, criterion4},
      {5, "majorant pipeline", 1e9, criterion5},      {6, "counterexample N=1e4", 60, criterion6},
      {7, "sqrt / sqrt construction", 5, criterion7}, {8, "sqrt / log construction", 120, criterion8},
      {9, "cli determinism", 1e9, criterion9},
  };
  int failed = 0;
  for (const auto& r : rows) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = r.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > r.budget_s) o = {false, "took " + num(secs) + " s, budget " + num(r.budget_s) + " s"};
    if (!o.ok) ++failed;
    std::printf("[%s] %d %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", r.id, r.name, o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(rows.size()) - failed, rows.size());
  return failed == 0 ? 0 : 1;
}
