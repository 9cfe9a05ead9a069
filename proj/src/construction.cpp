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

#include "bvkit/construction.hpp"

#include "bvkit/variation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bvkit {

const char* to_string(Termination t) {
  switch (t) {
  case Termination::ReachedZero: return "reached_zero";
  case Termination::BelowStopX: return "below_stop_x";
  case Termination::MaxIters: return "max_iters";
  }
  return "unknown";
}

double ConstructionResult::exact(double z) const {
  // Segments are stored in ascending order of their left endpoints.
  auto it = std::upper_bound(segments.begin(), segments.end(), z, [](double v, const Segment& s) { return v < s.lo; });
  while (it != segments.begin()) {
    --it;
    if (z >= it->lo && z <= it->hi) return it->sign == 0 ? 0.0 : it->sign * V(z) + it->offset;
    if (it->hi < z) break;
  }
  throw DomainError("point outside the constructed domain");
}

ModulusTable prepare_target_modulus(const ModulusSpec& w_prime, double sup_norm, const ToleranceConfig& cfg) {
  const ModulusTable lifted = eventually_constant_majorant(w_prime, sup_norm, cfg);
  const ModulusTable reproduced = omega_of_omega(lifted);
  ModulusTable V = concave_majorant(reproduced, cfg.eq_tol);

  const ModulusTable again = omega_of_omega(V);
  double drift = 0.0;
  for (std::size_t i = 0; i < V.table.size(); ++i) drift = std::max(drift, std::fabs(again.table.y(i) - V.table.y(i)));
  V.flags.reproducing_checked = drift <= cfg.eq_tol;

  bool subadditive = true;
  const auto nodes = V.nodes();
  for (std::size_t i = 0; i < nodes.size() && subadditive; ++i)
    for (std::size_t j = i; j < nodes.size(); ++j)
      if (V(nodes[i] + nodes[j]) > V.table.y(i) + V.table.y(j) + cfg.eq_tol) {
        subadditive = false;
        break;
      }
  V.flags.subadditive_checked = subadditive;
  return V;
}

double find_midpoint(const ModulusTable& V, double x, double x_n) {
  if (!(0.0 <= x && x <= x_n)) throw DomainError("find_midpoint requires 0 <= x <= x_n");
  const double vx = V(x);
  const double vn = V(x_n);
  const double target = 0.5 * (vx + vn);
  if (vx >= target) return x;

  const auto& pts = V.table.breakpoints();
  auto first = std::upper_bound(pts.begin(), pts.end(), x, [](double v, const Point& p) { return v < p.x; });
  auto last = std::lower_bound(pts.begin(), pts.end(), x_n, [](const Point& p, double v) { return p.x < v; });
  if (last < first) last = first;
  // First interior node with V >= target; values are monotone so this is a bisection.
  auto hit = std::lower_bound(first, last, target, [](const Point& p, double v) { return p.y < v; });

  Point left = hit == first ? Point{x, vx} : *(hit - 1);
  Point right = hit == last ? Point{x_n, vn} : *hit;
  if (right.y == target) return right.x;
  const double t = (target - left.y) / (right.y - left.y);
  const double y = left.x + t * (right.x - left.x);
  return std::clamp(y, left.x, right.x);
}

bool in_admissible_set(const ModulusTable& V, const ModulusSpec& w, double x, double x_n, int h_grid_n, double eq_tol) {
  const double y = find_midpoint(V, x, x_n);
  const double span = y - x;
  if (span <= 0.0) return true;
  const double vx = V(x);

  const auto& pts = V.table.breakpoints();
  auto it = std::upper_bound(pts.begin(), pts.end(), x, [](double v, const Point& p) { return v < p.x; });
  for (; it != pts.end() && it->x < y; ++it)
    if (it->y - vx > w(it->x - x) + eq_tol) return false;
  if (V(y) - vx > w(span) + eq_tol) return false;
  for (int k = 1; k < h_grid_n; ++k) {
    const double h = span * static_cast<double>(k) / h_grid_n;
    if (V(x + h) - vx > w(h) + eq_tol) return false;
  }
  return true;
}

AnchorStep next_anchor(const ModulusTable& V, const ModulusSpec& w, double x_n, const ToleranceConfig& cfg) {
  if (!(x_n > 0.0 && x_n <= 1.0)) throw DomainError("next_anchor requires 0 < x_n <= 1");
  const int n = cfg.grid_n;
  auto member = [&](double x) { return in_admissible_set(V, w, x, x_n, cfg.grid_n, cfg.eq_tol); };

  double prev = 0.0;
  double hit = x_n;
  int k = 0;
  for (; k < n; ++k) {
    const double x = k == n - 1 ? x_n : x_n * static_cast<double>(k) / (n - 1);
    if (member(x)) {
      hit = x;
      break;
    }
    prev = x;
  }

  AnchorStep step;
  if (k > 0) {
    double lo = prev;
    double hi = hit;
    while (hi - lo > cfg.bisect_tol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (member(mid) ? hi : lo) = mid;
    }
    hit = hi;
  }
  step.x_next = hit;
  step.stalled = !(x_n - hit > cfg.bisect_tol);
  step.y_next = find_midpoint(V, hit, x_n);
  return step;
}

std::vector<std::string> check_growth_hypothesis(const ModulusSpec& w) {
  std::vector<double> ratios;
  for (int k = 1; k <= 8; ++k) {
    const double h = std::pow(10.0, -k);
    ratios.push_back(w(h) / h);
  }
  std::vector<std::string> warnings;
  const std::size_t m = ratios.size();
  if (!(ratios[m - 1] > ratios[m - 2] && ratios[m - 2] > ratios[m - 3]))
    warnings.emplace_back("omega(h)/h does not grow as h -> 0 (checked at h = 1e-6..1e-8); the anchor "
                          "iteration may stall");
  return warnings;
}

namespace {

std::vector<Segment> assemble_segments(const ModulusTable& V, const AnchorSequence& seq) {
  std::vector<Segment> segs;
  const std::size_t m = seq.midpoints.size();
  const double x_last = seq.anchors.back();
  if (x_last > 0.0) segs.push_back({0.0, x_last, 0, 0.0});
  for (std::size_t n = m; n-- > 0;) {
    const double lo = seq.anchors[n + 1];
    const double mid = seq.midpoints[n];
    const double hi = seq.anchors[n];
    segs.push_back({lo, mid, +1, -V(lo)});
    segs.push_back({mid, hi, -1, V(hi)});
  }
  return segs;
}

PiecewiseLinear discretize(const ModulusTable& V, const std::vector<Segment>& segs) {
  const auto& nodes = V.table.breakpoints();
  std::vector<Point> pts;
  auto push = [&pts](double x, double y) {
    if (pts.empty() || x > pts.back().x) pts.push_back({x, y});
  };
  auto value = [&V](const Segment& s, double z) { return s.sign == 0 ? 0.0 : s.sign * V(z) + s.offset; };

  for (const auto& s : segs) {
    if (!(s.hi > s.lo)) continue;
    // Anchors are zeros of f; a peak shared by two segments keeps the value
    // pushed by the rising one.
    push(s.lo, s.sign < 0 ? value(s, s.lo) : 0.0);
    if (s.sign != 0) {
      auto it = std::upper_bound(nodes.begin(), nodes.end(), s.lo, [](double v, const Point& p) { return v < p.x; });
      for (; it != nodes.end() && it->x < s.hi; ++it) push(it->x, value(s, it->x));
    }
    push(s.hi, s.sign > 0 ? value(s, s.hi) : 0.0);
  }
  if (pts.size() < 2) pts = {{0.0, 0.0}, {1.0, 0.0}};
  return PiecewiseLinear(std::move(pts));
}

double mesh_error(const ConstructionResult& res) {
  double worst = 0.0;
  const auto& f = res.f;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const double z = 0.5 * (f.x(i) + f.x(i + 1));
    worst = std::max(worst, std::fabs(f.eval_segment(i, z) - res.exact(z)));
  }
  return worst;
}

} // namespace

ConstructionResult build_construction(const ModulusSpec& w, const ModulusSpec& w_prime, double sup_norm,
                                      const ToleranceConfig& cfg) {
  cfg.validate();
  std::vector<std::string> warnings = check_growth_hypothesis(w);
  ModulusTable V = prepare_target_modulus(w_prime, sup_norm, cfg);

  AnchorSequence seq;
  seq.anchors.push_back(1.0);
  for (;;) {
    const double x_n = seq.anchors.back();
    if (x_n == 0.0) {
      seq.terminated = Termination::ReachedZero;
      break;
    }
    if (x_n <= cfg.stop_x) {
      seq.terminated = Termination::BelowStopX;
      break;
    }
    if (static_cast<int>(seq.midpoints.size()) >= cfg.max_anchors) {
      seq.terminated = Termination::MaxIters;
      warnings.emplace_back("anchor iteration hit max_anchors before reaching stop_x");
      break;
    }
    const AnchorStep step = next_anchor(V, w, x_n, cfg);
    if (step.stalled) {
      seq.terminated = Termination::MaxIters;
      warnings.emplace_back("anchor iteration stalled: no admissible point strictly below the current anchor");
      break;
    }
    seq.anchors.push_back(step.x_next);
    seq.midpoints.push_back(step.y_next);
  }

  std::vector<Segment> segs = assemble_segments(V, seq);
  PiecewiseLinear f = discretize(V, segs);

  ConstructionResult res{std::move(V), std::move(seq), std::move(f), std::move(segs), {}};
  auto& d = res.diagnostics;
  d.warnings = std::move(warnings);
  d.truncation_var_error = res.V(res.anchors.anchors.back());
  for (std::size_t n = 0; n < res.anchors.midpoints.size(); ++n) {
    const double want = 0.5 * (res.V(res.anchors.anchors[n + 1]) + res.V(res.anchors.anchors[n]));
    d.midpoint_residual = std::max(d.midpoint_residual, std::fabs(res.V(res.anchors.midpoints[n]) - want));
  }
  d.mesh_slack = mesh_error(res);
  d.modulus_check = verify_modulus_bound(res, w, cfg);
  d.varfn_check = verify_variation_equals_V(res, cfg);
  return res;
}

GapReport verify_modulus_bound(const ConstructionResult& res, const ModulusSpec& w, const ToleranceConfig& cfg) {
  const auto& f = res.f;
  const std::vector<double> hs = candidate_offsets(f, f.domain().length());
  const std::vector<double> omega_f = minimal_modulus_at(f, hs);
  GapReport rep;
  rep.worst_gap = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const double gap = omega_f[i] - w(hs[i]);
    if (gap > rep.worst_gap) {
      rep.worst_gap = gap;
      rep.worst_at = hs[i];
    }
  }
  rep.slack = cfg.eq_tol + mesh_error(res);
  rep.ok = rep.worst_gap <= rep.slack;
  return rep;
}

GapReport verify_variation_equals_V(const ConstructionResult& res, const ToleranceConfig& cfg) {
  const PiecewiseLinear profile = variation_function(res.f).profile;
  const double x_last = res.anchors.anchors.back();
  std::vector<double> xs;
  for (int k = 0; k < cfg.grid_n; ++k) xs.push_back(x_last + (1.0 - x_last) * k / (cfg.grid_n - 1));
  xs.insert(xs.end(), res.anchors.anchors.begin(), res.anchors.anchors.end());
  xs.insert(xs.end(), res.anchors.midpoints.begin(), res.anchors.midpoints.end());
  std::sort(xs.begin(), xs.end());

  GapReport rep;
  for (double x : xs) {
    const double gap = std::fabs(profile(x) - res.V(x));
    if (gap > rep.worst_gap) {
      rep.worst_gap = gap;
      rep.worst_at = x;
    }
  }
  rep.slack = res.V(x_last) + cfg.eq_tol + mesh_error(res);
  rep.ok = rep.worst_gap <= rep.slack;
  return rep;
}

} // namespace bvkit
