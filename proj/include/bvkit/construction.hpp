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

#ifndef BVKIT_CONSTRUCTION_HPP
#define BVKIT_CONSTRUCTION_HPP

#include "bvkit/core_types.hpp"
#include "bvkit/modulus.hpp"

#include <string>
#include <vector>

namespace bvkit {

// Builds f on [0, 1] with omega_f <= omega and var_f = V, where V is the
// concave, reproducing, eventually-constant majorant of a bounded omega'.
// Anchors 1 = x_0 > x_1 > ... mark the zeros of f and midpoints y_n the
// peaks; on [x_n, y_n] f rises like V and on [y_n, x_{n-1}] it falls like V.

enum class Termination { ReachedZero, BelowStopX, MaxIters };

const char* to_string(Termination t);

struct AnchorSequence {
  std::vector<double> anchors;   // x_0 = 1 > x_1 > ... > x_m >= 0
  std::vector<double> midpoints; // y_1 .. y_m with x_n < y_n < x_{n-1}
  Termination terminated = Termination::ReachedZero;
};

/// f(z) = sign * V(z) + offset on [lo, hi]; sign 0 marks the truncated stretch.
struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  int sign = 0;
  double offset = 0.0;
};

struct GapReport {
  double worst_gap = 0.0;
  double worst_at = 0.0;
  double slack = 0.0;
  bool ok = false;
};

struct ConstructionDiagnostics {
  GapReport modulus_check;
  GapReport varfn_check;
  double truncation_var_error = 0.0; // V(x_last)
  double midpoint_residual = 0.0;    // max |V(y_n) - (V(x_n) + V(x_{n-1}))/2|
  double mesh_slack = 0.0;           // max |discretized f - segment formula| at sub-segment midpoints
  std::vector<std::string> warnings;
};

struct ConstructionResult {
  ModulusTable V;
  AnchorSequence anchors;
  PiecewiseLinear f;
  std::vector<Segment> segments;
  ConstructionDiagnostics diagnostics;

  bool passed() const { return diagnostics.modulus_check.ok && diagnostics.varfn_check.ok; }
  /// Exact value from the segment records.
  double exact(double z) const;
};

/// Eventually-constant majorant, then its own minimal modulus, then the least
/// concave majorant. Flags record the reproduction and subadditivity checks.
ModulusTable prepare_target_modulus(const ModulusSpec& w_prime, double sup_norm, const ToleranceConfig& cfg = {});

/// Smallest y in [x, x_n] with V(y) = (V(x) + V(x_n)) / 2. V is piecewise
/// linear, so the bracketing segment is located by bisection over the nodes
/// and inverted exactly.
double find_midpoint(const ModulusTable& V, double x, double x_n);

/// Whether V(x + h) - V(x) <= w(h) + eq_tol for every h in [0, y_x - x].
/// Exact at V's node offsets; w is sampled on h_grid_n points in between.
bool in_admissible_set(const ModulusTable& V, const ModulusSpec& w, double x, double x_n, int h_grid_n,
                       double eq_tol = kDefaultEqTol);

struct AnchorStep {
  double x_next = 0.0;
  double y_next = 0.0;
  bool stalled = false; // no member strictly below x_n beyond bisect_tol
};

/// Inner approximation of inf A_{n+1}: upward grid scan for the first
/// member, then bisection against the last non-member. The result is always
/// a verified member.
AnchorStep next_anchor(const ModulusTable& V, const ModulusSpec& w, double x_n, const ToleranceConfig& cfg = {});

/// Advisory check that omega(h)/h keeps growing as h -> 0. Returns warnings.
std::vector<std::string> check_growth_hypothesis(const ModulusSpec& w);

ConstructionResult build_construction(const ModulusSpec& w, const ModulusSpec& w_prime, double sup_norm,
                                      const ToleranceConfig& cfg = {});

/// max over the exact candidate offsets of omega_f(h) - w(h) for the
/// discretized f.
GapReport verify_modulus_bound(const ConstructionResult& res, const ModulusSpec& w, const ToleranceConfig& cfg = {});

/// max |var_f(x) - V(x)| over a grid of [x_last, 1] plus all anchors and
/// midpoints. Slack includes the truncated mass V(x_last).
GapReport verify_variation_equals_V(const ConstructionResult& res, const ToleranceConfig& cfg = {});

} // namespace bvkit

#endif // BVKIT_CONSTRUCTION_HPP
