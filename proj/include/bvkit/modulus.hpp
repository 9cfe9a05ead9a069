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

#ifndef BVKIT_MODULUS_HPP
#define BVKIT_MODULUS_HPP

#include "bvkit/core_types.hpp"

#include <optional>
#include <span>
#include <vector>

namespace bvkit {

struct ModulusFlags {
  bool subadditive_checked = false;
  bool concave_checked = false;
  bool reproducing_checked = false;

  bool operator==(const ModulusFlags&) const = default;
};

/// A tabulated modulus on [0, H] with value 0 at 0, held constant beyond H.
struct ModulusTable {
  PiecewiseLinear table;
  ModulusFlags flags;

  explicit ModulusTable(PiecewiseLinear t, ModulusFlags f = {});

  double operator()(double h) const;
  double tail() const { return table.breakpoints().back().y; }
  double horizon() const { return table.domain().b; }
  std::vector<double> nodes() const;
  ModulusSpec as_spec() const { return ModulusSpec::tabulated(table); }
};

/// Sorted distinct offsets b_j - b_i in (0, h_max] between breakpoints of f.
std::vector<double> candidate_offsets(const PiecewiseLinear& f, double h_max);

/// sup_x |f(x + delta) - f(x)| for a fixed offset. Exact: for fixed delta the
/// increment is piecewise linear in x with kinks at b_i and b_j - delta.
double max_increment(const PiecewiseLinear& f, double delta);

/// Exact minimal modulus sup{|f(x) - f(y)| : |x - y| <= h}. h beyond the
/// domain length is clamped to it.
double minimal_modulus(const PiecewiseLinear& f, double h);

/// Exact minimal modulus at many offsets, sharing one candidate enumeration.
std::vector<double> minimal_modulus_at(const PiecewiseLinear& f, std::span<const double> hs);

/// Minimal modulus sampled on an increasing grid starting at 0.
ModulusTable minimal_modulus_table(const PiecewiseLinear& f, std::span<const double> grid);

struct ModulusCheck {
  bool ok = false;
  double worst_h = 0.0;
  double worst_gap = 0.0; // max over checked h of omega_f(h) - w(h)
};

/// Checks omega_f <= w + eq_tol on the exact candidate offsets of f plus a
/// uniform grid of grid_n points over (0, |domain|].
ModulusCheck is_modulus_for(const ModulusSpec& w, const PiecewiseLinear& f, int grid_n,
                            double eq_tol = kDefaultEqTol);

/// The minimal modulus of w itself, h -> sup_{x >= 0} w(x + h) - w(x),
/// evaluated at w's nodes.
ModulusTable omega_of_omega(const ModulusTable& w);
/// Requires a tabulated modulus; analytic variants carry no constant tail.
ModulusTable omega_of_omega(const ModulusSpec& w);

/// h -> w(h) + (sup_norm - w(1)) h on [0, 1], sup_norm beyond, tabulated on
/// `tabulation_nodes(cfg)` plus the table nodes of a tabulated w.
ModulusTable eventually_constant_majorant(const ModulusSpec& w, double sup_norm,
                                          const ToleranceConfig& cfg = {});

/// Least concave majorant via the upper hull of the table nodes, evaluated
/// back on the same nodes.
ModulusTable concave_majorant(const ModulusTable& w, double eq_tol = kDefaultEqTol);

struct IncrementViolation {
  double x = 0.0;
  double y = 0.0;
  double h = 0.0;
  double lhs = 0.0; // g(x + h) - g(x)
  double rhs = 0.0; // g(y + h) - g(y)
};

struct TailLipschitz {
  double eps = 0.0;
  double lipschitz = 0.0;    // max |slope| over [eps, 1]
  double slope_at_eps = 0.0; // right slope at eps
};

struct ConcavityReport {
  bool slopes_non_increasing = true;
  bool increments_decreasing = true;
  std::optional<IncrementViolation> violation;
  std::vector<TailLipschitz> lipschitz;
};

/// Grid check of g(x+h) - g(x) <= g(y+h) - g(y) for x >= y, h >= 0, and the
/// Lipschitz constant of g on [eps, 1] for eps in {0.1, 0.01, 0.001}.
ConcavityReport check_concavity_facts(const ModulusTable& g, double eq_tol = kDefaultEqTol, int grid = 64);

/// sup |f(x) - f(y)| / |x - y|^alpha. For piecewise-linear f the supremum is
/// attained at a pair of breakpoints.
double holder_seminorm(const PiecewiseLinear& f, double alpha);

} // namespace bvkit

#endif // BVKIT_MODULUS_HPP
