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

#ifndef BVKIT_COUNTEREXAMPLE_HPP
#define BVKIT_COUNTEREXAMPLE_HPP

#include "bvkit/core_types.hpp"

#include <optional>
#include <vector>

namespace bvkit {

// An alpha-Hoelder function of bounded variation whose variation function is
// gamma-Hoelder for no gamma in (0, 1). Odd nodes x_{2n-1} = n^{-beta} carry
// the value 0, even nodes sit halfway between and carry
// y_{2n} = 1 / (2n log(n+1)^2); the function is linear in between and is
// truncated to 0 on [0, x_{2N+1}].

struct CounterexampleSpec {
  double alpha = 0.5;
  double beta = 1.0;
  int n_terms = 100;

  /// beta defaults to 1/alpha - 1, the largest admissible value.
  static CounterexampleSpec with_default_beta(double alpha, int n_terms);
  void validate() const;
};

struct CounterexampleFunction {
  CounterexampleSpec spec;
  PiecewiseLinear f;
  /// x_1 > x_2 > ... > x_{2N+1}; index k holds x_{k+1}.
  std::vector<double> nodes_x;
  /// y_1, y_2, ..., y_{2N+1}; odd entries are 0.
  std::vector<double> nodes_y;
  /// Certified upper bound on the variation mass dropped below x_{2N+1}.
  double truncation_var_error = 0.0;
  /// 2 * sum_{k=n..N} y_{2k} for n = 1..N (index n - 1), summed from the tail.
  std::vector<double> odd_node_variation;

  double x(int k) const { return nodes_x.at(static_cast<std::size_t>(k - 1)); }
  double y(int k) const { return nodes_y.at(static_cast<std::size_t>(k - 1)); }
};

/// y_{2n} = 1 / (2n log(n+1)^2), natural logarithm.
double counterexample_peak(int n);

CounterexampleFunction build_counterexample(const CounterexampleSpec& spec);

/// var_f(x_{2n-1}) of the truncated function, 2 sum_{k=n..N} y_{2k}.
double varfn_at_odd_node(const CounterexampleFunction& ce, int n);

/// Lower bound on var_f(x_{2n-1}) for the untruncated construction: the
/// retained sum plus the tail bound sum_{k>N} y_{2k} * 2 >= 1/log(N+2).
double varfn_untruncated_lower_bound(const CounterexampleFunction& ce, int n);

/// max over retained n of y_{2n} / ((x_{2n-1} - x_{2n+1}) / 2)^alpha.
double holder_seminorm_nodes(const CounterexampleFunction& ce);

/// Closed-form Hoelder constant: the larger of the bound at 0,
/// 3^{alpha beta} / (2 log(2)^2), and the global bound
/// (2 / min(beta, 1))^alpha / log(2)^2. The min(beta, 1) factor comes from
/// n^{-beta} - (n+1)^{-beta} >= beta (n+1)^{-beta-1}; dropping it undercounts
/// for beta < 1.
double holder_constant_bound(const CounterexampleSpec& spec);

/// Smallest n <= N with (1/log(n+1)) / (n^{-beta})^gamma >= M; nullopt when
/// the truncation is too short to witness it.
std::optional<int> gamma_blowup_witness(const CounterexampleFunction& ce, double gamma, double M);

} // namespace bvkit

#endif // BVKIT_COUNTEREXAMPLE_HPP
