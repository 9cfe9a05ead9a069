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

#include "bvkit/counterexample.hpp"

#include "bvkit/summation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bvkit {

CounterexampleSpec CounterexampleSpec::with_default_beta(double alpha, int n_terms) {
  CounterexampleSpec s;
  s.alpha = alpha;
  s.beta = 1.0 / alpha - 1.0;
  s.n_terms = n_terms;
  return s;
}

void CounterexampleSpec::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ArgumentError("alpha must lie in (0, 1)");
  const double beta_max = 1.0 / alpha - 1.0;
  if (!(beta > 0.0)) throw ArgumentError("beta must be positive");
  if (beta > beta_max * (1.0 + 1e-12))
    throw ArgumentError("beta = " + std::to_string(beta) + " exceeds 1/alpha - 1 = " + std::to_string(beta_max));
  if (n_terms < 2) throw ArgumentError("n_terms must be at least 2");
}

double counterexample_peak(int n) {
  const double l = std::log(static_cast<double>(n) + 1.0);
  return 1.0 / (2.0 * n * l * l);
}

CounterexampleFunction build_counterexample(const CounterexampleSpec& spec) {
  spec.validate();
  const int N = spec.n_terms;
  const std::size_t count = 2 * static_cast<std::size_t>(N) + 1;

  std::vector<double> xs(count), ys(count, 0.0);
  for (int n = 1; n <= N + 1; ++n) xs[2 * static_cast<std::size_t>(n) - 2] = std::pow(static_cast<double>(n), -spec.beta);
  for (int n = 1; n <= N; ++n) {
    const std::size_t k = 2 * static_cast<std::size_t>(n) - 1; // x_{2n}
    xs[k] = 0.5 * (xs[k - 1] + xs[k + 1]);
    ys[k] = counterexample_peak(n);
  }

  std::vector<Point> pts;
  pts.reserve(count + 1);
  pts.push_back({0.0, 0.0});
  for (std::size_t k = count; k-- > 0;) pts.push_back({xs[k], ys[k]});

  std::vector<double> suffix(static_cast<std::size_t>(N));
  CompensatedSum acc;
  for (int n = N; n >= 1; --n) {
    acc += ys[2 * static_cast<std::size_t>(n) - 1];
    suffix[static_cast<std::size_t>(n) - 1] = 2.0 * acc.value();
  }

  // sum_{k>N} 1/(k log(k+1)^2) <= (1 + 1/N) * integral_N^inf dx/((x+1) log(x+1)^2)
  const double tail = (1.0 + 1.0 / N) / std::log(static_cast<double>(N) + 1.0);

  return CounterexampleFunction{spec, PiecewiseLinear(std::move(pts)), std::move(xs), std::move(ys), tail,
                                std::move(suffix)};
}

double varfn_at_odd_node(const CounterexampleFunction& ce, int n) {
  if (n < 1 || n > ce.spec.n_terms)
    throw ArgumentError("odd node index " + std::to_string(n) + " outside [1, " + std::to_string(ce.spec.n_terms) +
                        "]");
  return ce.odd_node_variation[static_cast<std::size_t>(n) - 1];
}

double varfn_untruncated_lower_bound(const CounterexampleFunction& ce, int n) {
  // sum_{k>N} 1/(k log(k+1)^2) >= integral_{N+1}^inf dx/((x+1) log(x+1)^2) = 1/log(N+2)
  return varfn_at_odd_node(ce, n) + 1.0 / std::log(static_cast<double>(ce.spec.n_terms) + 2.0);
}

double holder_seminorm_nodes(const CounterexampleFunction& ce) {
  double best = 0.0;
  for (int n = 1; n <= ce.spec.n_terms; ++n) {
    const double half_gap = 0.5 * (ce.x(2 * n - 1) - ce.x(2 * n + 1));
    best = std::max(best, ce.y(2 * n) / std::pow(half_gap, ce.spec.alpha));
  }
  return best;
}

double holder_constant_bound(const CounterexampleSpec& spec) {
  spec.validate();
  const double l2 = std::log(2.0) * std::log(2.0);
  const double at_zero = std::pow(3.0, spec.alpha * spec.beta) / (2.0 * l2);
  // n^{-beta} - (n+1)^{-beta} >= min(beta, 1) (n+1)^{-beta-1}, and
  // alpha (beta + 1) - 1 <= 0 for admissible beta, so the supremum is at n = 1.
  const double global = std::pow(2.0 / std::min(spec.beta, 1.0), spec.alpha) / l2;
  return std::max(at_zero, global);
}

std::optional<int> gamma_blowup_witness(const CounterexampleFunction& ce, double gamma, double M) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw ArgumentError("gamma must lie in (0, 1)");
  for (int n = 1; n <= ce.spec.n_terms; ++n) {
    const double ratio = std::pow(static_cast<double>(n), ce.spec.beta * gamma) / std::log(n + 1.0);
    if (ratio >= M) return n;
  }
  return std::nullopt;
}

} // namespace bvkit
