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

#ifndef BVKIT_VARIATION_HPP
#define BVKIT_VARIATION_HPP

#include "bvkit/core_types.hpp"

#include <span>

namespace bvkit {

/// The variation function x -> var(f; a, x) of a parent function.
///
/// `profile` shares the parent's abscissae; its segment slopes are the
/// absolute values of the parent's slopes and `profile(a) == 0`.
struct VariationProfile {
  PiecewiseLinear parent;
  PiecewiseLinear profile;
};

/// Sum of |f(p_i) - f(p_{i-1})| over consecutive partition points.
double variation_over_partition(const PiecewiseLinear& f, const Partition& p);

/// Exact total variation of f on [a, b] (a subinterval of the domain).
/// Segments cut by a or b are interpolated at the cut point first.
double total_variation(const PiecewiseLinear& f, double a, double b);
double total_variation(const PiecewiseLinear& f);

VariationProfile variation_function(const PiecewiseLinear& f);

/// var(f; a, b) accumulated over the gaps of a strictly decreasing sequence
/// z_0 = b > z_1 > ... plus the stub [a, z_last].
double tail_variation_sum(const PiecewiseLinear& f, std::span<const double> z);

/// max |slope| over segments.
double lipschitz_constant(const PiecewiseLinear& f);

} // namespace bvkit

#endif // BVKIT_VARIATION_HPP
