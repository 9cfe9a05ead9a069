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

#include "bvkit/variation.hpp"

#include "bvkit/summation.hpp"

#include <algorithm>
#include <cmath>

namespace bvkit {

double variation_over_partition(const PiecewiseLinear& f, const Partition& p) {
  const auto& pts = p.points();
  const Interval dom = f.domain();
  if (!dom.contains(pts.front(), kDefaultEqTol) || !dom.contains(pts.back(), kDefaultEqTol))
    throw DomainError("partition is not contained in the function's domain");
  CompensatedSum sum;
  double prev = f(pts.front());
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double cur = f(pts[i]);
    sum += std::fabs(cur - prev);
    prev = cur;
  }
  return sum.value();
}

double total_variation(const PiecewiseLinear& f, double a, double b) {
  const Interval dom = f.domain();
  if (!(a <= b)) throw DomainError("total_variation requires a <= b");
  if (!dom.contains(a, kDefaultEqTol) || !dom.contains(b, kDefaultEqTol))
    throw DomainError("total_variation interval lies outside the domain");
  a = std::clamp(a, dom.a, dom.b);
  b = std::clamp(b, dom.a, dom.b);
  if (a == b) return 0.0;

  const std::size_t first = f.segment_index(a);
  const std::size_t last = f.segment_index(b);
  CompensatedSum sum;
  if (first == last) {
    sum += std::fabs(f.eval_segment(first, b) - f.eval_segment(first, a));
    return sum.value();
  }
  sum += std::fabs(f.y(first + 1) - f.eval_segment(first, a));
  for (std::size_t i = first + 1; i < last; ++i) sum += std::fabs(f.y(i + 1) - f.y(i));
  sum += std::fabs(f.eval_segment(last, b) - f.y(last));
  return sum.value();
}

double total_variation(const PiecewiseLinear& f) {
  const Interval dom = f.domain();
  return total_variation(f, dom.a, dom.b);
}

VariationProfile variation_function(const PiecewiseLinear& f) {
  const auto& pts = f.breakpoints();
  std::vector<Point> prof;
  std::vector<double> slopes;
  prof.reserve(pts.size());
  slopes.reserve(f.segments());
  CompensatedSum running;
  prof.push_back({pts.front().x, 0.0});
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    running += std::fabs(pts[i + 1].y - pts[i].y);
    prof.push_back({pts[i + 1].x, running.value()});
    slopes.push_back(std::fabs(f.slopes()[i]));
  }
  return {f, PiecewiseLinear::with_slopes(std::move(prof), std::move(slopes))};
}

double tail_variation_sum(const PiecewiseLinear& f, std::span<const double> z) {
  if (z.empty()) throw ArgumentError("tail_variation_sum needs a non-empty sequence");
  const Interval dom = f.domain();
  if (std::fabs(z.front() - dom.b) > kDefaultEqTol)
    throw ArgumentError("tail sequence must start at the right endpoint");
  for (std::size_t i = 1; i < z.size(); ++i)
    if (!(z[i] < z[i - 1])) throw ArgumentError("tail sequence must be strictly decreasing");
  if (!dom.contains(z.back(), kDefaultEqTol)) throw DomainError("tail sequence leaves the domain");

  CompensatedSum sum;
  for (std::size_t n = 0; n + 1 < z.size(); ++n) sum += total_variation(f, z[n + 1], z[n]);
  sum += total_variation(f, dom.a, std::max(dom.a, z.back()));
  return sum.value();
}

double lipschitz_constant(const PiecewiseLinear& f) {
  double lip = 0.0;
  for (double s : f.slopes()) lip = std::max(lip, std::fabs(s));
  return lip;
}

} // namespace bvkit
