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

#include "bvkit/core_types.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace bvkit {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> derive_slopes(const std::vector<Point>& pts) {
  std::vector<double> s;
  if (pts.size() < 2) return s;
  s.reserve(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    s.push_back((pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x));
  return s;
}

} // namespace

Interval::Interval(double left, double right) : a(left), b(right) {
  if (!(a <= b)) throw ArgumentError("interval requires a <= b, got [" + num(a) + ", " + num(b) + "]");
}

PiecewiseLinear::PiecewiseLinear(std::vector<Point> breakpoints)
    : points_(std::move(breakpoints)) {
  validate();
  slopes_ = derive_slopes(points_);
}

PiecewiseLinear::PiecewiseLinear(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw ArgumentError("x and y arrays differ in length");
  points_.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) points_.push_back({xs[i], ys[i]});
  validate();
  slopes_ = derive_slopes(points_);
}

PiecewiseLinear::PiecewiseLinear(std::vector<Point> breakpoints, std::vector<double> slopes, bool)
    : points_(std::move(breakpoints)), slopes_(std::move(slopes)) {
  validate();
  if (slopes_.size() != points_.size() - 1) throw ArgumentError("slope count must equal segment count");
}

PiecewiseLinear PiecewiseLinear::with_slopes(std::vector<Point> breakpoints, std::vector<double> slopes) {
  return PiecewiseLinear(std::move(breakpoints), std::move(slopes), true);
}

void PiecewiseLinear::validate() const {
  if (points_.size() < 2) throw ArgumentError("piecewise-linear function needs at least 2 breakpoints");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y))
      throw ArgumentError("non-finite breakpoint at index " + std::to_string(i));
    if (i > 0 && !(points_[i].x > points_[i - 1].x))
      throw ArgumentError("breakpoint x-coordinates must be strictly increasing (index " + std::to_string(i) +
                          ")");
  }
}

std::size_t PiecewiseLinear::segment_index(double x) const {
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](double v, const Point& p) { return v < p.x; });
  if (it == points_.begin()) return 0;
  std::size_t i = static_cast<std::size_t>(it - points_.begin()) - 1;
  return std::min(i, points_.size() - 2);
}

double PiecewiseLinear::eval_segment(std::size_t i, double x) const {
  const Point& p = points_[i];
  const Point& q = points_[i + 1];
  if (x == p.x) return p.y;
  if (x == q.x) return q.y;
  const double t = (x - p.x) / (q.x - p.x);
  return p.y + t * (q.y - p.y);
}

double PiecewiseLinear::operator()(double x, double clamp_tol) const {
  const double a = points_.front().x;
  const double b = points_.back().x;
  if (x < a) {
    if (a - x > clamp_tol) throw DomainError("x = " + num(x) + " is left of the domain start " + num(a));
    return points_.front().y;
  }
  if (x > b) {
    if (x - b > clamp_tol) throw DomainError("x = " + num(x) + " is right of the domain end " + num(b));
    return points_.back().y;
  }
  return eval_segment(segment_index(x), x);
}

double eval(const PiecewiseLinear& f, double x, double clamp_tol) { return f(x, clamp_tol); }

Partition::Partition(std::vector<double> points) : points_(std::move(points)) {
  if (points_.empty()) throw ArgumentError("partition must contain at least one point");
  for (std::size_t i = 1; i < points_.size(); ++i)
    if (points_[i] < points_[i - 1]) throw ArgumentError("partition points must be non-decreasing");
}

ModulusSpec::ModulusSpec(PowerModulus m) : v_(m) {
  if (!(m.L > 0.0)) throw ArgumentError("power modulus requires L > 0");
  if (!(m.alpha > 0.0 && m.alpha <= 1.0)) throw ArgumentError("power modulus requires alpha in (0, 1]");
}

ModulusSpec::ModulusSpec(LinearModulus m) : v_(m) {
  if (!(m.L > 0.0)) throw ArgumentError("linear modulus requires L > 0");
}

ModulusSpec::ModulusSpec(LogReciprocalModulus m) : v_(m) {
  if (!(m.L > 0.0)) throw ArgumentError("log-reciprocal modulus requires L > 0");
}

ModulusSpec::ModulusSpec(TabulatedModulus m) : v_(std::move(m)) {
  const auto& t = std::get<TabulatedModulus>(v_).table;
  if (t.x(0) != 0.0) throw ArgumentError("tabulated modulus must start at h = 0");
  if (t.y(0) != 0.0) throw ArgumentError("tabulated modulus must vanish at h = 0");
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t.y(i) < t.y(i - 1)) throw ArgumentError("tabulated modulus values must be non-decreasing");
}

double ModulusSpec::operator()(double h) const {
  if (h < 0.0 || std::isnan(h)) throw DomainError("modulus evaluated at negative h = " + num(h));
  return std::visit(
      [h](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PowerModulus>) {
          return h == 0.0 ? 0.0 : m.L * std::pow(h, m.alpha);
        } else if constexpr (std::is_same_v<T, LinearModulus>) {
          return m.L * h;
        } else if constexpr (std::is_same_v<T, LogReciprocalModulus>) {
          if (h == 0.0) return 0.0;
          return m.L / std::log(std::numbers::e + 1.0 / h);
        } else {
          const auto& t = m.table;
          if (h >= t.domain().b) return t.breakpoints().back().y;
          return t(h);
        }
      },
      v_);
}

std::string ModulusSpec::kind() const {
  switch (v_.index()) {
  case 0: return "power";
  case 1: return "linear";
  case 2: return "log_reciprocal";
  default: return "tabulated";
  }
}

double eval_modulus(const ModulusSpec& w, double h) { return w(h); }

void ToleranceConfig::validate() const {
  if (!(eq_tol > 0.0)) throw ArgumentError("eq_tol must be positive");
  if (grid_n < 16) throw ArgumentError("grid_n must be at least 16");
  if (!(bisect_tol > 0.0)) throw ArgumentError("bisect_tol must be positive");
  if (!(stop_x > 0.0)) throw ArgumentError("stop_x must be positive");
  if (max_anchors <= 0) throw ArgumentError("max_anchors must be positive");
  if (table_n < 4 || table_per_decade < 1 || table_decades < 0)
    throw ArgumentError("tabulation densities must be positive");
}

std::vector<double> tabulation_nodes(const ToleranceConfig& cfg) {
  std::vector<double> nodes;
  nodes.reserve(static_cast<std::size_t>(cfg.table_n + 1 + cfg.table_per_decade * cfg.table_decades));
  for (int i = 0; i <= cfg.table_n; ++i) nodes.push_back(static_cast<double>(i) / cfg.table_n);
  const double first_uniform = 1.0 / cfg.table_n;
  for (int k = 0; k < cfg.table_per_decade * cfg.table_decades; ++k) {
    const double h = std::pow(10.0, -static_cast<double>(k + 1) / cfg.table_per_decade);
    if (h < first_uniform) nodes.push_back(h);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

} // namespace bvkit
