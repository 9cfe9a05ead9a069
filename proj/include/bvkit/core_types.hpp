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

#ifndef BVKIT_CORE_TYPES_HPP
#define BVKIT_CORE_TYPES_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace bvkit {

/// Raised when an argument lies outside the domain of a function or operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when an argument violates a structural precondition.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kDefaultEqTol = 1e-9;

/// Closed interval [a, b] with a <= b.
struct Interval {
  double a = 0.0;
  double b = 0.0;

  Interval() = default;
  Interval(double left, double right);

  double length() const { return b - a; }
  bool contains(double x, double tol = 0.0) const { return x >= a - tol && x <= b + tol; }
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

/// A continuous function on [x_0, x_n] given by breakpoints with strictly
/// increasing abscissae and linear interpolation in between.
class PiecewiseLinear {
public:
  explicit PiecewiseLinear(std::vector<Point> breakpoints);
  PiecewiseLinear(std::span<const double> xs, std::span<const double> ys);

  /// Builds a function whose segment slopes are supplied rather than derived
  /// from the breakpoints. `slopes.size()` must be `breakpoints.size() - 1`.
  static PiecewiseLinear with_slopes(std::vector<Point> breakpoints, std::vector<double> slopes);

  const std::vector<Point>& breakpoints() const { return points_; }
  const std::vector<double>& slopes() const { return slopes_; }
  std::size_t size() const { return points_.size(); }
  std::size_t segments() const { return points_.size() - 1; }
  Interval domain() const { return {points_.front().x, points_.back().x}; }

  /// Linear interpolation. Points within `clamp_tol` outside the domain are
  /// clamped to the nearest endpoint; anything farther raises DomainError.
  double operator()(double x, double clamp_tol = kDefaultEqTol) const;

  /// Index i of the segment [x_i, x_{i+1}] that contains x (x already in domain).
  std::size_t segment_index(double x) const;

  /// Interpolates inside segment i without bounds checking.
  double eval_segment(std::size_t i, double x) const;

  double x(std::size_t i) const { return points_[i].x; }
  double y(std::size_t i) const { return points_[i].y; }

private:
  PiecewiseLinear(std::vector<Point> breakpoints, std::vector<double> slopes, bool);
  void validate() const;

  std::vector<Point> points_;
  std::vector<double> slopes_;
};

double eval(const PiecewiseLinear& f, double x, double clamp_tol = kDefaultEqTol);

/// Non-decreasing sequence of points spanning an interval.
class Partition {
public:
  explicit Partition(std::vector<double> points);

  const std::vector<double>& points() const { return points_; }
  Interval span() const { return {points_.front(), points_.back()}; }

private:
  std::vector<double> points_;
};

struct PowerModulus {
  double L = 1.0;
  double alpha = 1.0;
};

struct LinearModulus {
  double L = 1.0;
};

/// h -> L / log(e + 1/h), with value 0 at h = 0.
struct LogReciprocalModulus {
  double L = 1.0;
};

/// Non-decreasing table on [0, H] starting at 0; held constant beyond H.
struct TabulatedModulus {
  PiecewiseLinear table;
};

/// A modulus of continuity: continuous, non-decreasing, zero at zero.
class ModulusSpec {
public:
  using Variant = std::variant<PowerModulus, LinearModulus, LogReciprocalModulus, TabulatedModulus>;

  ModulusSpec(PowerModulus m);
  ModulusSpec(LinearModulus m);
  ModulusSpec(LogReciprocalModulus m);
  ModulusSpec(TabulatedModulus m);

  static ModulusSpec power(double L, double alpha) { return ModulusSpec(PowerModulus{L, alpha}); }
  static ModulusSpec linear(double L) { return ModulusSpec(LinearModulus{L}); }
  static ModulusSpec log_reciprocal(double L) { return ModulusSpec(LogReciprocalModulus{L}); }
  static ModulusSpec tabulated(PiecewiseLinear table) { return ModulusSpec(TabulatedModulus{std::move(table)}); }

  const Variant& variant() const { return v_; }
  double operator()(double h) const;
  std::string kind() const;

private:
  Variant v_;
};

double eval_modulus(const ModulusSpec& w, double h);

/// Numeric tolerances and grid densities used across the toolkit.
struct ToleranceConfig {
  double eq_tol = 1e-9;
  int grid_n = 2048;
  double bisect_tol = 1e-12;
  double stop_x = 1e-4;
  int max_anchors = 10000;
  // Tabulation density for analytic moduli: uniform intervals on [0, 1] plus
  // a geometric refinement toward 0.
  int table_n = 256;
  int table_per_decade = 32;
  int table_decades = 8;

  void validate() const;
};

/// Nodes used to tabulate an analytic modulus on [0, 1]: a uniform grid with
/// `table_n` intervals merged with 10^{-k} refinements toward 0.
std::vector<double> tabulation_nodes(const ToleranceConfig& cfg);

} // namespace bvkit

#endif // BVKIT_CORE_TYPES_HPP
