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

#include "bvkit/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bvkit {

namespace {

// Offsets with their increments and the running maximum, i.e. omega_f at
// every candidate offset.
struct OffsetTable {
  std::vector<double> offsets;
  std::vector<double> running_max;

  double omega_at(const PiecewiseLinear& f, double h) const {
    auto it = std::upper_bound(offsets.begin(), offsets.end(), h);
    double best = it == offsets.begin() ? 0.0 : running_max[static_cast<std::size_t>(it - offsets.begin()) - 1];
    return std::max(best, max_increment(f, h));
  }
};

OffsetTable offset_table(const PiecewiseLinear& f, double h_max) {
  OffsetTable t;
  t.offsets = candidate_offsets(f, h_max);
  t.running_max.reserve(t.offsets.size());
  double best = 0.0;
  for (double d : t.offsets) {
    best = std::max(best, max_increment(f, d));
    t.running_max.push_back(best);
  }
  return t;
}

// Ascending-query evaluator for a piecewise-linear function.
class Cursor {
public:
  explicit Cursor(const PiecewiseLinear& f) : f_(f) {}

  double operator()(double x) {
    const std::size_t last = f_.size() - 2;
    while (k_ < last && f_.x(k_ + 1) <= x) ++k_;
    return f_.eval_segment(k_, x);
  }

private:
  const PiecewiseLinear& f_;
  std::size_t k_ = 0;
};

} // namespace

ModulusTable::ModulusTable(PiecewiseLinear t, ModulusFlags f) : table(std::move(t)), flags(f) {
  if (table.x(0) != 0.0) throw ArgumentError("modulus table must start at h = 0");
  if (table.y(0) != 0.0) throw ArgumentError("modulus table must vanish at h = 0");
  for (std::size_t i = 1; i < table.size(); ++i)
    if (table.y(i) < table.y(i - 1)) throw ArgumentError("modulus table must be non-decreasing");
}

double ModulusTable::operator()(double h) const {
  if (h < 0.0 || std::isnan(h)) throw DomainError("modulus table evaluated at negative h");
  if (h >= horizon()) return tail();
  return table(h);
}

std::vector<double> ModulusTable::nodes() const {
  std::vector<double> out;
  out.reserve(table.size());
  for (const auto& p : table.breakpoints()) out.push_back(p.x);
  return out;
}

std::vector<double> candidate_offsets(const PiecewiseLinear& f, double h_max) {
  std::vector<double> out;
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = f.x(j) - f.x(i);
      if (d > h_max) break;
      out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double max_increment(const PiecewiseLinear& f, double delta) {
  if (delta < 0.0) throw DomainError("offset must be non-negative");
  if (delta == 0.0) return 0.0;
  const std::size_t n = f.size();
  const double a = f.x(0);
  const double b = f.x(n - 1);
  if (delta >= b - a) return std::fabs(f.y(n - 1) - f.y(0));

  double best = 0.0;
  Cursor ahead(f);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = f.x(i) + delta;
    if (t > b) break;
    best = std::max(best, std::fabs(ahead(t) - f.y(i)));
  }
  Cursor behind(f);
  for (std::size_t j = 0; j < n; ++j) {
    const double s = f.x(j) - delta;
    if (s < a) continue;
    best = std::max(best, std::fabs(f.y(j) - behind(s)));
  }
  return best;
}

std::vector<double> minimal_modulus_at(const PiecewiseLinear& f, std::span<const double> hs) {
  const double len = f.domain().length();
  double h_max = 0.0;
  for (double h : hs) {
    if (h < 0.0 || std::isnan(h)) throw DomainError("minimal modulus requires h >= 0");
    h_max = std::max(h_max, std::min(h, len));
  }
  const OffsetTable table = offset_table(f, h_max);
  std::vector<double> out;
  out.reserve(hs.size());
  for (double h : hs) out.push_back(h == 0.0 ? 0.0 : table.omega_at(f, std::min(h, len)));
  return out;
}

double minimal_modulus(const PiecewiseLinear& f, double h) {
  const double hs[1] = {h};
  return minimal_modulus_at(f, hs).front();
}

ModulusTable minimal_modulus_table(const PiecewiseLinear& f, std::span<const double> grid) {
  if (grid.size() < 2) throw ArgumentError("modulus grid needs at least two points");
  if (grid.front() != 0.0) throw ArgumentError("modulus grid must start at 0");
  std::vector<double> values = minimal_modulus_at(f, grid);
  std::vector<Point> pts;
  pts.reserve(grid.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    prev = std::max(prev, values[i]);
    pts.push_back({grid[i], prev});
  }
  return ModulusTable(PiecewiseLinear(std::move(pts)));
}

ModulusCheck is_modulus_for(const ModulusSpec& w, const PiecewiseLinear& f, int grid_n, double eq_tol) {
  if (grid_n < 1) throw ArgumentError("grid_n must be positive");
  const double len = f.domain().length();
  const OffsetTable table = offset_table(f, len);

  std::vector<double> hs = table.offsets;
  for (int k = 1; k <= grid_n; ++k) hs.push_back(len * static_cast<double>(k) / grid_n);
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

  ModulusCheck out;
  out.worst_gap = -std::numeric_limits<double>::infinity();
  for (double h : hs) {
    const double gap = table.omega_at(f, h) - w(h);
    if (gap > out.worst_gap) {
      out.worst_gap = gap;
      out.worst_h = h;
    }
  }
  out.ok = out.worst_gap <= eq_tol;
  return out;
}

ModulusTable omega_of_omega(const ModulusTable& w) {
  const auto& pts = w.table.breakpoints();
  const double horizon = w.horizon();
  std::vector<Point> out;
  out.reserve(pts.size());
  double prev = 0.0;
  for (const auto& node : pts) {
    const double h = node.x;
    double best = 0.0;
    if (h > 0.0) {
      for (const auto& p : pts) {
        if (p.x >= horizon) break;
        best = std::max(best, w(p.x + h) - p.y);
      }
      for (const auto& p : pts) {
        const double s = p.x - h;
        if (s < 0.0) continue;
        best = std::max(best, p.y - w(s));
      }
    }
    prev = std::max(prev, best);
    out.push_back({h, prev});
  }
  return ModulusTable(PiecewiseLinear(std::move(out)));
}

ModulusTable omega_of_omega(const ModulusSpec& w) {
  const auto* tab = std::get_if<TabulatedModulus>(&w.variant());
  if (tab == nullptr)
    throw ArgumentError("omega_of_omega requires a tabulated modulus with a constant tail, got " + w.kind());
  return omega_of_omega(ModulusTable(tab->table));
}

ModulusTable eventually_constant_majorant(const ModulusSpec& w, double sup_norm, const ToleranceConfig& cfg) {
  const double at_one = w(1.0);
  if (!(sup_norm >= at_one)) throw ArgumentError("sup_norm is below w(1)");
  std::vector<double> nodes = tabulation_nodes(cfg);
  if (const auto* tab = std::get_if<TabulatedModulus>(&w.variant())) {
    if (sup_norm < tab->table.breakpoints().back().y)
      throw ArgumentError("sup_norm is below the table maximum");
    for (const auto& p : tab->table.breakpoints())
      if (p.x <= 1.0) nodes.push_back(p.x);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  }
  const double lift = sup_norm - at_one;
  std::vector<Point> pts;
  pts.reserve(nodes.size());
  for (double h : nodes) pts.push_back({h, std::min(sup_norm, w(h) + lift * h)});
  pts.front().y = 0.0;
  pts.back().y = sup_norm;
  return ModulusTable(PiecewiseLinear(std::move(pts)));
}

namespace {

// Largest value by which a node dips below the chord of its neighbours.
double max_second_difference(const PiecewiseLinear& t) {
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    const double lam = (t.x(i) - t.x(i - 1)) / (t.x(i + 1) - t.x(i - 1));
    const double chord = t.y(i - 1) + lam * (t.y(i + 1) - t.y(i - 1));
    worst = std::max(worst, chord - t.y(i));
  }
  return worst;
}

} // namespace

ModulusTable concave_majorant(const ModulusTable& w, double eq_tol) {
  const auto& pts = w.table.breakpoints();
  std::vector<Point> hull;
  hull.reserve(pts.size());
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const Point& o = hull[hull.size() - 2];
      const Point& q = hull.back();
      const double cross = (q.x - o.x) * (p.y - o.y) - (q.y - o.y) * (p.x - o.x);
      if (cross < 0.0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }

  std::vector<Point> out;
  out.reserve(pts.size());
  std::size_t e = 0;
  for (const auto& p : pts) {
    while (e + 2 < hull.size() && hull[e + 1].x <= p.x) ++e;
    const Point& l = hull[e];
    const Point& r = hull[std::min(e + 1, hull.size() - 1)];
    double v;
    if (p.x == l.x) v = l.y;
    else if (p.x == r.x) v = r.y;
    else v = l.y + (p.x - l.x) / (r.x - l.x) * (r.y - l.y);
    out.push_back({p.x, std::max(v, p.y)});
  }
  for (std::size_t i = 1; i < out.size(); ++i) out[i].y = std::max(out[i].y, out[i - 1].y);

  ModulusTable res(PiecewiseLinear(std::move(out)), w.flags);
  res.flags.concave_checked = max_second_difference(res.table) <= eq_tol;
  return res;
}

ConcavityReport check_concavity_facts(const ModulusTable& g, double eq_tol, int grid) {
  ConcavityReport rep;
  rep.slopes_non_increasing = max_second_difference(g.table) <= eq_tol;

  const double horizon = g.horizon();
  std::vector<double> pts;
  for (int i = 0; i <= grid; ++i) pts.push_back(horizon * i / grid);
  double worst = 0.0;
  for (std::size_t ix = 0; ix < pts.size(); ++ix) {
    for (std::size_t iy = 0; iy <= ix; ++iy) {
      for (std::size_t ih = 1; ih < pts.size(); ++ih) {
        const double x = pts[ix], y = pts[iy], h = pts[ih];
        const double lhs = g(x + h) - g(x);
        const double rhs = g(y + h) - g(y);
        if (lhs - rhs > eq_tol && lhs - rhs > worst) {
          worst = lhs - rhs;
          rep.violation = IncrementViolation{x, y, h, lhs, rhs};
        }
      }
    }
  }
  rep.increments_decreasing = !rep.violation.has_value();

  const auto& t = g.table;
  for (double eps : {0.1, 0.01, 0.001}) {
    if (eps >= horizon) continue;
    TailLipschitz tl;
    tl.eps = eps;
    const std::size_t first = t.segment_index(eps);
    tl.slope_at_eps = t.slopes()[first];
    for (std::size_t i = first; i < t.segments() && t.x(i) < 1.0; ++i)
      tl.lipschitz = std::max(tl.lipschitz, std::fabs(t.slopes()[i]));
    rep.lipschitz.push_back(tl);
  }
  return rep;
}

double holder_seminorm(const PiecewiseLinear& f, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ArgumentError("Hoelder exponent must lie in (0, 1]");
  const std::size_t n = f.size();
  std::vector<double> pmax(n), pmin(n);
  pmax[0] = pmin[0] = f.y(0);
  for (std::size_t j = 1; j < n; ++j) {
    pmax[j] = std::max(pmax[j - 1], f.y(j));
    pmin[j] = std::min(pmin[j - 1], f.y(j));
  }
  double best = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    best = std::max(best, std::fabs(f.y(i + 1) - f.y(i)) / std::pow(f.x(i + 1) - f.x(i), alpha));

  // Scanning leftward from each i, the reachable |f(x_i) - f(x_j)| is bounded
  // by the prefix range while the denominator grows, so the scan can stop once
  // the bound can no longer beat the current best.
  for (std::size_t i = 1; i < n; ++i) {
    const double yi = f.y(i);
    for (std::size_t j = i; j-- > 0;) {
      const double bound = std::max(pmax[j] - yi, yi - pmin[j]);
      if (bound <= 0.0) break;
      const double denom = std::pow(f.x(i) - f.x(j), alpha);
      if (bound <= best * denom) break;
      best = std::max(best, std::fabs(yi - f.y(j)) / denom);
    }
  }
  return best;
}

} // namespace bvkit
