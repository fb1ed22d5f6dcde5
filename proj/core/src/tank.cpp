// Copyright 2026 The resopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "resopt/tank.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "resopt/errors.hpp"
#include "resopt/table_io.hpp"

namespace resopt {

void validate_ipr(const PiecewiseLinear& ipr, const char* name) {
  if (ipr.eval(0.0) != 0.0) {
    throw ConfigError(std::string(name) + ": IPR must vanish at zero drawdown");
  }
  if (!ipr.is_nondecreasing()) {
    throw ConfigError(std::string(name) + ": IPR must be nondecreasing in drawdown");
  }
}

IprModel IprModel::per_fluid(std::optional<PiecewiseLinear> oil,
                             std::optional<PiecewiseLinear> gas,
                             std::optional<PiecewiseLinear> water) {
  IprModel m;
  m.kind_ = Kind::kPerFluid;
  m.curves_ = {std::move(oil), std::move(gas), std::move(water)};
  const char* names[] = {"oil IPR", "gas IPR", "water IPR"};
  for (std::size_t i = 0; i < 3; ++i) {
    if (m.curves_[i]) validate_ipr(*m.curves_[i], names[i]);
  }
  return m;
}

IprModel IprModel::fractional_flow(PiecewiseLinear total) {
  validate_ipr(total, "total IPR");
  IprModel m;
  m.kind_ = Kind::kFractionalFlow;
  m.curves_[0] = std::move(total);
  return m;
}

std::array<double, 3> IprModel::rates(double drawdown, const Saturations& s) const {
  if (kind_ == Kind::kFractionalFlow) {
    const double q = (*curves_[0])(drawdown);
    const double s_o = std::clamp(1.0 - s.s_w - s.s_g, 0.0, 1.0);
    return {q * s_o, q * std::clamp(s.s_g, 0.0, 1.0), q * std::clamp(s.s_w, 0.0, 1.0)};
  }
  std::array<double, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (curves_[i]) out[i] = (*curves_[i])(drawdown);
  }
  return out;
}

Saturations saturations(const TankState& s, const PvtModel& pvt) {
  if (!(s.v_p > 0.0)) throw NumericError("saturations: pore volume must be > 0");
  return {s.v_o * pvt.b_o(s.p) / s.v_p, s.v_g * pvt.b_g(s.p) / s.v_p,
          s.v_w * pvt.b_w(s.p) / s.v_p};
}

double volume_residual(const TankState& s, const PvtModel& pvt) {
  return s.v_o * pvt.b_o(s.p) + s.v_g * pvt.b_g(s.p) + s.v_w * pvt.b_w(s.p) - s.v_p;
}

TankState make_consistent_state(const PvtModel& pvt, double p, double v_p, const Saturations& s) {
  return {s.s_o * v_p / pvt.b_o(p), s.s_g * v_p / pvt.b_g(p), s.s_w * v_p / pvt.b_w(p), v_p, p};
}

Production well_production(const TankState& s, double p_bh, const IprModel& ipr,
                           const PvtModel& pvt) {
  if (p_bh < 0.0 || p_bh > s.p) {
    throw InfeasibleError("bottom-hole pressure " + format_number(p_bh) +
                          " Bara outside [0, " + format_number(s.p) + "]");
  }
  const auto q = ipr.rates(s.p - p_bh, saturations(s, pvt));
  return {q[0] / pvt.b_o(s.p), q[1] / pvt.b_g(s.p), q[2] / pvt.b_w(s.p)};
}

namespace {

// Fluid-volume balance of the next step as a function of the next pressure:
// remaining fluids at P' minus the linearized pore volume at P'. Decreasing
// in P' whenever the free gas is nonnegative.
struct XiBalance {
  const PvtModel& pvt;
  double v_o1;     // oil left
  double v_w1;     // water left
  double gas;      // free plus dissolved gas left, Sm3
  double v_p;      // pore volume at P
  double p;        // current pressure

  double free_gas(double q) const { return gas - v_o1 * pvt.r_s(q); }

  double operator()(double q) const {
    return v_o1 * pvt.b_o(q) + v_w1 * pvt.b_w(q) + free_gas(q) * pvt.b_g(q) -
           v_p * (1.0 + pvt.c_f * (q - p));
  }

  // Quadratic coefficients of the balance in (q - a) on a segment [a, b]
  // where every curve is affine.
  std::array<double, 3> quadratic(double a, double b) const {
    const double mid = 0.5 * (a + b);
    const double bo0 = pvt.b_o(a), bo1 = pvt.b_o.slope(mid);
    const double bw0 = pvt.b_w(a), bw1 = pvt.b_w.slope(mid);
    const double bg0 = pvt.b_g(a), bg1 = pvt.b_g.slope(mid);
    const double rs0 = pvt.r_s(a), rs1 = pvt.r_s.slope(mid);
    const double g0 = gas - v_o1 * rs0;
    const double c0 = v_o1 * bo0 + v_w1 * bw0 + g0 * bg0 - v_p * (1.0 + pvt.c_f * (a - p));
    const double c1 = v_o1 * bo1 + v_w1 * bw1 + g0 * bg1 - v_o1 * rs1 * bg0 - v_p * pvt.c_f;
    const double c2 = -v_o1 * rs1 * bg1;
    return {c0, c1, c2};
  }
};

// Root in [0, len] of c0 + c1 t + c2 t^2, if any.
std::optional<double> quadratic_root(const std::array<double, 3>& c, double len) {
  const auto [c0, c1, c2] = c;
  const auto inside = [&](double t) -> std::optional<double> {
    const double slack = 1e-9 * std::max(1.0, len);
    if (std::isfinite(t) && t >= -slack && t <= len + slack) return std::clamp(t, 0.0, len);
    return std::nullopt;
  };
  const double scale = std::abs(c1) * len + std::abs(c0);
  if (std::abs(c2) * len * len <= 1e-14 * scale) {
    if (c1 == 0.0) return std::nullopt;
    return inside(-c0 / c1);
  }
  const double disc = c1 * c1 - 4.0 * c2 * c0;
  if (disc < 0.0) return std::nullopt;
  const double sq = std::sqrt(disc);
  // Numerically stable pair of roots.
  const double q = -0.5 * (c1 + std::copysign(sq, c1));
  const double r1 = q / c2;
  const double r2 = q != 0.0 ? c0 / q : r1;
  if (auto t = inside(r2)) return t;
  return inside(r1);
}

double bisect(const XiBalance& g, double lo, double hi, double tol) {
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double solve_pressure_xi(const TankState& s, const Production& prod, const PvtModel& pvt,
                         const XiOptions& options) {
  if (prod.f_o < 0.0 || prod.f_g < 0.0 || prod.f_w < 0.0) {
    throw InfeasibleError("productions must be nonnegative");
  }
  const XiBalance g{pvt, s.v_o - prod.f_o, s.v_w - prod.f_w,
                    s.v_g - prod.f_g + s.v_o * pvt.r_s(s.p), s.v_p, s.p};
  if (g.v_o1 < 0.0 || g.v_w1 < 0.0 || g.gas < 0.0) {
    throw InfeasibleError("production exceeds the fluids in place");
  }

  // Bracket: the balance is positive at low pressure and negative above the
  // root. Production only lowers the pressure, so [0, P + margin] suffices
  // unless the state itself is off balance.
  const double lo = 0.0;
  double hi = s.p + std::max(1.0, 0.1 * s.p);
  if (g(lo) < 0.0) {
    throw NumericError("pressure solve: fluids cannot fill the pore volume at any pressure >= 0");
  }
  for (int i = 0; i < 60 && g(hi) > 0.0; ++i) hi *= 2.0;
  if (g(hi) > 0.0) throw NumericError("pressure solve: no sign change on the search interval");

  // Knots of the piecewise description inside the bracket.
  std::vector<double> knots{lo};
  for (double x : pvt.breakpoints()) {
    if (x > lo && x < hi) knots.push_back(x);
  }
  knots.push_back(hi);

  // Locate the sign change, checking monotonicity where the free gas is
  // physical.
  std::size_t seg = knots.size() - 2;
  double prev = g(knots[0]);
  for (std::size_t k = 1; k < knots.size(); ++k) {
    const double cur = g(knots[k]);
    const bool physical = g.free_gas(knots[k - 1]) >= 0.0 && g.free_gas(knots[k]) >= 0.0;
    const double slop = 1e-12 * std::max(std::abs(prev), s.v_p);
    if (physical && cur > prev + slop) {
      throw ConfigError("pressure solve: fluid volume increases with pressure between " +
                        format_number(knots[k - 1]) + " and " + format_number(knots[k]) +
                        " Bara; check the PVT tables");
    }
    if (prev >= 0.0 && cur <= 0.0) {
      seg = k - 1;
      break;
    }
    prev = cur;
  }

  const double a = knots[seg];
  const double b = knots[seg + 1];
  if (options.method != XiMethod::kBisection) {
    if (auto t = quadratic_root(g.quadratic(a, b), b - a)) return a + *t;
    if (options.method == XiMethod::kSegment) {
      throw NumericError("pressure solve: segment inversion found no root");
    }
  }
  return bisect(g, a, b, options.tol);
}

TankState step_dynamics(const TankState& s, const Production& prod, const PvtModel& pvt,
                        const XiOptions& options) {
  const double p1 = solve_pressure_xi(s, prod, pvt, options);
  TankState next;
  next.p = p1;
  next.v_o = s.v_o - prod.f_o;
  next.v_w = s.v_w - prod.f_w;
  next.v_g = s.v_g - prod.f_g + (s.v_o * pvt.r_s(s.p) - next.v_o * pvt.r_s(p1));
  next.v_p = pore_volume_linearized(s.v_p, s.p, p1, pvt.c_f);
  if (next.v_g < 0.0) {
    // Rounding of the liberated-gas term can leave a hair below zero.
    const double scale = std::max({s.v_g, s.v_o * pvt.r_s(s.p), 1.0});
    if (next.v_g < -1e-12 * scale) {
      throw InfeasibleError("gas production exceeds the free gas available");
    }
    next.v_g = 0.0;
  }
  return next;
}

}  // namespace resopt
