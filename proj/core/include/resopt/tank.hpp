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

#ifndef RESOPT_TANK_HPP_
#define RESOPT_TANK_HPP_

#include <array>
#include <optional>

#include "resopt/piecewise_linear.hpp"
#include "resopt/pvt.hpp"

namespace resopt {

// Content of a tank-like reservoir.
struct TankState {
  double v_o = 0.0;  // oil, Sm3
  double v_g = 0.0;  // free gas, Sm3
  double v_w = 0.0;  // water, Sm3
  double v_p = 0.0;  // pore volume, m3
  double p = 0.0;    // pressure, Bara
};

// Standard volumes produced during one time step.
struct Production {
  double f_o = 0.0;
  double f_g = 0.0;
  double f_w = 0.0;
};

struct Saturations {
  double s_o = 0.0;
  double s_g = 0.0;
  double s_w = 0.0;
};

// Inflow performance of a single well: reservoir-volume rate per time step as
// a function of drawdown (reservoir minus bottom-hole pressure).
//
// Two forms are supported. Per-fluid curves give each fluid its own IPR and
// ignore saturations (a missing curve means the fluid is not produced). The
// fractional-flow form splits one total-liquid curve between fluids in
// proportion to their saturations.
class IprModel {
 public:
  enum class Kind { kPerFluid, kFractionalFlow };

  static IprModel per_fluid(std::optional<PiecewiseLinear> oil, std::optional<PiecewiseLinear> gas,
                            std::optional<PiecewiseLinear> water);
  static IprModel fractional_flow(PiecewiseLinear total);

  Kind kind() const { return kind_; }

  // Reservoir-volume rates (oil, gas, water) at the given drawdown.
  std::array<double, 3> rates(double drawdown, const Saturations& s) const;

 private:
  IprModel() = default;

  Kind kind_ = Kind::kPerFluid;
  std::array<std::optional<PiecewiseLinear>, 3> curves_;
};

// Throws ConfigError unless ipr(0) = 0 and ipr is nondecreasing.
void validate_ipr(const PiecewiseLinear& ipr, const char* name);

// S^i = V^i B_i(P) / V^p. Throws NumericError if v_p <= 0.
Saturations saturations(const TankState& s, const PvtModel& pvt);

// v_o B_o(p) + v_g B_g(p) + v_w B_w(p) - v_p.
double volume_residual(const TankState& s, const PvtModel& pvt);

// State with the given pressure, pore volume and saturations (which must sum
// to one); the fluid volumes follow from the volume equality.
TankState make_consistent_state(const PvtModel& pvt, double p, double v_p, const Saturations& s);

// F^i = IPR^i(P - p_bh, S) / B_i(P). Throws InfeasibleError unless
// 0 <= p_bh <= s.p.
Production well_production(const TankState& s, double p_bh, const IprModel& ipr,
                           const PvtModel& pvt);

enum class XiMethod {
  kAuto,       // exact per-segment inversion, bisection if that fails
  kBisection,  // bracketing bisection only
  kSegment,    // exact per-segment inversion only
};

struct XiOptions {
  double tol = 1e-8;  // Bara, bisection bracket width
  XiMethod method = XiMethod::kAuto;
};

// Next-step reservoir pressure: the unique P' at which the fluids left in the
// tank (with gas liberated from the remaining oil) fill the linearized pore
// volume v_p (1 + c_f (P' - P)).
//
// Throws InfeasibleError if the production exceeds the fluids in place,
// NumericError if no root is bracketed on [0, P + margin], and ConfigError if
// the fluid volume is found to increase with pressure.
double solve_pressure_xi(const TankState& s, const Production& prod, const PvtModel& pvt,
                         const XiOptions& options = {});

// One step of the five-component dynamics. Throws InfeasibleError if any fluid
// volume of the result would be negative.
TankState step_dynamics(const TankState& s, const Production& prod, const PvtModel& pvt,
                        const XiOptions& options = {});

}  // namespace resopt

#endif  // RESOPT_TANK_HPP_
