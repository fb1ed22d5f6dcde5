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

#ifndef RESOPT_PVT_HPP_
#define RESOPT_PVT_HPP_

#include <cstddef>
#include <filesystem>
#include <vector>

#include "resopt/piecewise_linear.hpp"

namespace resopt {

// Closed pressure interval in Bara.
struct PressureRange {
  double lo = 0.0;
  double hi = 0.0;
};

// Black-oil PVT model: formation volume factors and solution gas ratio as
// piecewise-linear functions of pressure (Bara), plus the pore-volume law.
//
// Units: pressures in Bara, standard volumes in Sm3, reservoir volumes in m3.
// b_o, b_w in m3/Sm3 of stock-tank liquid, b_g in m3/Sm3 of gas, r_s in Sm3
// of gas per Sm3 of oil.
struct PvtModel {
  PiecewiseLinear b_o;
  PiecewiseLinear b_g;
  PiecewiseLinear b_w;
  PiecewiseLinear r_s;
  double c_f = 0.0;  // pore compressibility, 1/Bara
  double v_0 = 1.0;  // pore volume at zero pressure, m3

  // Sorted union of the breakpoints of all four curves.
  std::vector<double> breakpoints() const;

  // Pressure range covered by the tables.
  PressureRange table_range() const;
};

// Checks the invariants a PvtModel must satisfy before any solver touches it:
// c_f >= 0, v_0 > 0, b_g and b_w nonincreasing, every curve positive where it
// must be, and the dissolution-aware mixture monotonicity
// d(B_o)/dP <= d(R_s)/dP * B_g on every segment, which makes the remaining
// fluid volume of a tank nonincreasing in pressure for any nonnegative free
// gas. Throws ConfigError naming the first violated condition.
void validate(const PvtModel& pvt);

// V_p = V_0 exp(c_f p). Throws DomainError for p < 0.
double pore_volume_exact(const PvtModel& pvt, double p);

// v_p (1 + c_f (p_new - p_old)). Throws NumericError if the result is not
// positive (the linearization has broken down).
double pore_volume_linearized(double v_p, double p_old, double p_new, double c_f);

// True iff p -> v_o B_o(p) + v_g B_g(p) + v_w B_w(p), sampled at n_samples
// equally spaced pressures of the range, never increases.
bool validate_decreasing_mixture(const PvtModel& pvt, double v_o, double v_g, double v_w,
                                 PressureRange range, std::size_t n_samples);

// Reads a PVT table: one header row, then rows `pressure, b_o, b_g, b_w, r_s`
// separated by commas or whitespace. c_f and v_0 come from the caller. The
// result is validated.
PvtModel load_pvt_table(const std::filesystem::path& path, double c_f, double v_0);

}  // namespace resopt

#endif  // RESOPT_PVT_HPP_
