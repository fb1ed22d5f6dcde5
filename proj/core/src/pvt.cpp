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

#include "resopt/pvt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "resopt/errors.hpp"
#include "resopt/table_io.hpp"

namespace resopt {

std::vector<double> PvtModel::breakpoints() const {
  std::vector<double> out;
  for (const PiecewiseLinear* f : {&b_o, &b_g, &b_w, &r_s}) {
    out.insert(out.end(), f->xs().begin(), f->xs().end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PressureRange PvtModel::table_range() const {
  const auto bp = breakpoints();
  return {bp.front(), bp.back()};
}

void validate(const PvtModel& pvt) {
  if (!(pvt.c_f >= 0.0) || !std::isfinite(pvt.c_f)) {
    throw ConfigError("PVT: pore compressibility c_f must be finite and >= 0");
  }
  if (!(pvt.v_0 > 0.0) || !std::isfinite(pvt.v_0)) {
    throw ConfigError("PVT: asymptotic pore volume v_0 must be finite and > 0");
  }
  if (pvt.b_o.size() < 2 || pvt.b_g.size() < 2 || pvt.b_w.size() < 2 || pvt.r_s.size() < 2) {
    throw ConfigError("PVT: every curve needs at least 2 breakpoints");
  }
  const auto positive = [](const PiecewiseLinear& f) {
    return std::all_of(f.ys().begin(), f.ys().end(), [](double y) { return y > 0.0; });
  };
  if (!positive(pvt.b_o) || !positive(pvt.b_g) || !positive(pvt.b_w)) {
    throw ConfigError("PVT: formation volume factors must be > 0");
  }
  if (std::any_of(pvt.r_s.ys().begin(), pvt.r_s.ys().end(), [](double y) { return y < 0.0; })) {
    throw ConfigError("PVT: solution gas ratio must be >= 0");
  }
  if (!pvt.b_g.is_nonincreasing()) throw ConfigError("PVT: B_g must be nonincreasing in pressure");
  if (!pvt.b_w.is_nonincreasing()) throw ConfigError("PVT: B_w must be nonincreasing in pressure");

  // Oil swelling must not outrun the shrinkage of the gas it dissolves. B_g is
  // affine on each union segment, so checking both ends is exact.
  const auto bp = pvt.breakpoints();
  for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
    const double mid = 0.5 * (bp[k] + bp[k + 1]);
    const double dbo = pvt.b_o.slope(mid);
    const double drs = pvt.r_s.slope(mid);
    for (double p : {bp[k], bp[k + 1]}) {
      const double bound = drs * pvt.b_g(p);
      if (dbo > bound + 1e-12 * std::max(1.0, std::abs(bound))) {
        throw ConfigError("PVT: oil swelling exceeds dissolved-gas shrinkage on [" +
                          format_number(bp[k]) + ", " + format_number(bp[k + 1]) +
                          "] Bara; the reservoir fluid volume would not decrease with pressure");
      }
    }
  }
}

double pore_volume_exact(const PvtModel& pvt, double p) {
  if (p < 0.0) throw DomainError("pore volume: negative pressure " + format_number(p));
  return pvt.v_0 * std::exp(pvt.c_f * p);
}

double pore_volume_linearized(double v_p, double p_old, double p_new, double c_f) {
  const double v = v_p * (1.0 + c_f * (p_new - p_old));
  if (!(v > 0.0)) {
    throw NumericError("linearized pore volume is not positive (c_f * dP <= -1)");
  }
  return v;
}

bool validate_decreasing_mixture(const PvtModel& pvt, double v_o, double v_g, double v_w,
                                 PressureRange range, std::size_t n_samples) {
  if (n_samples < 2) n_samples = 2;
  const auto mixture = [&](double p) {
    return v_o * pvt.b_o(p) + v_g * pvt.b_g(p) + v_w * pvt.b_w(p);
  };
  double previous = mixture(range.lo);
  for (std::size_t i = 1; i < n_samples; ++i) {
    const double p =
        range.lo + (range.hi - range.lo) * static_cast<double>(i) / static_cast<double>(n_samples - 1);
    const double current = mixture(p);
    if (current > previous) return false;
    previous = current;
  }
  return true;
}

PvtModel load_pvt_table(const std::filesystem::path& path, double c_f, double v_0) {
  const NumericTable table = read_numeric_table(path);
  if (table.rows.size() < 2) {
    throw ConfigError("PVT table " + path.string() + ": needs at least 2 data rows");
  }
  std::vector<double> p;
  std::vector<double> bo;
  std::vector<double> bg;
  std::vector<double> bw;
  std::vector<double> rs;
  for (const auto& row : table.rows) {
    if (row.size() != 5) {
      throw ConfigError("PVT table " + path.string() +
                        ": expected 5 columns (pressure, b_o, b_g, b_w, r_s)");
    }
    p.push_back(row[0]);
    bo.push_back(row[1]);
    bg.push_back(row[2]);
    bw.push_back(row[3]);
    rs.push_back(row[4]);
  }
  PvtModel pvt{PiecewiseLinear(p, bo), PiecewiseLinear(p, bg), PiecewiseLinear(p, bw),
               PiecewiseLinear(p, rs), c_f, v_0};
  validate(pvt);
  return pvt;
}

}  // namespace resopt
