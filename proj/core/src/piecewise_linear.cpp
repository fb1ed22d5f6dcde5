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

#include "resopt/piecewise_linear.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "resopt/errors.hpp"

namespace resopt {

PiecewiseLinear::PiecewiseLinear(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size()) {
    throw ConfigError("piecewise-linear function: abscissa and ordinate counts differ");
  }
  if (xs_.size() < 2) {
    throw ConfigError("piecewise-linear function needs at least 2 breakpoints");
  }
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i])) {
      throw ConfigError("piecewise-linear function: non-finite breakpoint " +
                        std::to_string(i));
    }
    if (i > 0 && !(xs_[i] > xs_[i - 1])) {
      throw ConfigError("piecewise-linear function: abscissae must be strictly increasing");
    }
  }
}

PiecewiseLinear::PiecewiseLinear(std::span<const std::pair<double, double>> points) {
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& [x, y] : points) {
    xs.push_back(x);
    ys.push_back(y);
  }
  *this = PiecewiseLinear(std::move(xs), std::move(ys));
}

PiecewiseLinear PiecewiseLinear::constant(double value, double x_min, double x_max) {
  return PiecewiseLinear({x_min, x_max}, {value, value});
}

std::size_t PiecewiseLinear::segment(double x) const {
  // First breakpoint strictly greater than x, minus one.
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const auto k = static_cast<std::size_t>(std::distance(xs_.begin(), it));
  if (k == 0) return 0;
  return std::min(k - 1, xs_.size() - 2);
}

double PiecewiseLinear::eval(double x) const {
  if (x <= xs_.front()) return ys_.front();
  if (x >= xs_.back()) return ys_.back();
  const std::size_t k = segment(x);
  if (x == xs_[k]) return ys_[k];
  const double w = (x - xs_[k]) / (xs_[k + 1] - xs_[k]);
  return ys_[k] + w * (ys_[k + 1] - ys_[k]);
}

double PiecewiseLinear::slope(double x) const {
  if (x < xs_.front() || x > xs_.back()) return 0.0;
  const std::size_t k = segment(x);
  return (ys_[k + 1] - ys_[k]) / (xs_[k + 1] - xs_[k]);
}

double PiecewiseLinear::inverse_nondecreasing(double y) const {
  if (y <= ys_.front()) return xs_.front();
  if (y > ys_.back()) return xs_.back();
  // First breakpoint with ordinate >= y; the crossing lies in the segment
  // ending there.
  const auto it = std::lower_bound(ys_.begin(), ys_.end(), y);
  const auto k = static_cast<std::size_t>(std::distance(ys_.begin(), it));
  if (ys_[k] == y) return xs_[k];
  const double w = (y - ys_[k - 1]) / (ys_[k] - ys_[k - 1]);
  return xs_[k - 1] + w * (xs_[k] - xs_[k - 1]);
}

bool PiecewiseLinear::is_nondecreasing() const {
  return std::is_sorted(ys_.begin(), ys_.end());
}

bool PiecewiseLinear::is_nonincreasing() const {
  return std::is_sorted(ys_.begin(), ys_.end(), std::greater<>());
}

}  // namespace resopt
