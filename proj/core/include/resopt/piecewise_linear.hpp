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

#ifndef RESOPT_PIECEWISE_LINEAR_HPP_
#define RESOPT_PIECEWISE_LINEAR_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace resopt {

// A continuous piecewise-linear function given by its breakpoints. Abscissae
// are strictly increasing; evaluation is flat outside [x_min, x_max].
class PiecewiseLinear {
 public:
  PiecewiseLinear() = default;

  // Throws ConfigError unless there are at least two breakpoints with strictly
  // increasing, finite abscissae and finite ordinates.
  PiecewiseLinear(std::vector<double> xs, std::vector<double> ys);
  explicit PiecewiseLinear(std::span<const std::pair<double, double>> points);

  static PiecewiseLinear constant(double value, double x_min = 0.0, double x_max = 1.0);

  double operator()(double x) const { return eval(x); }
  double eval(double x) const;

  // Slope of the segment containing x (0 outside the breakpoint range).
  double slope(double x) const;

  // Index k of the segment [x_k, x_{k+1}] containing x, clamped to
  // [0, size() - 2].
  std::size_t segment(double x) const;

  // Smallest x in [x_min, x_max] with f(x) = y, for nondecreasing f. Values
  // of y outside the range of f clamp to the corresponding end.
  double inverse_nondecreasing(double y) const;

  bool is_nondecreasing() const;
  bool is_nonincreasing() const;

  std::size_t size() const { return xs_.size(); }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }
  double x_min() const { return xs_.front(); }
  double x_max() const { return xs_.back(); }

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

}  // namespace resopt

#endif  // RESOPT_PIECEWISE_LINEAR_HPP_
