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

#include "resopt/lambert_w.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "resopt/errors.hpp"
#include "resopt/table_io.hpp"

namespace resopt {
namespace {

constexpr double kInvE = 1.0 / std::numbers::e;

double initial_guess(double x) {
  if (x < -0.32) {
    // Series about the branch point -1/e.
    const double p = std::sqrt(2.0 * (std::numbers::e * x + 1.0));
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  }
  // Winitzki's approximation, good to a few percent over [-0.32, inf).
  const double l = std::log1p(x);
  return l * (1.0 - std::log1p(l) / (2.0 + l));
}

}  // namespace

double lambert_w0(double x) {
  if (std::isnan(x)) return x;
  if (x < -kInvE) {
    // Allow the rounding slop of callers that compute -1/e themselves.
    if (x > -kInvE - 4.0 * std::numeric_limits<double>::epsilon()) return -1.0;
    throw DomainError("lambert_w0: argument " + format_number(x) + " below -1/e");
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  double w = initial_guess(x);
  // Halley iteration on f(w) = w e^w - x.
  for (int i = 0; i < 32; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(w))) {
      break;
    }
  }
  return w;
}

double lambert_w0_of_exp(double log_x) {
  if (log_x < 1.0) return lambert_w0(std::exp(log_x));
  // For x >= e the root w >= 1 solves w + ln w = log_x; Newton on that form
  // never overflows.
  const double ll = std::log(log_x);
  double w = log_x - ll + ll / log_x;
  for (int i = 0; i < 64; ++i) {
    const double g = w + std::log(w) - log_x;
    const double step = g / (1.0 + 1.0 / w);
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * w) break;
  }
  return w;
}

}  // namespace resopt
