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

#include <gtest/gtest.h>

#include <random>

#include "resopt/errors.hpp"
#include "resopt/piecewise_linear.hpp"

namespace resopt {
namespace {

TEST(PiecewiseLinear, EvaluatesBreakpointsMidpointsAndFlatTails) {
  const PiecewiseLinear f({0.0, 10.0}, {1.0, 2.0});
  EXPECT_EQ(f(0.0), 1.0);
  EXPECT_EQ(f(5.0), 1.5);
  EXPECT_EQ(f(15.0), 2.0);
  EXPECT_EQ(f(-3.0), 1.0);
}

TEST(PiecewiseLinear, ExactAtEveryBreakpoint) {
  const PiecewiseLinear f({0.0, 0.1, 0.7, 3.0, 1e4}, {0.3, -1.0 / 3.0, 7.25, 1e-9, 2.0});
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(f(f.xs()[i]), f.ys()[i]);
}

TEST(PiecewiseLinear, RejectsBadBreakpoints) {
  EXPECT_THROW(PiecewiseLinear({0.0}, {1.0}), ConfigError);
  EXPECT_THROW(PiecewiseLinear({0.0, 0.0}, {1.0, 2.0}), ConfigError);
  EXPECT_THROW(PiecewiseLinear({1.0, 0.0}, {1.0, 2.0}), ConfigError);
  EXPECT_THROW(PiecewiseLinear({0.0, 1.0}, {1.0}), ConfigError);
  EXPECT_THROW(PiecewiseLinear({0.0, 1.0}, {1.0, std::nan("")}), ConfigError);
}

TEST(PiecewiseLinear, SlopeAndSegment) {
  const PiecewiseLinear f({0.0, 1.0, 3.0}, {0.0, 2.0, 3.0});
  EXPECT_EQ(f.segment(0.5), 0u);
  EXPECT_EQ(f.segment(2.0), 1u);
  EXPECT_EQ(f.segment(99.0), 1u);
  EXPECT_DOUBLE_EQ(f.slope(0.5), 2.0);
  EXPECT_DOUBLE_EQ(f.slope(2.0), 0.5);
  EXPECT_EQ(f.slope(4.0), 0.0);
}

TEST(PiecewiseLinear, InverseOfNondecreasing) {
  const PiecewiseLinear f({0.0, 1.0, 2.0, 4.0}, {0.0, 2.0, 2.0, 6.0});
  EXPECT_DOUBLE_EQ(f.inverse_nondecreasing(1.0), 0.5);
  EXPECT_DOUBLE_EQ(f.inverse_nondecreasing(2.0), 1.0);  // smallest preimage
  EXPECT_DOUBLE_EQ(f.inverse_nondecreasing(4.0), 3.0);
  EXPECT_EQ(f.inverse_nondecreasing(-1.0), 0.0);
  EXPECT_EQ(f.inverse_nondecreasing(10.0), 4.0);
}

TEST(PiecewiseLinear, MonotoneBreakpointsGiveMonotoneEvaluation) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> step(0.01, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> xs{0.0}, ys{0.0};
    for (int i = 0; i < 8; ++i) {
      xs.push_back(xs.back() + step(rng));
      ys.push_back(ys.back() + (trial % 2 ? -1.0 : 1.0) * (i % 3 == 0 ? 0.0 : step(rng)));
    }
    const PiecewiseLinear f(xs, ys);
    double prev = f(-1.0);
    for (int k = 0; k <= 1000; ++k) {
      const double v = f(-1.0 + (xs.back() + 2.0) * k / 1000.0);
      if (trial % 2) {
        EXPECT_LE(v, prev);
      } else {
        EXPECT_GE(v, prev);
      }
      prev = v;
    }
    EXPECT_EQ(f.is_nondecreasing(), trial % 2 == 0);
    EXPECT_EQ(f.is_nonincreasing(), trial % 2 == 1);
  }
}

}  // namespace
}  // namespace resopt
