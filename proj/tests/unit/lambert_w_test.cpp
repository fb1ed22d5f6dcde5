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

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/special_functions/lambert_w.hpp>

#include "resopt/errors.hpp"
#include "resopt/lambert_w.hpp"

namespace resopt {
namespace {

TEST(LambertW0, KnownValues) {
  EXPECT_EQ(lambert_w0(0.0), 0.0);
  EXPECT_NEAR(lambert_w0(std::numbers::e), 1.0, 1e-15);
  EXPECT_NEAR(lambert_w0(-1.0 / std::numbers::e), -1.0, 1e-7);
  EXPECT_THROW(lambert_w0(-0.5), DomainError);
}

TEST(LambertW0, MatchesBoostAcrossMagnitudes) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> exponent(-300.0, 300.0);
  std::uniform_real_distribution<double> near_branch(-1.0 / std::numbers::e, 0.0);
  for (int i = 0; i < 5000; ++i) {
    const double x = std::pow(10.0, exponent(rng));
    const double w = lambert_w0(x);
    const double ref = boost::math::lambert_w0(x);
    EXPECT_NEAR(w, ref, 4e-15 * std::max(1.0, std::abs(ref))) << "x = " << x;
  }
  for (int i = 0; i < 2000; ++i) {
    const double x = near_branch(rng);
    EXPECT_NEAR(lambert_w0(x), boost::math::lambert_w0(x), 1e-7) << "x = " << x;
  }
}

TEST(LambertW0, OfExpMatchesDirectEvaluation) {
  for (double lx = -30.0; lx <= 600.0; lx += 0.37) {
    const double w = lambert_w0_of_exp(lx);
    // w + log w = log x
    EXPECT_NEAR(w + std::log(w), lx, 1e-12 * std::max(1.0, std::abs(lx)));
    if (lx < 690.0) {
      EXPECT_NEAR(w, boost::math::lambert_w0(std::exp(lx)), 1e-13 * std::max(1.0, w));
    }
  }
}

}  // namespace
}  // namespace resopt
