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
#include "resopt/grid.hpp"

namespace resopt {
namespace {

TEST(Grid, RejectsBadAxes) {
  using Axes = std::vector<std::vector<double>>;
  EXPECT_THROW(Grid(Axes{}), ConfigError);
  EXPECT_THROW(Grid(Axes{{0.0}}), ConfigError);
  EXPECT_THROW(Grid(Axes{{0.0, 0.0}}), ConfigError);
  EXPECT_THROW(Grid(Axes{{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}}),
               ConfigError);
}

TEST(Grid, UniformAxisHasExactEnds) {
  const auto a = Grid::uniform_axis(0.1, 0.7, 7);
  ASSERT_EQ(a.size(), 7u);
  EXPECT_EQ(a.front(), 0.1);
  EXPECT_EQ(a.back(), 0.7);
}

TEST(Grid, NodesFlattenLastDimensionFastest) {
  const Grid g({{0.0, 1.0}, {10.0, 20.0, 30.0}});
  EXPECT_EQ(g.size(), 6u);
  double x[2];
  g.node(1, x);
  EXPECT_EQ(x[0], 0.0);
  EXPECT_EQ(x[1], 20.0);
  g.node(3, x);
  EXPECT_EQ(x[0], 1.0);
  EXPECT_EQ(x[1], 10.0);
}

TEST(Grid, InterpolationIsExactAtNodes) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  const double lo[] = {0.0, -1.0};
  const double hi[] = {3.0, 2.0};
  const std::size_t n[] = {13, 7};
  const Grid uniform = Grid::uniform(lo, hi, n);
  const Grid uneven({{0.0, 0.1, 0.5, 2.0, 3.0}, {-1.0, 0.0, 0.3, 2.0}});
  for (const Grid* g : {&uniform, &uneven}) {
    std::vector<double> values(g->size());
    for (double& v : values) v = u(rng);
    double x[2];
    for (std::size_t k = 0; k < g->size(); ++k) {
      g->node(k, x);
      EXPECT_EQ(g->interpolate(values, x), values[k]);
      EXPECT_EQ(g->nearest_node(x), k);
    }
  }
}

TEST(Grid, MidpointAndCellCenter) {
  const Grid g1({{0.0, 2.0, 5.0}});
  const std::vector<double> v1 = {1.0, 3.0, -4.0};
  const double m[] = {3.5};
  EXPECT_DOUBLE_EQ(g1.interpolate(v1, m), -0.5);

  const Grid g2({{0.0, 1.0}, {0.0, 4.0}});
  const std::vector<double> v2 = {1.0, 2.0, 7.0, -3.0};
  const double c[] = {0.5, 2.0};
  EXPECT_DOUBLE_EQ(g2.interpolate(v2, c), (1.0 + 2.0 + 7.0 - 3.0) / 4.0);
  // Bilinear formula off center.
  const double q[] = {0.25, 1.0};
  const double ax = 0.25, ay = 0.25;
  EXPECT_DOUBLE_EQ(g2.interpolate(v2, q), (1 - ax) * (1 - ay) * 1.0 + (1 - ax) * ay * 2.0 +
                                              ax * (1 - ay) * 7.0 + ax * ay * -3.0);
}

TEST(Grid, ClampsOutsideTheBox) {
  const Grid g({{0.0, 1.0, 2.0}});
  const std::vector<double> v = {5.0, 6.0, 8.0};
  const double below[] = {-3.0};
  const double above[] = {9.0};
  EXPECT_EQ(g.interpolate(v, below), 5.0);
  EXPECT_EQ(g.interpolate(v, above), 8.0);
  EXPECT_EQ(g.nearest_node(below), 0u);
  EXPECT_EQ(g.nearest_node(above), 2u);
}

TEST(Grid, NearestNodeTiesGoLow) {
  const Grid g({{0.0, 1.0, 2.0}});
  const double half[] = {0.5};
  EXPECT_EQ(g.nearest_node(half), 0u);
}

TEST(Grid, StencilReproducesInterpolation) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-0.5, 3.5);
  const Grid g({{0.0, 1.0, 1.5, 3.0}, {0.0, 0.5, 3.0}});
  std::vector<double> values(g.size());
  for (double& v : values) v = u(rng);
  for (int i = 0; i < 500; ++i) {
    const double x[] = {u(rng), u(rng)};
    std::size_t idx[4];
    double w[4];
    const std::size_t n = g.stencil(x, idx, w);
    double sum = 0.0, wsum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      sum += w[k] * values[idx[k]];
      wsum += w[k];
    }
    EXPECT_NEAR(sum, g.interpolate(values, x), 1e-12);
    EXPECT_NEAR(wsum, 1.0, 1e-12);
  }
}

}  // namespace
}  // namespace resopt
