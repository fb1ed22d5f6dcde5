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

#ifndef RESOPT_GRID_HPP_
#define RESOPT_GRID_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace resopt {

// Rectilinear grid over a box: one strictly increasing node list per
// dimension. Nodes are flattened with the last dimension varying fastest.
class Grid {
 public:
  static constexpr std::size_t kMaxDims = 4;

  Grid() = default;
  // Throws ConfigError unless 1 <= axes.size() <= kMaxDims and every axis has
  // at least 2 strictly increasing finite nodes.
  explicit Grid(std::vector<std::vector<double>> axes);

  // count equally spaced nodes on [lo, hi]; the ends are exact.
  static std::vector<double> uniform_axis(double lo, double hi, std::size_t count);
  static Grid uniform(std::span<const double> lo, std::span<const double> hi,
                      std::span<const std::size_t> counts);

  std::size_t dims() const { return axes_.size(); }
  std::size_t size() const { return size_; }
  const std::vector<double>& axis(std::size_t d) const { return axes_[d]; }
  double lower(std::size_t d) const { return axes_[d].front(); }
  double upper(std::size_t d) const { return axes_[d].back(); }

  // Coordinates of node `flat` written to out[0 .. dims()).
  void node(std::size_t flat, std::span<double> out) const;

  // Flat index of the node nearest to x in every coordinate (ties go to the
  // lower node); coordinates are clamped to the box.
  std::size_t nearest_node(std::span<const double> x) const;

  // Multilinear interpolation of per-node values at x, with coordinates
  // clamped to the box. Exact at nodes.
  double interpolate(std::span<const double> values, std::span<const double> x) const;

  // Up to 2^dims (flat index, weight) pairs whose weighted sum is the
  // interpolant at x. Returns the number of pairs written.
  std::size_t stencil(std::span<const double> x, std::span<std::size_t> index,
                      std::span<double> weight) const;

 private:
  // Cell k and weight w in [0, 1) of coordinate x along axis d.
  void locate(std::size_t d, double x, std::size_t& k, double& w) const;

  std::vector<std::vector<double>> axes_;
  std::vector<std::size_t> strides_;
  std::vector<bool> uniform_;
  std::size_t size_ = 0;
};

}  // namespace resopt

#endif  // RESOPT_GRID_HPP_
