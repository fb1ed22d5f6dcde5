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

#include "resopt/grid.hpp"

#include <algorithm>
#include <cmath>

#include "resopt/errors.hpp"

namespace resopt {

Grid::Grid(std::vector<std::vector<double>> axes) : axes_(std::move(axes)) {
  if (axes_.empty() || axes_.size() > kMaxDims) {
    throw ConfigError("grid: between 1 and 4 dimensions are supported");
  }
  size_ = 1;
  for (const auto& a : axes_) {
    if (a.size() < 2) throw ConfigError("grid: every dimension needs at least 2 nodes");
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!std::isfinite(a[i]) || (i > 0 && !(a[i] > a[i - 1]))) {
        throw ConfigError("grid: nodes must be finite and strictly increasing");
      }
    }
    size_ *= a.size();
  }
  strides_.assign(axes_.size(), 1);
  for (std::size_t d = axes_.size() - 1; d > 0; --d) {
    strides_[d - 1] = strides_[d] * axes_[d].size();
  }
  uniform_.resize(axes_.size());
  for (std::size_t d = 0; d < axes_.size(); ++d) {
    const auto& a = axes_[d];
    const double h = (a.back() - a.front()) / static_cast<double>(a.size() - 1);
    bool uniform = true;
    for (std::size_t i = 1; i < a.size() && uniform; ++i) {
      uniform = std::abs((a[i] - a[i - 1]) - h) <= 1e-9 * h;
    }
    uniform_[d] = uniform;
  }
}

std::vector<double> Grid::uniform_axis(double lo, double hi, std::size_t count) {
  if (count < 2) throw ConfigError("grid: at least 2 nodes per dimension");
  if (!(hi > lo)) throw ConfigError("grid: upper bound must exceed lower bound");
  std::vector<double> a(count);
  const double n = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    a[i] = lo + (hi - lo) * (static_cast<double>(i) / n);
  }
  a.back() = hi;
  return a;
}

Grid Grid::uniform(std::span<const double> lo, std::span<const double> hi,
                   std::span<const std::size_t> counts) {
  if (lo.size() != hi.size() || lo.size() != counts.size()) {
    throw ConfigError("grid: bound and count lists differ in length");
  }
  std::vector<std::vector<double>> axes;
  for (std::size_t d = 0; d < lo.size(); ++d) axes.push_back(uniform_axis(lo[d], hi[d], counts[d]));
  return Grid(std::move(axes));
}

void Grid::node(std::size_t flat, std::span<double> out) const {
  for (std::size_t d = 0; d < axes_.size(); ++d) {
    out[d] = axes_[d][flat / strides_[d]];
    flat %= strides_[d];
  }
}

void Grid::locate(std::size_t d, double x, std::size_t& k, double& w) const {
  const auto& a = axes_[d];
  const std::size_t last = a.size() - 1;
  if (!(x > a.front())) {
    k = 0;
    w = 0.0;
    return;
  }
  if (x >= a.back()) {
    k = last - 1;
    w = 1.0;
    return;
  }
  if (uniform_[d]) {
    const double h = (a.back() - a.front()) / static_cast<double>(last);
    k = std::min(static_cast<std::size_t>((x - a.front()) / h), last - 1);
    // Correct the guess against the stored nodes so nodes stay exact.
    while (k > 0 && x < a[k]) --k;
    while (k + 1 < last && x >= a[k + 1]) ++k;
  } else {
    k = static_cast<std::size_t>(std::upper_bound(a.begin(), a.end(), x) - a.begin()) - 1;
  }
  w = (x - a[k]) / (a[k + 1] - a[k]);
}

std::size_t Grid::stencil(std::span<const double> x, std::span<std::size_t> index,
                          std::span<double> weight) const {
  const std::size_t dims = axes_.size();
  std::array<std::size_t, kMaxDims> cell{};
  std::array<double, kMaxDims> frac{};
  for (std::size_t d = 0; d < dims; ++d) locate(d, x[d], cell[d], frac[d]);
  std::size_t n = 0;
  for (std::size_t corner = 0; corner < (std::size_t{1} << dims); ++corner) {
    double w = 1.0;
    std::size_t flat = 0;
    for (std::size_t d = 0; d < dims; ++d) {
      const bool upper = (corner >> d) & 1U;
      w *= upper ? frac[d] : 1.0 - frac[d];
      flat += (cell[d] + (upper ? 1 : 0)) * strides_[d];
    }
    if (w == 0.0) continue;
    index[n] = flat;
    weight[n] = w;
    ++n;
  }
  return n;
}

double Grid::interpolate(std::span<const double> values, std::span<const double> x) const {
  std::array<std::size_t, std::size_t{1} << kMaxDims> index{};
  std::array<double, std::size_t{1} << kMaxDims> weight{};
  const std::size_t n = stencil(x, index, weight);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += weight[i] * values[index[i]];
  return sum;
}

std::size_t Grid::nearest_node(std::span<const double> x) const {
  std::size_t flat = 0;
  for (std::size_t d = 0; d < axes_.size(); ++d) {
    std::size_t k;
    double w;
    locate(d, x[d], k, w);
    flat += (w > 0.5 ? k + 1 : k) * strides_[d];
  }
  return flat;
}

}  // namespace resopt
