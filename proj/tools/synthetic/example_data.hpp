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

#ifndef RESOPT_TOOLS_EXAMPLE_DATA_HPP_
#define RESOPT_TOOLS_EXAMPLE_DATA_HPP_

#include <filesystem>

namespace resopt::synthetic {

// Writes the synthetic example data set into `dir`: PVT and IPR tables, price
// and cost series, schedules, and one JSON run configuration per model
// (gas-1t.json, gas-2t.json, water-injection.json, full-5d.json).
void write_example_data(const std::filesystem::path& dir);

}  // namespace resopt::synthetic

#endif  // RESOPT_TOOLS_EXAMPLE_DATA_HPP_
