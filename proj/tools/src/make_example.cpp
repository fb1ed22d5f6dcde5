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

// Writes the synthetic example data set: PVT and IPR tables, price series,
// schedules and one JSON run configuration per model.
//
//   resopt-make-example <directory>

#include <cstdio>
#include <exception>

#include "example_data.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: resopt-make-example <directory>\n");
    return 2;
  }
  try {
    resopt::synthetic::write_example_data(argv[1]);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "resopt-make-example: %s\n", e.what());
    return 1;
  }
  std::printf("example data written to %s\n", argv[1]);
  return 0;
}
