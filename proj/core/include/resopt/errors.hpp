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

#ifndef RESOPT_ERRORS_HPP_
#define RESOPT_ERRORS_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace resopt {

// Base class of every error raised by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad config, bad table, invalid curve.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A control or production that the model cannot honor: inadmissible bottom-hole
// pressure, production above deliverability, fluid volume driven negative.
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what,
                           std::optional<std::size_t> stage = std::nullopt)
      : Error(stage ? what + " (stage " + std::to_string(*stage) + ")" : what),
        stage_(stage) {}

  std::optional<std::size_t> stage() const { return stage_; }

 private:
  std::optional<std::size_t> stage_;
};

// Root finding failed, a model degenerated, or a non-finite number showed up.
class NumericError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the mathematical domain of the operation.
class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace resopt

#endif  // RESOPT_ERRORS_HPP_
