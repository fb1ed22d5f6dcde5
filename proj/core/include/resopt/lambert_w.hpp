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

#ifndef RESOPT_LAMBERT_W_HPP_
#define RESOPT_LAMBERT_W_HPP_

namespace resopt {

// Principal branch W0 of the Lambert function, w e^w = x, for x >= -1/e.
// Throws DomainError below the branch point.
double lambert_w0(double x);

// W0(exp(log_x)) without forming exp(log_x), for arguments far beyond the
// double range.
double lambert_w0_of_exp(double log_x);

}  // namespace resopt

#endif  // RESOPT_LAMBERT_W_HPP_
