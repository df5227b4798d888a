// Copyright 2026 The newsframes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace newsframes {

// Non-fatal diagnostics. Callers that pass nullptr discard warnings.
using WarningLog = std::vector<std::string>;

inline void warn(WarningLog* log, std::string message) {
  if (log != nullptr) log->push_back(std::move(message));
}

// Lowercased identifier suitable for file names: non-alphanumerics become '_'.
std::string slugify(const std::string& label);

// Fixed-precision decimal rendering ("%.<precision>f").
std::string format_fixed(double value, int precision);

// Shortest-round-trip-ish rendering for report values ("%.<precision>g").
std::string format_general(double value, int precision = 6);

}  // namespace newsframes
