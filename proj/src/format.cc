// Copyright 2026 The fuzzytp Authors
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

#include "fuzzytp/format.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace fuzzytp {

std::string FormatNumber(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", kOutputSignificantDigits, value);
  return buf;
}

double RoundForOutput(double value) {
  if (!std::isfinite(value)) return value;
  return std::strtod(FormatNumber(value).c_str(), nullptr);
}

}  // namespace fuzzytp
