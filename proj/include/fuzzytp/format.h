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

#ifndef FUZZYTP_FORMAT_H_
#define FUZZYTP_FORMAT_H_

#include <string>

namespace fuzzytp {

// All emitted numbers carry this many significant digits.
inline constexpr int kOutputSignificantDigits = 9;

// "%.9g" rendering; -0 is printed as 0.
std::string FormatNumber(double value);

// value rounded to 9 significant digits (what FormatNumber prints, parsed
// back). Non-finite values pass through unchanged.
double RoundForOutput(double value);

}  // namespace fuzzytp

#endif  // FUZZYTP_FORMAT_H_
