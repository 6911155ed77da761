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

#ifndef FUZZYTP_EXECUTION_H_
#define FUZZYTP_EXECUTION_H_

namespace fuzzytp {

// How independent LP solves are scheduled. kSerial is the reference path;
// kParallel distributes them over OpenMP threads (serial when built without
// OpenMP). Both produce bit-identical results.
enum class Execution { kSerial, kParallel };

// Number of threads kParallel will use.
int MaxThreads();

}  // namespace fuzzytp

#endif  // FUZZYTP_EXECUTION_H_
