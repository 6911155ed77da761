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

#ifndef FUZZYTP_GRID_H_
#define FUZZYTP_GRID_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fuzzytp {

// Dense row-major rows x cols table. Used for every M x N quantity of a
// transportation table (costs, profits, shipments, interval envelopes).
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, const T& fill = T())
      : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
      throw std::invalid_argument("Grid: negative dimension");
    }
    data_.assign(static_cast<std::size_t>(rows) * cols, fill);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  T& operator()(int i, int j) { return data_[Index(i, j)]; }
  const T& operator()(int i, int j) const { return data_[Index(i, j)]; }

  T& at(int i, int j) {
    CheckBounds(i, j);
    return data_[Index(i, j)];
  }
  const T& at(int i, int j) const {
    CheckBounds(i, j);
    return data_[Index(i, j)];
  }

  // Flat row-major storage; element (i, j) lives at i * cols() + j.
  const std::vector<T>& values() const { return data_; }
  std::vector<T>& values() { return data_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t Index(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }
  void CheckBounds(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
      throw std::out_of_range("Grid index (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") out of range");
    }
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

}  // namespace fuzzytp

#endif  // FUZZYTP_GRID_H_
