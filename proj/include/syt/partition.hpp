// Copyright 2026 The syt Authors.
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

#ifndef SYT_PARTITION_HPP_
#define SYT_PARTITION_HPP_

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace syt {

class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// A straight Young diagram in English notation. Rows and columns are
// 1-based, (1,1) is the northwest cell.
class Partition {
 public:
  // Throws ShapeError unless parts is nonempty, positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  static Partition rectangle(int columns, int rows);
  static Partition staircase(int k);

  const std::vector<int>& parts() const { return parts_; }
  int num_rows() const { return static_cast<int>(parts_.size()); }
  int num_columns() const { return parts_.front(); }
  int row_length(int row) const { return parts_[row - 1]; }
  // Number of cells.
  int size() const { return size_; }

  // Length of column `col`, i.e. the number of rows reaching it.
  int column_length(int col) const;
  bool contains(int row, int col) const {
    return row >= 1 && row <= num_rows() && col >= 1 && col <= parts_[row - 1];
  }
  // Row-major flat index of a cell.
  int index(int row, int col) const { return offsets_[row - 1] + (col - 1); }

  Partition conjugate() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> offsets_;
  int size_ = 0;
};

struct Rectangle {
  int columns;
  int rows;
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

struct Staircase {
  int k;
  friend bool operator==(const Staircase&, const Staircase&) = default;
};

struct GeneralShape {
  friend bool operator==(const GeneralShape&, const GeneralShape&) = default;
};

// Dispatch tag for shape-specific results. The single cell (1) is both 1^1 and
// sc_1; classify() reports it as a rectangle, the helpers below report both.
using ShapeClass = std::variant<Rectangle, Staircase, GeneralShape>;

ShapeClass classify(const Partition& shape);
std::optional<Rectangle> as_rectangle(const Partition& shape);
// k such that shape == (k, k-1, ..., 1).
std::optional<int> staircase_size(const Partition& shape);

// Proven order of promotion: n on rectangles, 2n on staircases.
std::optional<int> promotion_order(const Partition& shape);

// Accepts "3,2,1", "3^4" and "sc:4". Throws ShapeError.
Partition parse_shape(std::string_view text);
// Comma list, e.g. "3,2,1".
std::string format_shape(const Partition& shape);

// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace syt

#endif  // SYT_PARTITION_HPP_
