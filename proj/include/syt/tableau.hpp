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

#ifndef SYT_TABLEAU_HPP_
#define SYT_TABLEAU_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "syt/partition.hpp"

namespace syt {

struct Cell {
  int row;
  int col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class TableauErrorKind {
  kMalformed,
  kInvalidShape,
  kEntryOutOfRange,
  kDuplicateEntry,
  kMissingEntry,
  kRowViolation,
  kColumnViolation,
};

class TableauError : public std::invalid_argument {
 public:
  TableauError(TableauErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  TableauErrorKind kind() const { return kind_; }

 private:
  TableauErrorKind kind_;
};

class LimitExceeded : public std::runtime_error {
 public:
  explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A standard Young tableau: the values 1..n, increasing along rows and down
// columns. Immutable once built.
class Tableau {
 public:
  // Validates; throws TableauError.
  Tableau(Partition shape, std::vector<int> entries);
  static Tableau from_rows(const std::vector<std::vector<int>>& rows);
  // Skips validation. Callers guarantee standardness.
  static Tableau trusted(Partition shape, std::vector<int> entries);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  int at(int row, int col) const { return entries_[shape_.index(row, col)]; }
  int at(Cell c) const { return at(c.row, c.col); }
  // Row-major entries.
  std::span<const int> entries() const { return entries_; }
  Cell find(int value) const;
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
    if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  struct TrustedTag {};
  Tableau(TrustedTag, Partition shape, std::vector<int> entries)
      : shape_(std::move(shape)), entries_(std::move(entries)) {}

  Partition shape_;
  std::vector<int> entries_;
};

// Throws TableauError describing the first violated condition.
void validate_standard(const Partition& shape, std::span<const int> entries);
bool is_standard(const Partition& shape, std::span<const int> entries);

// "1 4 5/2 6 8/3 7 13/9 10 15/11 14/12": rows split by '/', entries by one space.
Tableau parse_tableau(std::string_view text);
std::string serialize_tableau(const Tableau& t);
// Text or the JSON object form {"shape":[...],"rows":[[...],...]}.
Tableau read_tableau(std::string_view text);

Tableau transpose(const Tableau& t);

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

// Hook length formula in exact arithmetic; throws OverflowError rather than wrap.
std::uint64_t count_syt(const Partition& shape);

// Every SYT of the shape, sorted lexicographically by row-major entries.
// Throws LimitExceeded if count_syt(shape) > limit.
std::vector<Tableau> enumerate_syt(const Partition& shape,
                                   std::uint64_t limit = kDefaultEnumerationLimit);

// Tableau filled 1..n down the columns, left to right.
Tableau column_filling(const Partition& shape);
Tableau row_filling(const Partition& shape);

}  // namespace syt

#endif  // SYT_TABLEAU_HPP_
