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

#include "syt/partition.hpp"

#include <charconv>
#include <functional>

namespace syt {

namespace {

int parse_positive(std::string_view token, std::string_view context) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw ShapeError("malformed shape '" + std::string(context) + "': bad number '" +
                     std::string(token) + "'");
  }
  if (value <= 0) {
    throw ShapeError("malformed shape '" + std::string(context) + "': parts must be positive");
  }
  return value;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ShapeError("empty partition");
  offsets_.reserve(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ShapeError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ShapeError("partition parts must be weakly decreasing");
    }
    offsets_.push_back(size_);
    size_ += parts_[i];
  }
}

Partition Partition::rectangle(int columns, int rows) {
  if (columns <= 0 || rows <= 0) throw ShapeError("rectangle dimensions must be positive");
  return Partition(std::vector<int>(rows, columns));
}

Partition Partition::staircase(int k) {
  if (k <= 0) throw ShapeError("staircase size must be positive");
  std::vector<int> parts;
  for (int i = k; i >= 1; --i) parts.push_back(i);
  return Partition(std::move(parts));
}

int Partition::column_length(int col) const {
  int len = 0;
  while (len < num_rows() && parts_[len] >= col) ++len;
  return len;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  for (int j = 1; j <= num_columns(); ++j) cols.push_back(column_length(j));
  return Partition(std::move(cols));
}

std::optional<Rectangle> as_rectangle(const Partition& shape) {
  for (int p : shape.parts()) {
    if (p != shape.parts().front()) return std::nullopt;
  }
  return Rectangle{shape.num_columns(), shape.num_rows()};
}

std::optional<int> staircase_size(const Partition& shape) {
  const int k = shape.num_rows();
  for (int i = 1; i <= k; ++i) {
    if (shape.row_length(i) != k + 1 - i) return std::nullopt;
  }
  return k;
}

ShapeClass classify(const Partition& shape) {
  if (auto r = as_rectangle(shape)) return *r;
  if (auto k = staircase_size(shape)) return Staircase{*k};
  return GeneralShape{};
}

std::optional<int> promotion_order(const Partition& shape) {
  if (as_rectangle(shape)) return shape.size();
  if (staircase_size(shape)) return 2 * shape.size();
  return std::nullopt;
}

Partition parse_shape(std::string_view text) {
  if (text.starts_with("sc:")) {
    return Partition::staircase(parse_positive(text.substr(3), text));
  }
  if (auto caret = text.find('^'); caret != std::string_view::npos) {
    const int part = parse_positive(text.substr(0, caret), text);
    const int count = parse_positive(text.substr(caret + 1), text);
    return Partition(std::vector<int>(count, part));
  }
  std::vector<int> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(parse_positive(text.substr(start, comma - start), text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string format_shape(const Partition& shape) {
  std::string out;
  for (int p : shape.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  if (n > 0) rec(n, n);
  return out;
}

}  // namespace syt
