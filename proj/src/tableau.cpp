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

#include "syt/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "json.hpp"
#include "syt/checked.hpp"

namespace syt {

namespace {

[[noreturn]] void fail(TableauErrorKind kind, const std::string& what) {
  throw TableauError(kind, what);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Partition shape_from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  try {
    return Partition(std::move(parts));
  } catch (const ShapeError& e) {
    fail(TableauErrorKind::kInvalidShape, std::string("invalid tableau shape: ") + e.what());
  }
}

}  // namespace

void validate_standard(const Partition& shape, std::span<const int> entries) {
  const int n = shape.size();
  if (static_cast<int>(entries.size()) != n) {
    fail(TableauErrorKind::kInvalidShape, "entry count does not match shape");
  }
  std::vector<char> seen(n + 1, 0);
  for (int v : entries) {
    if (v < 1 || v > n) {
      fail(TableauErrorKind::kEntryOutOfRange,
           "entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[v]) fail(TableauErrorKind::kDuplicateEntry, "duplicate entry " + std::to_string(v));
    seen[v] = 1;
  }
  // With n entries in range and no duplicates every value is present; kept
  // for the explicit diagnostic.
  for (int v = 1; v <= n; ++v) {
    if (!seen[v]) fail(TableauErrorKind::kMissingEntry, "missing entry " + std::to_string(v));
  }
  for (int i = 1; i <= shape.num_rows(); ++i) {
    for (int j = 1; j <= shape.row_length(i); ++j) {
      const int v = entries[shape.index(i, j)];
      if (j > 1 && entries[shape.index(i, j - 1)] >= v) {
        fail(TableauErrorKind::kRowViolation,
             "row " + std::to_string(i) + " not increasing at column " + std::to_string(j));
      }
      if (i > 1 && entries[shape.index(i - 1, j)] >= v) {
        fail(TableauErrorKind::kColumnViolation,
             "column " + std::to_string(j) + " not increasing at row " + std::to_string(i));
      }
    }
  }
}

bool is_standard(const Partition& shape, std::span<const int> entries) {
  try {
    validate_standard(shape, entries);
    return true;
  } catch (const TableauError&) {
    return false;
  }
}

Tableau::Tableau(Partition shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  validate_standard(shape_, entries_);
}

Tableau Tableau::trusted(Partition shape, std::vector<int> entries) {
  return Tableau(TrustedTag{}, std::move(shape), std::move(entries));
}

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) fail(TableauErrorKind::kInvalidShape, "tableau has no rows");
  Partition shape = shape_from_rows(rows);
  std::vector<int> entries;
  for (const auto& row : rows) entries.insert(entries.end(), row.begin(), row.end());
  return Tableau(std::move(shape), std::move(entries));
}

Cell Tableau::find(int value) const {
  for (int i = 1; i <= shape_.num_rows(); ++i) {
    for (int j = 1; j <= shape_.row_length(i); ++j) {
      if (at(i, j) == value) return {i, j};
    }
  }
  throw std::out_of_range("value " + std::to_string(value) + " not in tableau");
}

std::vector<std::vector<int>> Tableau::rows() const {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= shape_.num_rows(); ++i) {
    const auto begin = entries_.begin() + shape_.index(i, 1);
    out.emplace_back(begin, begin + shape_.row_length(i));
  }
  return out;
}

Tableau parse_tableau(std::string_view text) {
  std::vector<std::vector<int>> rows;
  for (std::string_view row_text : split(text, '/')) {
    std::vector<int> row;
    for (std::string_view token : split(row_text, ' ')) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        fail(TableauErrorKind::kMalformed,
             "malformed tableau text: bad entry '" + std::string(token) + "'");
      }
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  return Tableau::from_rows(rows);
}

std::string serialize_tableau(const Tableau& t) {
  std::string out;
  for (int i = 1; i <= t.shape().num_rows(); ++i) {
    if (i > 1) out += '/';
    for (int j = 1; j <= t.shape().row_length(i); ++j) {
      if (j > 1) out += ' ';
      out += std::to_string(t.at(i, j));
    }
  }
  return out;
}

Tableau read_tableau(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      fail(TableauErrorKind::kMalformed, std::string("malformed tableau JSON: ") + e.what());
    }
    if (!j.contains("rows") || !j["rows"].is_array()) {
      fail(TableauErrorKind::kMalformed, "tableau JSON needs a \"rows\" array");
    }
    std::vector<std::vector<int>> rows;
    try {
      rows = j["rows"].get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
      fail(TableauErrorKind::kMalformed, std::string("malformed tableau JSON: ") + e.what());
    }
    Tableau t = Tableau::from_rows(rows);
    if (j.contains("shape")) {
      std::vector<int> declared;
      try {
        declared = j["shape"].get<std::vector<int>>();
      } catch (const nlohmann::json::exception& e) {
        fail(TableauErrorKind::kMalformed, std::string("malformed tableau JSON: ") + e.what());
      }
      if (declared != t.shape().parts()) {
        fail(TableauErrorKind::kInvalidShape, "declared shape does not match rows");
      }
    }
    return t;
  }
  return parse_tableau(text);
}

Tableau transpose(const Tableau& t) {
  Partition conj = t.shape().conjugate();
  std::vector<int> entries(t.size());
  for (int i = 1; i <= t.shape().num_rows(); ++i) {
    for (int j = 1; j <= t.shape().row_length(i); ++j) {
      entries[conj.index(j, i)] = t.at(i, j);
    }
  }
  return Tableau::trusted(std::move(conj), std::move(entries));
}

std::uint64_t count_syt(const Partition& shape) {
  // n! / prod(hooks), via prime exponents so nothing is ever divided inexactly.
  const int n = shape.size();
  std::map<int, int> exponent;
  auto accumulate = [&](int m, int sign) {
    for (int p = 2; p * p <= m; ++p) {
      while (m % p == 0) {
        exponent[p] += sign;
        m /= p;
      }
    }
    if (m > 1) exponent[m] += sign;
  };
  for (int m = 2; m <= n; ++m) accumulate(m, +1);
  for (int i = 1; i <= shape.num_rows(); ++i) {
    for (int j = 1; j <= shape.row_length(i); ++j) {
      const int hook = (shape.row_length(i) - j) + (shape.column_length(j) - i) + 1;
      accumulate(hook, -1);
    }
  }
  std::uint64_t result = 1;
  for (auto [p, e] : exponent) {
    if (e < 0) throw std::logic_error("hook length formula produced a non-integer");
    for (int k = 0; k < e; ++k) result = checked_mul(result, static_cast<std::uint64_t>(p));
  }
  return result;
}

std::vector<Tableau> enumerate_syt(const Partition& shape, std::uint64_t limit) {
  const std::uint64_t expected = count_syt(shape);
  if (expected > limit) {
    throw LimitExceeded("shape " + format_shape(shape) + " has " + std::to_string(expected) +
                        " standard tableaux, above the limit of " + std::to_string(limit));
  }
  const int n = shape.size();
  const int rows = shape.num_rows();
  std::vector<std::vector<int>> grid;
  grid.reserve(expected);
  std::vector<int> filled(rows, 0);
  std::vector<int> entries(n, 0);

  // Place values 1..n one at a time into each addable cell, topmost row first.
  auto place = [&](auto&& self, int value) -> void {
    if (value > n) {
      grid.push_back(entries);
      return;
    }
    for (int r = 0; r < rows; ++r) {
      if (filled[r] >= shape.parts()[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      entries[shape.index(r + 1, filled[r] + 1)] = value;
      ++filled[r];
      self(self, value + 1);
      --filled[r];
    }
  };
  place(place, 1);
  std::sort(grid.begin(), grid.end());

  std::vector<Tableau> out;
  out.reserve(grid.size());
  for (auto& e : grid) out.push_back(Tableau::trusted(shape, std::move(e)));
  return out;
}

Tableau column_filling(const Partition& shape) {
  std::vector<int> entries(shape.size());
  int v = 0;
  for (int j = 1; j <= shape.num_columns(); ++j) {
    for (int i = 1; i <= shape.column_length(j); ++i) entries[shape.index(i, j)] = ++v;
  }
  return Tableau::trusted(shape, std::move(entries));
}

Tableau row_filling(const Partition& shape) {
  std::vector<int> entries(shape.size());
  for (int v = 0; v < shape.size(); ++v) entries[v] = v + 1;
  return Tableau::trusted(shape, std::move(entries));
}

}  // namespace syt
