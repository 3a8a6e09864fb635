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

#include "syt/rsk.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace syt {

namespace {

Tableau rows_to_tableau(const std::vector<std::vector<int>>& rows) {
  return Tableau::from_rows(rows);
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("empty permutation");
  std::vector<char> seen(n + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> images;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t space = std::min(text.find(' ', start), text.size());
    const std::string_view token = text.substr(start, space - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
    }
    images.push_back(value);
    start = space + 1;
  }
  return Permutation(std::move(images));
}

std::string format_permutation(const Permutation& w) {
  std::string out;
  for (int v : w.images()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

RskPair rsk(const Permutation& w) {
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
  for (int step = 1; step <= w.size(); ++step) {
    int bumped = w(step);
    std::size_t row = 0;
    while (true) {
      if (row == p.size()) {
        p.push_back({bumped});
        q.push_back({step});
        break;
      }
      auto it = std::upper_bound(p[row].begin(), p[row].end(), bumped);
      if (it == p[row].end()) {
        p[row].push_back(bumped);
        q[row].push_back(step);
        break;
      }
      std::swap(*it, bumped);
      ++row;
    }
  }
  return {rows_to_tableau(p), rows_to_tableau(q)};
}

Permutation sharp(const Permutation& w) {
  const int n = w.size();
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[i - 1] = n + 1 - w(n + 1 - i);
  return Permutation(std::move(images));
}

Permutation column_reading_word(const Tableau& t) {
  std::vector<int> word;
  word.reserve(t.size());
  for (int j = 1; j <= t.shape().num_columns(); ++j) {
    for (int i = t.shape().column_length(j); i >= 1; --i) word.push_back(t.at(i, j));
  }
  return Permutation(std::move(word));
}

Permutation row_reading_word(const Tableau& t) {
  std::vector<int> word;
  word.reserve(t.size());
  for (int i = t.shape().num_rows(); i >= 1; --i) {
    for (int j = 1; j <= t.shape().row_length(i); ++j) word.push_back(t.at(i, j));
  }
  return Permutation(std::move(word));
}

std::set<int> left_descents(const Permutation& w) {
  std::vector<int> position(w.size() + 1);
  for (int i = 1; i <= w.size(); ++i) position[w(i)] = i;
  std::set<int> out;
  for (int v = 1; v < w.size(); ++v) {
    if (position[v + 1] < position[v]) out.insert(v);
  }
  return out;
}

Tableau dual_evacuate_via_rsk(const Tableau& t) {
  return rsk(sharp(column_reading_word(t))).insertion;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace syt
