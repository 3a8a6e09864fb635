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

#include "syt/embedding.hpp"

#include <string>

#include "syt/dynamics.hpp"

namespace syt {

namespace {

int require_staircase(const Tableau& s) {
  auto k = staircase_size(s.shape());
  if (!k) {
    throw ShapeError("embedding needs a staircase tableau, got shape " + format_shape(s.shape()));
  }
  return *k;
}

}  // namespace

Tableau embed(const Tableau& s) {
  const int k = require_staircase(s);
  const int big_n = (k + 1) * k;
  const Tableau lower = evacuate(s);
  Partition shape = Partition::rectangle(k, k + 1);
  std::vector<int> entries(big_n);
  for (int i = 1; i <= k + 1; ++i) {
    for (int j = 1; j <= k; ++j) {
      entries[shape.index(i, j)] =
          i + j <= k + 1 ? s.at(i, j) : big_n + 1 - lower.at(k + 2 - i, k + 1 - j);
    }
  }
  return Tableau(std::move(shape), std::move(entries));
}

Tableau embed_wide(const Tableau& s) {
  const int k = require_staircase(s);
  const int big_n = (k + 1) * k;
  const Tableau lower = evacuate(s);
  Partition shape = Partition::rectangle(k + 1, k);
  std::vector<int> entries(big_n);
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k + 1; ++j) {
      entries[shape.index(i, j)] =
          i + j <= k + 1 ? s.at(i, j) : big_n + 1 - lower.at(k + 1 - i, k + 2 - j);
    }
  }
  return Tableau(std::move(shape), std::move(entries));
}

std::optional<EmbeddedPair> project(const Tableau& r) {
  const int k = r.shape().num_columns();
  if (r.shape() != Partition::rectangle(k, k + 1)) {
    throw ShapeError("projection needs shape k^(k+1), got " + format_shape(r.shape()));
  }
  const int big_n = (k + 1) * k;
  const Partition stair = Partition::staircase(k);
  std::vector<int> upper(stair.size());
  std::vector<int> lower(stair.size());
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; i + j <= k + 1; ++j) {
      upper[stair.index(i, j)] = r.at(i, j);
      lower[stair.index(i, j)] = big_n + 1 - r.at(k + 2 - i, k + 1 - j);
    }
  }
  if (!is_standard(stair, upper) || !is_standard(stair, lower)) return std::nullopt;
  Tableau s(stair, std::move(upper));
  Tableau l(stair, std::move(lower));
  if (evacuate(s) != l) return std::nullopt;
  return EmbeddedPair{std::move(s), std::move(l), r};
}

}  // namespace syt
