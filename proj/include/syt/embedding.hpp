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

#ifndef SYT_EMBEDDING_HPP_
#define SYT_EMBEDDING_HPP_

#include <optional>

#include "syt/tableau.hpp"

namespace syt {

// A rectangular tableau of shape k^(k+1) read as the staircase pair it glues
// together: the northwest staircase (upper) and the decoded southeast
// staircase (lower), which equals evacuate(upper) for tableaux in the image.
struct EmbeddedPair {
  Tableau upper;
  Tableau lower;
  Tableau rect;
};

// Glues S (cells with i+j <= k+1) to the complemented, 180-degree rotated
// evacuation of S into a tableau of shape k^(k+1) (k columns, k+1 rows).
// Throws ShapeError if s is not a staircase.
Tableau embed(const Tableau& s);

// Same gluing into shape (k+1)^k (k rows, k+1 columns).
Tableau embed_wide(const Tableau& s);

// Splits r into its staircase halves. Returns nullopt when r is not in the
// image of embed. Throws ShapeError unless r has shape k^(k+1).
std::optional<EmbeddedPair> project(const Tableau& r);

}  // namespace syt

#endif  // SYT_EMBEDDING_HPP_
