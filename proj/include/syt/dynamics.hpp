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

#ifndef SYT_DYNAMICS_HPP_
#define SYT_DYNAMICS_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syt/partition.hpp"
#include "syt/tableau.hpp"

namespace syt {

// Cells visited by the empty box during one (dual-)slide, in visiting order.
struct CellPath {
  Partition shape;
  std::vector<Cell> cells;

  friend bool operator==(const CellPath&, const CellPath&) = default;
};

// "(4,3) (3,3) (2,3)"
std::string format_path(const CellPath& path);

enum class Operator {
  kPromote,
  kDualPromote,
  kEvacuate,
  kDualEvacuate,
  kTranspose,
};

// "promote", "dual-promote", "evacuate", "dual-evacuate", "transpose".
Operator parse_operator(std::string_view name);
std::string_view operator_name(Operator op);

struct PromotionResult {
  Tableau tableau;
  CellPath path;
};

// Removes n, slides the hole northwest (swapping with the larger of the north
// and west neighbours) to (1,1), fills 0 and adds one everywhere. The path
// runs from the cell of n to (1,1).
PromotionResult promote_with_path(const Tableau& t);
// Removes 1, slides the hole southeast (swapping with the smaller of the south
// and east neighbours) to an outside corner, fills n+1 and subtracts one.
// The path runs from (1,1) to that corner.
PromotionResult dual_promote_with_path(const Tableau& t);

Tableau promote(const Tableau& t);
Tableau dual_promote(const Tableau& t);
Tableau evacuate(const Tableau& t);
Tableau dual_evacuate(const Tableau& t);

Tableau apply(Operator op, const Tableau& t);

// k-fold application of promote or dual-promote; negative k applies the
// inverse. On rectangles and staircases k is first reduced modulo the
// promotion order.
Tableau apply_power(const Tableau& t, Operator op, long long k);

struct PathRelation {
  bool weakly_northeast = false;
  bool weakly_southwest = false;

  bool incomparable() const { return !weakly_northeast && !weakly_southwest; }
};

// Relation of the dual path d to the promotion path p, cell by cell along
// shared antidiagonals: d is weakly northeast of p when on every antidiagonal
// both paths cross, d's cell is in the same or a higher row; weakly southwest
// is the mirror. Identical paths are both. Throws std::invalid_argument if the
// shapes differ.
PathRelation compare_paths(const CellPath& p, const CellPath& d);

// Cell containing n.
Cell corner_of_max(const Tableau& t);

}  // namespace syt

#endif  // SYT_DYNAMICS_HPP_
