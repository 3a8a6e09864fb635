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

#include "syt/dynamics.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "syt/checked.hpp"

namespace syt {

namespace {

// Working copy of a tableau in which some cells may have been removed.
// Entries of inactive cells are meaningless.
class SlideGrid {
 public:
  explicit SlideGrid(const Tableau& t)
      : shape_(t.shape()),
        entries_(t.entries().begin(), t.entries().end()),
        active_(t.size(), 1) {}

  const Partition& shape() const { return shape_; }
  bool active(int i, int j) const { return shape_.contains(i, j) && active_[shape_.index(i, j)]; }
  int& at(Cell c) { return entries_[shape_.index(c.row, c.col)]; }
  void deactivate(Cell c) { active_[shape_.index(c.row, c.col)] = 0; }
  std::vector<int> release() { return std::move(entries_); }

  Cell find_extreme(bool want_max) const {
    Cell best{0, 0};
    int best_value = 0;
    for (int i = 1; i <= shape_.num_rows(); ++i) {
      for (int j = 1; j <= shape_.row_length(i); ++j) {
        if (!active_[shape_.index(i, j)]) continue;
        const int v = entries_[shape_.index(i, j)];
        if (best.row == 0 || (want_max ? v > best_value : v < best_value)) {
          best = {i, j};
          best_value = v;
        }
      }
    }
    return best;
  }

  // Hole starts at `start`; moves into the larger active north/west neighbour.
  std::vector<Cell> slide_northwest(Cell start) {
    std::vector<Cell> path{start};
    Cell hole = start;
    while (true) {
      const bool north = active(hole.row - 1, hole.col);
      const bool west = active(hole.row, hole.col - 1);
      if (!north && !west) break;
      Cell next;
      if (north && west) {
        const int n_val = at({hole.row - 1, hole.col});
        const int w_val = at({hole.row, hole.col - 1});
        assert(n_val != w_val);
        next = n_val > w_val ? Cell{hole.row - 1, hole.col} : Cell{hole.row, hole.col - 1};
      } else {
        next = north ? Cell{hole.row - 1, hole.col} : Cell{hole.row, hole.col - 1};
      }
      at(hole) = at(next);
      hole = next;
      path.push_back(hole);
    }
    return path;
  }

  // Hole starts at `start`; moves into the smaller active south/east neighbour.
  std::vector<Cell> slide_southeast(Cell start) {
    std::vector<Cell> path{start};
    Cell hole = start;
    while (true) {
      const bool south = active(hole.row + 1, hole.col);
      const bool east = active(hole.row, hole.col + 1);
      if (!south && !east) break;
      Cell next;
      if (south && east) {
        const int s_val = at({hole.row + 1, hole.col});
        const int e_val = at({hole.row, hole.col + 1});
        assert(s_val != e_val);
        next = s_val < e_val ? Cell{hole.row + 1, hole.col} : Cell{hole.row, hole.col + 1};
      } else {
        next = south ? Cell{hole.row + 1, hole.col} : Cell{hole.row, hole.col + 1};
      }
      at(hole) = at(next);
      hole = next;
      path.push_back(hole);
    }
    return path;
  }

 private:
  Partition shape_;
  std::vector<int> entries_;
  std::vector<char> active_;
};

}  // namespace

std::string format_path(const CellPath& path) {
  std::string out;
  for (const Cell& c : path.cells) {
    if (!out.empty()) out += ' ';
    out += '(' + std::to_string(c.row) + ',' + std::to_string(c.col) + ')';
  }
  return out;
}

Operator parse_operator(std::string_view name) {
  if (name == "promote") return Operator::kPromote;
  if (name == "dual-promote") return Operator::kDualPromote;
  if (name == "evacuate") return Operator::kEvacuate;
  if (name == "dual-evacuate") return Operator::kDualEvacuate;
  if (name == "transpose") return Operator::kTranspose;
  throw std::invalid_argument("unknown operator '" + std::string(name) + "'");
}

std::string_view operator_name(Operator op) {
  switch (op) {
    case Operator::kPromote: return "promote";
    case Operator::kDualPromote: return "dual-promote";
    case Operator::kEvacuate: return "evacuate";
    case Operator::kDualEvacuate: return "dual-evacuate";
    case Operator::kTranspose: return "transpose";
  }
  return "?";
}

PromotionResult promote_with_path(const Tableau& t) {
  SlideGrid grid(t);
  const Cell start = corner_of_max(t);
  std::vector<Cell> path = grid.slide_northwest(start);
  grid.at(path.back()) = 0;
  std::vector<int> entries = grid.release();
  for (int& v : entries) ++v;
  return {Tableau::trusted(t.shape(), std::move(entries)), CellPath{t.shape(), std::move(path)}};
}

PromotionResult dual_promote_with_path(const Tableau& t) {
  SlideGrid grid(t);
  const Cell start{1, 1};
  std::vector<Cell> path = grid.slide_southeast(start);
  grid.at(path.back()) = t.size() + 1;
  std::vector<int> entries = grid.release();
  for (int& v : entries) --v;
  return {Tableau::trusted(t.shape(), std::move(entries)), CellPath{t.shape(), std::move(path)}};
}

Tableau promote(const Tableau& t) { return promote_with_path(t).tableau; }

Tableau dual_promote(const Tableau& t) { return dual_promote_with_path(t).tableau; }

Tableau evacuate(const Tableau& t) {
  SlideGrid grid(t);
  std::vector<int> out(t.size(), 0);
  for (int k = 1; k <= t.size(); ++k) {
    const Cell start = grid.find_extreme(/*want_max=*/true);
    const Cell end = grid.slide_northwest(start).back();
    out[t.shape().index(end.row, end.col)] = k;
    grid.deactivate(end);
  }
  return Tableau::trusted(t.shape(), std::move(out));
}

Tableau dual_evacuate(const Tableau& t) {
  SlideGrid grid(t);
  const int n = t.size();
  std::vector<int> out(n, 0);
  for (int k = 1; k <= n; ++k) {
    const Cell start = grid.find_extreme(/*want_max=*/false);
    const Cell end = grid.slide_southeast(start).back();
    out[t.shape().index(end.row, end.col)] = n + 1 - k;
    grid.deactivate(end);
  }
  return Tableau::trusted(t.shape(), std::move(out));
}

Tableau apply(Operator op, const Tableau& t) {
  switch (op) {
    case Operator::kPromote: return promote(t);
    case Operator::kDualPromote: return dual_promote(t);
    case Operator::kEvacuate: return evacuate(t);
    case Operator::kDualEvacuate: return dual_evacuate(t);
    case Operator::kTranspose: return transpose(t);
  }
  throw std::logic_error("unhandled operator");
}

Tableau apply_power(const Tableau& t, Operator op, long long k) {
  if (op != Operator::kPromote && op != Operator::kDualPromote) {
    throw std::invalid_argument("apply_power needs promote or dual-promote");
  }
  if (op == Operator::kDualPromote) k = -k;
  if (auto order = promotion_order(t.shape())) k = floor_mod(k, *order);
  Tableau current = t;
  if (k >= 0) {
    for (long long i = 0; i < k; ++i) current = promote(current);
  } else {
    for (long long i = 0; i < -k; ++i) current = dual_promote(current);
  }
  return current;
}

PathRelation compare_paths(const CellPath& p, const CellPath& d) {
  if (p.shape != d.shape) throw std::invalid_argument("paths come from different shapes");
  // Both paths are monotone lattice paths through (1,1), so each meets an
  // antidiagonal row + col = const at most once. Compare rows there.
  std::map<int, int> p_row;
  for (const Cell& c : p.cells) p_row[c.row + c.col] = c.row;
  PathRelation rel{true, true};
  for (const Cell& c : d.cells) {
    auto it = p_row.find(c.row + c.col);
    if (it == p_row.end()) continue;
    if (c.row > it->second) rel.weakly_northeast = false;
    if (c.row < it->second) rel.weakly_southwest = false;
  }
  return rel;
}

Cell corner_of_max(const Tableau& t) { return t.find(t.size()); }

}  // namespace syt
