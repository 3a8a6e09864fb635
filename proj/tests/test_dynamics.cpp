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

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "syt/dynamics.hpp"
#include "universe.hpp"

using syt::Cell;
using syt::Operator;
using syt::Partition;
using syt::Tableau;
using syt::testing::for_each_syt;
using syt::testing::shapes_up_to;

namespace {

Tableau tab(const char* text) { return syt::parse_tableau(text); }
std::string str(const Tableau& t) { return syt::serialize_tableau(t); }

bool is_inside_corner(const Partition& shape, Cell c) {
  return shape.contains(c.row, c.col) && !shape.contains(c.row - 1, c.col) &&
         !shape.contains(c.row, c.col - 1);
}

bool is_outside_corner(const Partition& shape, Cell c) {
  return shape.contains(c.row, c.col) && !shape.contains(c.row + 1, c.col) &&
         !shape.contains(c.row, c.col + 1);
}

bool ends_with_vertical_move(const syt::CellPath& p) {
  const auto n = p.cells.size();
  return n >= 2 && p.cells[n - 2].col == p.cells[n - 1].col;
}

}  // namespace

TEST_CASE("promotion golden example with path") {
  const auto [result, path] = syt::promote_with_path(tab("1 4 5/2 6 8/3 7 13/9 10 15/11 14/12"));
  CHECK(str(result) == "1 2 6/3 5 7/4 8 9/10 11 14/12 15/13");
  CHECK(syt::format_path(path) == "(4,3) (3,3) (2,3) (2,2) (1,2) (1,1)");
}

TEST_CASE("promotion small cases") {
  const auto [one, path] = syt::promote_with_path(tab("1"));
  CHECK(str(one) == "1");
  CHECK(path.cells == std::vector<Cell>{{1, 1}});
  const Tableau sq = syt::promote(tab("1 2/3 4"));
  CHECK(str(sq) == "1 3/2 4");
  CHECK(str(syt::promote(sq)) == "1 2/3 4");
}

TEST_CASE("dual promotion golden example with path") {
  const auto [result, path] =
      syt::dual_promote_with_path(tab("1 4 5/2 6 8/3 7 13/9 10 15/11 14/12"));
  CHECK(str(result) == "1 3 4/2 5 7/6 9 12/8 13 14/10 15/11");
  CHECK(syt::format_path(path) == "(1,1) (2,1) (3,1) (3,2) (4,2) (5,2)");
}

TEST_CASE("dual promotion inverts promotion on every shape up to 10 cells") {
  for_each_syt(shapes_up_to(10), [](const Tableau& t) {
    CHECK(syt::dual_promote(syt::promote(t)) == t);
    CHECK(syt::promote(syt::dual_promote(t)) == t);
  });
}

TEST_CASE("promotion path is the reversed dual path of the image") {
  for (const char* shape : {"3,3", "3,2,1", "4,2,1", "3,3,2"}) {
    for (const Tableau& t : syt::enumerate_syt(syt::parse_shape(shape))) {
      const auto forward = syt::promote_with_path(t);
      auto back = syt::dual_promote_with_path(forward.tableau).path.cells;
      std::reverse(back.begin(), back.end());
      CHECK(forward.path.cells == back);
    }
  }
}

TEST_CASE("path endpoints and unit steps") {
  for_each_syt(shapes_up_to(8), [](const Tableau& t) {
    const auto p = syt::promote_with_path(t).path;
    CHECK(p.cells.front() == syt::corner_of_max(t));
    CHECK(is_inside_corner(t.shape(), p.cells.back()));
    for (std::size_t i = 1; i < p.cells.size(); ++i) {
      const int dr = p.cells[i - 1].row - p.cells[i].row;
      const int dc = p.cells[i - 1].col - p.cells[i].col;
      CHECK(((dr == 1 && dc == 0) || (dr == 0 && dc == 1)));
    }
    const auto d = syt::dual_promote_with_path(t).path;
    CHECK(d.cells.front() == Cell{1, 1});
    CHECK(is_outside_corner(t.shape(), d.cells.back()));
    for (std::size_t i = 1; i < d.cells.size(); ++i) {
      const int dr = d.cells[i].row - d.cells[i - 1].row;
      const int dc = d.cells[i].col - d.cells[i - 1].col;
      CHECK(((dr == 1 && dc == 0) || (dr == 0 && dc == 1)));
    }
  });
}

TEST_CASE("evacuation golden example") {
  CHECK(str(syt::evacuate(tab("1 3 8/2 4/5 9/6 10/7"))) == "1 3 8/2 5/4 6/7 10/9");
  CHECK(str(syt::evacuate(tab("1 2/3 4"))) == "1 2/3 4");
  CHECK(str(syt::evacuate(tab("1"))) == "1");
}

TEST_CASE("dual evacuation golden example") {
  CHECK(str(syt::dual_evacuate(tab("1 3 8/2 4/5 9/6 10/7"))) == "1 4 9/2 5/3 6/7 10/8");
}

TEST_CASE("both evacuations are involutions producing standard tableaux") {
  for_each_syt(shapes_up_to(8), [](const Tableau& t) {
    const Tableau e = syt::evacuate(t);
    const Tableau es = syt::dual_evacuate(t);
    CHECK(syt::is_standard(e.shape(), e.entries()));
    CHECK(syt::is_standard(es.shape(), es.entries()));
    CHECK(syt::evacuate(e) == t);
    CHECK(syt::dual_evacuate(es) == t);
  });
}

TEST_CASE("dihedral relations hold on every shape up to 8 cells") {
  for_each_syt(shapes_up_to(8), [](const Tableau& t) {
    CHECK(syt::evacuate(syt::promote(t)) == syt::dual_promote(syt::evacuate(t)));
    CHECK(syt::dual_evacuate(syt::promote(t)) == syt::dual_promote(syt::dual_evacuate(t)));
    Tableau p = t;
    for (int i = 0; i < t.size(); ++i) p = syt::promote(p);
    // Composition read right to left: evacuate first, then dual-evacuate.
    CHECK(syt::dual_evacuate(syt::evacuate(t)) == p);
    Tableau m = t;
    for (int i = 0; i < t.size(); ++i) m = syt::dual_promote(m);
    CHECK(syt::evacuate(syt::dual_evacuate(t)) == m);
  });
}

TEST_CASE("promotion order and evacuation coincidence on rectangles") {
  for (const Partition& shape : syt::testing::test_rectangles()) {
    for (const Tableau& r : syt::enumerate_syt(shape)) {
      Tableau p = r;
      for (int i = 0; i < r.size(); ++i) p = syt::promote(p);
      CHECK(p == r);
      CHECK(syt::evacuate(r) == syt::dual_evacuate(r));
    }
  }
  for (const Tableau& r : syt::enumerate_syt(syt::parse_shape("3^3"))) {
    CHECK(syt::dual_evacuate(r) == syt::evacuate(r));
  }
}

TEST_CASE("promotion on staircases reaches the transpose at n") {
  for (const Partition& shape : syt::testing::test_staircases()) {
    for (const Tableau& s : syt::enumerate_syt(shape)) {
      Tableau p = s;
      for (int i = 0; i < s.size(); ++i) p = syt::promote(p);
      CHECK(p == syt::transpose(s));
      for (int i = 0; i < s.size(); ++i) p = syt::promote(p);
      CHECK(p == s);
      CHECK(syt::dual_evacuate(s) == syt::transpose(syt::evacuate(s)));
    }
  }
}

TEST_CASE("apply_power") {
  for (const Tableau& r : syt::enumerate_syt(syt::parse_shape("3^4"))) {
    CHECK(syt::apply_power(r, Operator::kPromote, 12) == r);
  }
  for (const Tableau& s : syt::enumerate_syt(syt::parse_shape("3,2,1"))) {
    CHECK(syt::apply_power(s, Operator::kPromote, 6) == syt::transpose(s));
    CHECK(syt::apply_power(s, Operator::kPromote, -1) == syt::dual_promote(s));
    CHECK(syt::apply_power(s, Operator::kDualPromote, 2) ==
          syt::dual_promote(syt::dual_promote(s)));
    CHECK(syt::apply_power(s, Operator::kPromote, 1'200'000'000'001LL) == syt::promote(s));
  }
  const Tableau t = tab("1 3 8/2 4/5 9/6 10/7");
  CHECK(syt::apply_power(t, Operator::kPromote, 0) == t);
  // General shapes iterate literally in both directions.
  CHECK(syt::apply_power(syt::apply_power(t, Operator::kPromote, 7), Operator::kPromote, -7) == t);
  CHECK_THROWS_AS(syt::apply_power(t, Operator::kEvacuate, 1), std::invalid_argument);
}

TEST_CASE("corner_of_max") {
  CHECK(syt::corner_of_max(tab("1 2 6/3 5/4")) == Cell{1, 3});
  CHECK(syt::corner_of_max(tab("1 4 5/2 6/3")) == Cell{2, 2});
}

TEST_CASE("dual promotion path of the dual evacuation ends at the corner of n") {
  for_each_syt(shapes_up_to(8), [](const Tableau& t) {
    const auto d = syt::dual_promote_with_path(syt::dual_evacuate(t)).path;
    CHECK(d.cells.back() == syt::corner_of_max(t));
  });
}

TEST_CASE("compare_paths") {
  for (const Tableau& t : syt::enumerate_syt(syt::parse_shape("3,2,1"))) {
    const auto p = syt::promote_with_path(t).path;
    const auto d = syt::dual_promote_with_path(t).path;
    const auto rel = syt::compare_paths(p, d);
    if (ends_with_vertical_move(p)) {
      CHECK(rel.weakly_northeast);
    } else {
      CHECK(rel.weakly_southwest);
    }
  }
  // Identical paths along a row are comparable both ways.
  const Partition row({2});
  const syt::CellPath along{row, {{1, 1}, {1, 2}}};
  CHECK(syt::compare_paths(along, along).weakly_northeast);
  CHECK(syt::compare_paths(along, along).weakly_southwest);

  const syt::CellPath single{Partition({1}), {{1, 1}}};
  const auto both = syt::compare_paths(single, single);
  CHECK(both.weakly_northeast);
  CHECK(both.weakly_southwest);
  CHECK_FALSE(both.incomparable());

  const syt::CellPath other{Partition({2}), {{1, 1}}};
  CHECK_THROWS_AS(syt::compare_paths(single, other), std::invalid_argument);

  // A dual path crossing to the west of the promotion path is not northeast.
  const Partition sq({2, 2});
  const syt::CellPath p{sq, {{1, 2}, {1, 1}}};
  const syt::CellPath d{sq, {{1, 1}, {2, 1}, {2, 2}}};
  const auto rel = syt::compare_paths(p, d);
  CHECK_FALSE(rel.weakly_northeast);
  CHECK(rel.weakly_southwest);
}

TEST_CASE("path dominance on every shape up to 8 cells") {
  for_each_syt(shapes_up_to(8), [](const Tableau& t) {
    const auto p = syt::promote_with_path(t).path;
    if (p.cells.size() < 2) return;
    const auto rel = syt::compare_paths(p, syt::dual_promote_with_path(t).path);
    if (ends_with_vertical_move(p)) {
      CHECK(rel.weakly_northeast);
    } else {
      CHECK(rel.weakly_southwest);
    }
  });
}

TEST_CASE("operator names round-trip") {
  for (Operator op : {Operator::kPromote, Operator::kDualPromote, Operator::kEvacuate,
                      Operator::kDualEvacuate, Operator::kTranspose}) {
    CHECK(syt::parse_operator(syt::operator_name(op)) == op);
  }
  CHECK_THROWS_AS(syt::parse_operator("rotate"), std::invalid_argument);
}
