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

#include <map>
#include <vector>

#include "doctest.h"
#include "syt/partition.hpp"

using syt::Partition;

TEST_CASE("parse_shape accepts the three notations") {
  CHECK(syt::parse_shape("3^4").parts() == std::vector<int>{3, 3, 3, 3});
  CHECK(syt::parse_shape("sc:3").parts() == std::vector<int>{3, 2, 1});
  CHECK(syt::parse_shape("3,3,2").parts() == std::vector<int>{3, 3, 2});
  CHECK(syt::parse_shape("1").parts() == std::vector<int>{1});
}

TEST_CASE("parse_shape rejects malformed input") {
  CHECK_THROWS_AS(syt::parse_shape(""), syt::ShapeError);
  CHECK_THROWS_AS(syt::parse_shape("3,,2"), syt::ShapeError);
  CHECK_THROWS_AS(syt::parse_shape("2,3"), syt::ShapeError);
  CHECK_THROWS_AS(syt::parse_shape("3,0"), syt::ShapeError);
  CHECK_THROWS_AS(syt::parse_shape("3,-1"), syt::ShapeError);
  CHECK_THROWS_AS(syt::parse_shape("sc:0"), syt::ShapeError);
  CHECK_THROWS_AS(syt::parse_shape("3^"), syt::ShapeError);
  CHECK_THROWS_AS(syt::parse_shape("a,b"), syt::ShapeError);
  CHECK_THROWS_AS(Partition(std::vector<int>{}), syt::ShapeError);
}

TEST_CASE("classification is recomputed from the parts") {
  CHECK(std::get<syt::Rectangle>(syt::classify(syt::parse_shape("3,3,3,3"))) ==
        syt::Rectangle{3, 4});
  CHECK(std::get<syt::Staircase>(syt::classify(syt::parse_shape("3,2,1"))) ==
        syt::Staircase{3});
  CHECK(std::holds_alternative<syt::GeneralShape>(syt::classify(syt::parse_shape("3,1"))));
  // The single cell is both; rectangle wins the tag but both helpers answer.
  const Partition one({1});
  CHECK(std::holds_alternative<syt::Rectangle>(syt::classify(one)));
  CHECK(syt::staircase_size(one) == 1);
  CHECK(syt::promotion_order(one) == 1);
  CHECK(syt::promotion_order(Partition::staircase(3)) == 12);
  CHECK(syt::promotion_order(Partition::rectangle(3, 4)) == 12);
  CHECK_FALSE(syt::promotion_order(syt::parse_shape("3,1")).has_value());
}

TEST_CASE("conjugate and geometry") {
  const Partition p({4, 2, 1});
  CHECK(p.size() == 7);
  CHECK(p.conjugate().parts() == std::vector<int>{3, 2, 1, 1});
  CHECK(p.conjugate().conjugate() == p);
  CHECK(p.column_length(2) == 2);
  CHECK(p.contains(3, 1));
  CHECK_FALSE(p.contains(3, 2));
  CHECK(p.index(2, 2) == 5);
  CHECK(syt::format_shape(p) == "4,2,1");
}

TEST_CASE("partitions_of counts match the partition numbers") {
  const std::map<int, std::size_t> expected{{1, 1}, {2, 2}, {3, 3}, {4, 5}, {5, 7},
                                            {6, 11}, {7, 15}, {8, 22}, {10, 42}, {12, 77}};
  for (auto [n, count] : expected) CHECK(syt::partitions_of(n).size() == count);
}
