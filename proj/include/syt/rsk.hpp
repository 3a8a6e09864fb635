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

#ifndef SYT_RSK_HPP_
#define SYT_RSK_HPP_

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syt/tableau.hpp"

namespace syt {

// One-line notation w_1 ... w_n of a permutation of {1..n}.
class Permutation {
 public:
  // Throws std::invalid_argument unless images is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  // 1-based position.
  int operator()(int position) const { return images_[position - 1]; }
  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// "3 5 4 7 1 2 6"
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& w);

struct RskPair {
  Tableau insertion;
  Tableau recording;
};

// Row insertion of w_1, ..., w_n.
RskPair rsk(const Permutation& w);

// (n+1-w_n) ... (n+1-w_1).
Permutation sharp(const Permutation& w);

// Columns left to right, each read bottom to top.
Permutation column_reading_word(const Tableau& t);
// Rows bottom to top, each read left to right.
Permutation row_reading_word(const Tableau& t);

// i such that i+1 stands to the left of i.
std::set<int> left_descents(const Permutation& w);

// Dual evacuation computed through RSK: the column reading word of t inserts
// to t, and its sharp inserts to the dual evacuation of t.
Tableau dual_evacuate_via_rsk(const Tableau& t);

// All permutations of 1..n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace syt

#endif  // SYT_RSK_HPP_
