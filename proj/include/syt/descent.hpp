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

#ifndef SYT_DESCENT_HPP_
#define SYT_DESCENT_HPP_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "syt/tableau.hpp"

namespace syt {

// Cyclic 0/1 vector indexed 1..length. Position i and i+length coincide.
class DescentVector {
 public:
  DescentVector(int length, const std::set<int>& dotted);
  // "x.x..xx.x.x.", position 1 leftmost.
  static DescentVector parse(std::string_view text);

  int length() const { return static_cast<int>(dots_.size()); }
  bool dotted(int position) const;
  std::set<int> dotted_positions() const;
  std::string to_string() const;

  friend bool operator==(const DescentVector&, const DescentVector&) = default;

 private:
  explicit DescentVector(std::vector<bool> dots) : dots_(std::move(dots)) {}
  std::vector<bool> dots_;

  friend DescentVector rotate(const DescentVector& v, long long k);
  friend DescentVector flip_about(const DescentVector& v, long long m);
  friend DescentVector complement(const DescentVector& v);
};

// i in Des(t) iff i+1 lies in a strictly lower row than i.
std::set<int> descent_set(const Tableau& t);

// Length n: descents of r, plus n when 1 is a descent of promote(r).
// Throws ShapeError for non-rectangular r.
DescentVector extended_descent_rect(const Tableau& r);

// Length 2n: for i < n, i is dotted iff i in Des(s), n+i is dotted iff not;
// 2n is dotted iff 1 in Des(promote(s)), otherwise n is dotted.
// Throws ShapeError for non-staircase s.
DescentVector extended_descent_staircase(const Tableau& s);

// Dispatches on shape; throws ShapeError for shapes that are neither.
DescentVector extended_descent(const Tableau& t);

// Content of position i moves to i+k.
DescentVector rotate(const DescentVector& v, long long k);
// Output position i takes input position (m - i) mod length.
DescentVector flip_about(const DescentVector& v, long long m);
DescentVector complement(const DescentVector& v);
// Least p dividing length with rotate(v, p) == v.
int period(const DescentVector& v);

}  // namespace syt

#endif  // SYT_DESCENT_HPP_
