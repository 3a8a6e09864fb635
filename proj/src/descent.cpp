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

#include "syt/descent.hpp"

#include <stdexcept>

#include "syt/checked.hpp"
#include "syt/dynamics.hpp"

namespace syt {

DescentVector::DescentVector(int length, const std::set<int>& dotted) {
  if (length <= 0) throw std::invalid_argument("descent vector length must be positive");
  dots_.assign(length, false);
  for (int p : dotted) {
    if (p < 1 || p > length) throw std::invalid_argument("dot position out of range");
    dots_[p - 1] = true;
  }
}

DescentVector DescentVector::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty descent vector");
  std::vector<bool> dots;
  for (char c : text) {
    if (c != 'x' && c != '.') throw std::invalid_argument("descent vector uses only 'x' and '.'");
    dots.push_back(c == 'x');
  }
  return DescentVector(std::move(dots));
}

bool DescentVector::dotted(int position) const {
  return dots_[floor_mod(position - 1, length())];
}

std::set<int> DescentVector::dotted_positions() const {
  std::set<int> out;
  for (int i = 0; i < length(); ++i) {
    if (dots_[i]) out.insert(i + 1);
  }
  return out;
}

std::string DescentVector::to_string() const {
  std::string out;
  for (bool d : dots_) out += d ? 'x' : '.';
  return out;
}

std::set<int> descent_set(const Tableau& t) {
  const int n = t.size();
  std::vector<int> row_of(n + 1);
  for (int i = 1; i <= t.shape().num_rows(); ++i) {
    for (int j = 1; j <= t.shape().row_length(i); ++j) row_of[t.at(i, j)] = i;
  }
  std::set<int> out;
  for (int v = 1; v < n; ++v) {
    if (row_of[v + 1] > row_of[v]) out.insert(v);
  }
  return out;
}

DescentVector extended_descent_rect(const Tableau& r) {
  if (!as_rectangle(r.shape())) {
    throw ShapeError("extended descent needs a rectangle, got " + format_shape(r.shape()));
  }
  const int n = r.size();
  std::set<int> dots = descent_set(r);
  if (descent_set(promote(r)).contains(1)) dots.insert(n);
  return DescentVector(n, dots);
}

DescentVector extended_descent_staircase(const Tableau& s) {
  if (!staircase_size(s.shape())) {
    throw ShapeError("staircase extended descent needs a staircase, got " +
                     format_shape(s.shape()));
  }
  const int n = s.size();
  const std::set<int> des = descent_set(s);
  std::set<int> dots;
  for (int i = 1; i < n; ++i) dots.insert(des.contains(i) ? i : n + i);
  dots.insert(descent_set(promote(s)).contains(1) ? 2 * n : n);
  return DescentVector(2 * n, dots);
}

DescentVector extended_descent(const Tableau& t) {
  if (as_rectangle(t.shape())) return extended_descent_rect(t);
  if (staircase_size(t.shape())) return extended_descent_staircase(t);
  throw ShapeError("descent vectors exist for rectangles and staircases only, got " +
                   format_shape(t.shape()));
}

DescentVector rotate(const DescentVector& v, long long k) {
  const int len = v.length();
  std::vector<bool> out(len);
  for (int i = 0; i < len; ++i) out[floor_mod(i + k, len)] = v.dots_[i];
  return DescentVector(std::move(out));
}

DescentVector flip_about(const DescentVector& v, long long m) {
  const int len = v.length();
  std::vector<bool> out(len);
  // 1-based: out[i] = in[(m - i) mod len], with position 0 meaning len.
  for (int i = 1; i <= len; ++i) out[i - 1] = v.dots_[floor_mod(m - i - 1, len)];
  return DescentVector(std::move(out));
}

DescentVector complement(const DescentVector& v) {
  std::vector<bool> out(v.dots_);
  out.flip();
  return DescentVector(std::move(out));
}

int period(const DescentVector& v) {
  const int len = v.length();
  for (int p = 1; p <= len; ++p) {
    if (len % p == 0 && rotate(v, p) == v) return p;
  }
  return len;
}

}  // namespace syt
