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

#ifndef SYT_VERIFY_HPP_
#define SYT_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "syt/dynamics.hpp"
#include "syt/tableau.hpp"

namespace syt {

// The operators under test. Every check goes through these, so a test can
// swap one out and watch the suite catch it.
struct Operators {
  std::function<PromotionResult(const Tableau&)> promote_with_path;
  std::function<PromotionResult(const Tableau&)> dual_promote_with_path;
  std::function<Tableau(const Tableau&)> evacuate;
  std::function<Tableau(const Tableau&)> dual_evacuate;
  std::function<Tableau(const Tableau&)> embed;
  std::function<Tableau(const Tableau&)> embed_wide;

  static Operators standard();

  Tableau promote(const Tableau& t) const { return promote_with_path(t).tableau; }
  Tableau dual_promote(const Tableau& t) const { return dual_promote_with_path(t).tableau; }
};

struct CheckResult {
  std::string name;
  std::string scope;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  // First counterexample or mismatch, empty when the check passed.
  std::string detail;
  // Extra information reported regardless of the outcome.
  std::string note;

  bool passed() const { return failures == 0 && cases > 0; }
  void expect(bool ok, const std::string& context);
};

struct VerifyOptions {
  // General shapes up to this many cells join the fixed rectangles and
  // staircases k = 2, 3, 4.
  int max_cells = 10;
  // Adds the staircase k = 5 orbit and certificate checks (292,864 tableaux).
  bool include_k5 = false;
  Operators ops = Operators::standard();
};

// The worked examples, compared byte for byte.
std::vector<CheckResult> golden_examples(const Operators& ops = Operators::standard());

// Exhaustive property checks over the universe described by the options.
std::vector<CheckResult> property_checks(const VerifyOptions& options);

// Golden examples followed by property checks.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace syt

#endif  // SYT_VERIFY_HPP_
