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
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "syt/dynamics.hpp"
#include "syt/embedding.hpp"
#include "syt/verify.hpp"

using syt::CheckResult;
using syt::Operators;
using syt::Tableau;
using syt::VerifyOptions;

namespace {

std::set<std::string> failing(const std::vector<CheckResult>& results) {
  std::set<std::string> out;
  for (const CheckResult& r : results) {
    if (!r.passed()) out.insert(r.name);
  }
  return out;
}

const std::set<std::string> kKnownBadCertificates = {
    "Phi_2^2 Phi_4 Phi_6 Phi_10 Phi_12 is a CSP polynomial for promotion",
    "Phi_2^3 Phi_3 Phi_4^2 Phi_8 Phi_10^2 Phi_16 Phi_20 is a CSP polynomial for promotion",
};

VerifyOptions small(Operators ops = Operators::standard()) {
  VerifyOptions options;
  options.max_cells = 6;
  options.ops = std::move(ops);
  return options;
}

}  // namespace

TEST_CASE("check bookkeeping") {
  CheckResult r;
  CHECK_FALSE(r.passed());
  r.expect(true, "a");
  CHECK(r.passed());
  r.expect(false, "first");
  r.expect(false, "second");
  CHECK_FALSE(r.passed());
  CHECK(r.cases == 3);
  CHECK(r.failures == 2);
  CHECK(r.detail == "first");
  CHECK(syt::all_passed({}));
}

TEST_CASE("worked examples pass") {
  const auto results = syt::golden_examples();
  CHECK(results.size() >= 15);
  for (const CheckResult& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed());
  }
}

TEST_CASE("property checks pass apart from the invalid certificates") {
  const auto results = syt::property_checks(small());
  CHECK(results.size() > 40);
  CHECK(failing(results) == kKnownBadCertificates);
  for (const CheckResult& r : results) {
    if (kKnownBadCertificates.contains(r.name)) {
      CHECK(r.detail.find("at q = 1") != std::string::npos);
    }
  }
}

TEST_CASE("swapping the evacuations is caught") {
  Operators ops = Operators::standard();
  ops.evacuate = [](const Tableau& t) { return syt::dual_evacuate(t); };
  const auto results = syt::run_verify(small(ops));
  const auto bad = failing(results);
  CHECK(bad.contains("evacuation of 1 3 8/2 4/5 9/6 10/7"));
  CHECK(bad.contains("evacuation then dual evacuation is promotion to the n"));
  CHECK(bad.contains("evacuation reflects staircase descent vectors i to 2n-i"));
  CHECK_FALSE(syt::all_passed(results));
}

TEST_CASE("a promotion that forgets its path is caught") {
  Operators ops = Operators::standard();
  ops.promote_with_path = [](const Tableau& t) {
    auto res = syt::promote_with_path(t);
    if (res.path.cells.size() > 1) res.path.cells.pop_back();
    return res;
  };
  const auto bad = failing(syt::run_verify(small(ops)));
  CHECK(bad.contains("promotion of 1 4 5/2 6 8/3 7 13/9 10 15/11 14/12 with path"));
  CHECK(bad.contains("1 is a descent after promotion iff the path ends vertically"));
}

TEST_CASE("a promotion that goes the wrong way is caught") {
  Operators ops = Operators::standard();
  ops.promote_with_path = [](const Tableau& t) { return syt::dual_promote_with_path(t); };
  const auto bad = failing(syt::run_verify(small(ops)));
  CHECK(bad.contains("dual promotion inverts promotion"));
  CHECK(bad.contains("promotion rotates rectangular descent vectors by one"));
  CHECK(bad.contains("embedding commutes with promotion") == false);
  CHECK(bad.size() > kKnownBadCertificates.size() + 5);
}

TEST_CASE("a broken embedding is caught, and exceptions count as failures") {
  Operators ops = Operators::standard();
  ops.embed = [](const Tableau& t) -> Tableau {
    if (t.size() > 3) throw std::runtime_error("boom");
    return syt::embed_wide(t);
  };
  const auto results = syt::run_verify(small(ops));
  const auto bad = failing(results);
  CHECK(bad.contains("embedding of 1 2 6/3 5/4"));
  CHECK(bad.contains("embedding commutes with promotion"));
  CHECK(bad.contains("embedding preserves descent vectors"));
  for (const CheckResult& r : results) {
    if (r.name == "embedding commutes with evacuation") CHECK(r.detail.find("boom") != std::string::npos);
  }
}
