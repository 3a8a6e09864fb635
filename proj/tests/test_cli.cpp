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

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "syt/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "syt");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = syt::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("apply") {
  const std::string big = "1 4 5/2 6 8/3 7 13/9 10 15/11 14/12";
  auto r = run({"apply", "--op", "promote", "--tableau", big, "--show-path"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "1 2 6/3 5 7/4 8 9/10 11 14/12 15/13\npath: (4,3) (3,3) (2,3) (2,2) (1,2) (1,1)\n");
  r = run({"apply", "--op", "dual-promote", "--tableau", big, "--show-path"});
  CHECK(r.out ==
        "1 3 4/2 5 7/6 9 12/8 13 14/10 15/11\npath: (1,1) (2,1) (3,1) (3,2) (4,2) (5,2)\n");
  CHECK(run({"apply", "--op", "promote", "--power", "0", "--tableau", big}).out == big + "\n");
  CHECK(run({"apply", "--op", "evacuate", "--tableau", "1 3 8/2 4/5 9/6 10/7"}).out ==
        "1 3 8/2 5/4 6/7 10/9\n");
  CHECK(run({"apply", "--op", "dual-evacuate", "--tableau", "1 3 8/2 4/5 9/6 10/7"}).out ==
        "1 4 9/2 5/3 6/7 10/8\n");
  CHECK(run({"apply", "--op", "evacuate", "--power", "2", "--tableau", "1 3 8/2 4/5 9/6 10/7"})
            .out == "1 3 8/2 4/5 9/6 10/7\n");
  CHECK(run({"apply", "--op", "transpose", "--tableau", "1 2 6/3 5/4"}).out == "1 3 4/2 5/6\n");
  CHECK(run({"apply", "--op", "promote", "--power", "6", "--tableau", "1 2 6/3 5/4"}).out ==
        "1 3 4/2 5/6\n");
  CHECK(run({"apply", "--op", "promote", "--power", "-1", "--tableau", "1 3/2"}).out ==
        run({"apply", "--op", "dual-promote", "--tableau", "1 3/2"}).out);

  r = run({"apply", "--op", "promote", "--tableau", big, "--show-path", "--format", "json"});
  const json j = json::parse(r.out);
  CHECK(j["text"] == "1 2 6/3 5 7/4 8 9/10 11 14/12 15/13");
  CHECK(j["tableau"]["shape"] == json::array({3, 3, 3, 3, 2, 1}));
  CHECK(j["path"][0] == json::array({4, 3}));
  CHECK(j["path"].size() == 6);

  const std::string as_json = R"({"shape":[2,1],"rows":[[1,3],[2]]})";
  CHECK(run({"apply", "--op", "promote", "--tableau", as_json}).out == "1 2/3\n");
}

TEST_CASE("apply rejects bad input with exit 2") {
  CHECK(run({"apply", "--op", "promote", "--tableau", "1 3/3"}).code == 2);
  CHECK(run({"apply", "--op", "spin", "--tableau", "1"}).code == 2);
  CHECK(run({"apply", "--op", "promote"}).code == 2);
  CHECK(run({"apply", "--op", "evacuate", "--tableau", "1 2", "--show-path"}).code == 2);
  const Run r = run({"apply", "--op", "promote", "--tableau", "2 1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("embed") {
  CHECK(run({"embed", "--tableau", "1 2 6/3 5/4"}).out == "1 2 6/3 5 10/4 7 11/8 9 12\n");
  CHECK(run({"embed", "--wide", "--tableau", "1 2 6/3 5/4"}).out ==
        "1 2 6 10/3 5 7 11/4 8 9 12\n");
  const Run bad = run({"embed", "--tableau", "1 2/3 4"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("staircase") != std::string::npos);
  const json j = json::parse(run({"embed", "--tableau", "1 2 6/3 5/4", "--format", "json"}).out);
  CHECK(j["upper"]["rows"] == json::parse("[[1,2,6],[3,5],[4]]"));
  CHECK(j["lower"]["shape"] == json::array({3, 2, 1}));
  CHECK(j["rect"]["rows"] == json::parse("[[1,2,6],[3,5,10],[4,7,11],[8,9,12]]"));
}

TEST_CASE("desc") {
  CHECK(run({"desc", "--tableau", "1 4 5/2 6/3"}).out ==
        "xx..xx..xx..\ndots: 1,2,5,6,9,10\nperiod: 4\n");
  const Run r = run({"desc", "--tableau", "1 5 9/2 6 10/3 7 11/4 8 12"});
  CHECK(r.out.starts_with("xxx.xxx.xxx.\n"));
  CHECK(r.out.ends_with("period: 4\n"));
  const json j = json::parse(run({"desc", "--tableau", "1 2 4/3 6/5", "--format", "json"}).out);
  CHECK(j["vector"] == ".x.x..x.x.xx");
  CHECK(j["dots"] == json::array({2, 4, 7, 9, 11, 12}));
  CHECK(j["period"] == 12);
  CHECK(j["length"] == 12);
  CHECK(run({"desc", "--tableau", "1 2 3/4"}).code == 2);
}

TEST_CASE("orbits") {
  Run r = run({"orbits", "--shape", "sc:3", "--op", "promote"});
  CHECK(r.code == 0);
  CHECK(r.out == "N: 12\ncycles: 4^1 12^1\ntotal: 16\n");
  r = run({"orbits", "--shape", "sc:3", "--op", "promote", "--format", "json"});
  CHECK(json::parse(r.out) == json::parse(R"({"N":12,"cycles":{"12":1,"4":1},"total":16,
                                               "empirical_order":false})"));
  CHECK(run({"orbits", "--shape", "2^2", "--op", "promote"}).out ==
        "N: 4\ncycles: 2^1\ntotal: 2\n");
  const json evac = json::parse(
      run({"orbits", "--shape", "sc:3", "--op", "evacuate", "--format", "json"}).out);
  for (const auto& [size, count] : evac["cycles"].items()) CHECK(std::stoi(size) <= 2);
  CHECK(run({"orbits", "--shape", "3,1", "--op", "promote"}).out.find("lcm") != std::string::npos);
  CHECK(run({"orbits", "--shape", "sc:5", "--op", "promote", "--limit", "1000"}).code == 3);
  CHECK(run({"orbits", "--shape", "3,x", "--op", "promote"}).code == 2);
  CHECK(run({"orbits", "--shape", "3,1", "--op", "transpose"}).code == 2);
}

TEST_CASE("csp") {
  Run r = run({"csp", "--shape", "sc:3", "--op", "promote", "--factors", "2,4^2,6,8,12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("certificate: valid") != std::string::npos);
  // This product is 8 at q = 1 while SYT(sc_3) has 16 elements.
  r = run({"csp", "--shape", "sc:3", "--op", "promote", "--factors", "2^2,4,6,10,12"});
  CHECK(r.code == 1);
  CHECK(r.out.find("certificate: INVALID") != std::string::npos);

  r = run({"csp", "--shape", "2^2", "--op", "promote", "--stat", "qhook"});
  CHECK(r.code == 0);
  CHECK(r.out.find("generating function: 1 + q^2\n") != std::string::npos);
  CHECK(r.out.find("csp polynomial: yes\n") != std::string::npos);
  CHECK(r.out.find("shifts: 0 2\n") != std::string::npos);

  r = run({"csp", "--shape", "3^4", "--op", "promote", "--stat", "maj", "--format", "json"});
  const json j = json::parse(r.out);
  CHECK(j["N"] == 12);
  CHECK(j["statistic"]["is_csp"] == false);
  CHECK(j["statistic"]["shifts"] == json::array({6}));
  CHECK(j["canonical"].size() == 12);

  r = run({"csp", "--shape", "sc:3", "--op", "promote", "--factors", "2,4^2,6,8,12", "--format",
           "json"});
  const json f = json::parse(r.out);
  CHECK(f["factors"]["is_csp"] == true);
  CHECK(f["factors"]["value_at_1"] == 16);
  CHECK(f["factors"]["text"] == "Phi_2 Phi_4^2 Phi_6 Phi_8 Phi_12");

  CHECK(run({"csp", "--shape", "sc:3", "--op", "promote", "--factors", "2,,4"}).code == 2);
  CHECK(run({"csp", "--shape", "sc:3", "--op", "promote"}).code == 2);
  CHECK(run({"csp", "--shape", "sc:3", "--op", "promote", "--stat", "inv"}).code == 2);
  // An empirical order this large cannot be held as a polynomial.
  CHECK(run({"csp", "--shape", "5,2,2,1", "--op", "promote", "--stat", "maj"}).code == 3);
}

TEST_CASE("verify") {
  Run r = run({"verify", "--worked-examples"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = run({"verify", "--max-cells", "6"});
  // Exactly the two invalid certificates fail.
  CHECK(r.code == 1);
  std::size_t fails = 0;
  for (std::size_t pos = r.out.find("FAIL  "); pos != std::string::npos;
       pos = r.out.find("FAIL  ", pos + 1)) {
    ++fails;
  }
  CHECK(fails == 2);

  const json j = json::parse(run({"verify", "--max-cells", "5", "--format", "json"}).out);
  CHECK(j["passed"] == false);
  int failed = 0;
  for (const auto& check : j["checks"]) failed += check["passed"] == false;
  CHECK(failed == 2);
  CHECK(run({"verify", "--max-cells", "40"}).code == 2);
}

TEST_CASE("output does not depend on the thread count") {
  ::setenv("SYT_THREADS", "1", 1);
  const Run one = run({"orbits", "--shape", "3^4", "--op", "promote", "--format", "json"});
  ::setenv("SYT_THREADS", "7", 1);
  const Run seven = run({"orbits", "--shape", "3^4", "--op", "promote", "--format", "json"});
  ::unsetenv("SYT_THREADS");
  CHECK(one.out == seven.out);
}
