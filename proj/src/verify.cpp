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

#include "syt/verify.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "syt/checked.hpp"
#include "syt/csp.hpp"
#include "syt/descent.hpp"
#include "syt/embedding.hpp"
#include "syt/partition.hpp"
#include "syt/rsk.hpp"

namespace syt {

Operators Operators::standard() {
  return Operators{
      .promote_with_path = [](const Tableau& t) { return syt::promote_with_path(t); },
      .dual_promote_with_path = [](const Tableau& t) { return syt::dual_promote_with_path(t); },
      .evacuate = [](const Tableau& t) { return syt::evacuate(t); },
      .dual_evacuate = [](const Tableau& t) { return syt::dual_evacuate(t); },
      .embed = [](const Tableau& t) { return syt::embed(t); },
      .embed_wide = [](const Tableau& t) { return syt::embed_wide(t); },
  };
}

void CheckResult::expect(bool ok, const std::string& context) {
  ++cases;
  if (ok) return;
  if (failures == 0) detail = context;
  ++failures;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed(); });
}

namespace {

using Fn = std::function<Tableau(const Tableau&)>;

std::string show(const Tableau& t) { return serialize_tableau(t); }

template <class Body>
CheckResult run_check(std::string name, std::string scope, Body&& body) {
  CheckResult r;
  r.name = std::move(name);
  r.scope = std::move(scope);
  try {
    body(r);
  } catch (const std::exception& e) {
    if (r.failures == 0) r.detail = std::string("exception: ") + e.what();
    ++r.failures;
  }
  return r;
}

Tableau power(const Fn& f, Tableau t, int k) {
  for (int i = 0; i < k; ++i) t = f(t);
  return t;
}

bool ends_with_vertical_move(const CellPath& path) {
  const auto& c = path.cells;
  return c.size() >= 2 && c[c.size() - 2].col == c.back().col;
}

std::string shape_list(const std::vector<Partition>& shapes) {
  std::string out;
  for (const Partition& s : shapes) out += (out.empty() ? "" : " ") + format_shape(s);
  return out;
}

struct Universe {
  int max_cells = 0;
  std::vector<Partition> general;
  std::vector<Partition> rectangles;
  std::vector<Partition> staircases;

  std::vector<Partition> all() const {
    std::set<Partition> seen;
    std::vector<Partition> out;
    for (const auto* group : {&general, &rectangles, &staircases}) {
      for (const Partition& p : *group) {
        if (seen.insert(p).second) out.push_back(p);
      }
    }
    return out;
  }

  std::string all_scope() const {
    return "shapes up to " + std::to_string(max_cells) + " cells, rectangles " +
           shape_list(rectangles) + ", staircases " + shape_list(staircases);
  }
};

Universe make_universe(int max_cells) {
  Universe u;
  u.max_cells = max_cells;
  for (int n = 1; n <= max_cells; ++n) {
    for (Partition& p : partitions_of(n)) u.general.push_back(std::move(p));
  }
  u.rectangles = {Partition::rectangle(2, 2), Partition::rectangle(3, 2), Partition::rectangle(2, 3),
                  Partition::rectangle(3, 3), Partition::rectangle(3, 4)};
  u.staircases = {Partition::staircase(2), Partition::staircase(3), Partition::staircase(4)};
  return u;
}

void for_each_syt(const std::vector<Partition>& shapes,
                  const std::function<void(const Tableau&)>& fn) {
  for (const Partition& shape : shapes) {
    for (const Tableau& t : enumerate_syt(shape)) fn(t);
  }
}

// Cycle lengths of f on the sorted set of elements, with the length of the
// cycle through each element.
struct Cycles {
  std::map<int, std::int64_t> multiplicities;
  std::vector<int> length_at;
};

Cycles cycles_of(const std::vector<Tableau>& elements, const Fn& f) {
  auto index_of = [&](const Tableau& t) {
    auto it = std::lower_bound(elements.begin(), elements.end(), t);
    if (it == elements.end() || *it != t) {
      throw std::runtime_error("operator leaves the set: " + show(t));
    }
    return static_cast<std::size_t>(it - elements.begin());
  };
  Cycles out{{}, std::vector<int>(elements.size(), 0)};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (out.length_at[i] != 0) continue;
    std::vector<std::size_t> cycle{i};
    for (std::size_t j = index_of(f(elements[i])); j != i; j = index_of(f(elements[j]))) {
      if (out.length_at[j] != 0 || cycle.size() > elements.size()) {
        throw std::runtime_error("operator is not a bijection on SYT(" +
                                 format_shape(elements[i].shape()) + ")");
      }
      cycle.push_back(j);
      out.length_at[j] = -1;
    }
    for (std::size_t j : cycle) out.length_at[j] = static_cast<int>(cycle.size());
    ++out.multiplicities[static_cast<int>(cycle.size())];
  }
  return out;
}

CycleStructure structure_of(const Cycles& cycles, std::optional<int> proven_order) {
  if (proven_order) return make_cycle_structure(*proven_order, cycles.multiplicities);
  std::int64_t lcm = 1;
  for (auto [c, m] : cycles.multiplicities) {
    lcm = checked_mul(lcm / std::gcd(lcm, std::int64_t{c}), std::int64_t{c});
    if (lcm > std::numeric_limits<int>::max()) throw OverflowError("cycle lengths have a huge lcm");
  }
  return make_cycle_structure(static_cast<int>(lcm), cycles.multiplicities,
                              /*empirical_order=*/true);
}

std::string coefficient_list(const PolynomialModQN& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    out += (i ? "," : "") + std::to_string(p.coeffs()[i]);
  }
  return out + "]";
}

void add_dynamics_checks(const Universe& u, const Operators& ops,
                         std::vector<CheckResult>& out) {
  const auto all = u.all();
  const std::string scope = u.all_scope();
  const Fn promote = [&](const Tableau& t) { return ops.promote(t); };
  const Fn dual_promote = [&](const Tableau& t) { return ops.dual_promote(t); };

  out.push_back(run_check("dual promotion inverts promotion", scope, [&](CheckResult& r) {
    for_each_syt(all, [&](const Tableau& t) {
      r.expect(ops.dual_promote(ops.promote(t)) == t && ops.promote(ops.dual_promote(t)) == t,
               show(t));
    });
  }));
  out.push_back(run_check("evacuation is an involution", scope, [&](CheckResult& r) {
    for_each_syt(all, [&](const Tableau& t) { r.expect(ops.evacuate(ops.evacuate(t)) == t, show(t)); });
  }));
  out.push_back(run_check("dual evacuation is an involution", scope, [&](CheckResult& r) {
    for_each_syt(all, [&](const Tableau& t) {
      r.expect(ops.dual_evacuate(ops.dual_evacuate(t)) == t, show(t));
    });
  }));
  out.push_back(run_check("evacuation conjugates promotion into dual promotion", scope,
                          [&](CheckResult& r) {
    for_each_syt(all, [&](const Tableau& t) {
      r.expect(ops.evacuate(ops.promote(t)) == ops.dual_promote(ops.evacuate(t)), show(t));
    });
  }));
  out.push_back(run_check("dual evacuation conjugates promotion into dual promotion", scope,
                          [&](CheckResult& r) {
    for_each_syt(all, [&](const Tableau& t) {
      r.expect(ops.dual_evacuate(ops.promote(t)) == ops.dual_promote(ops.dual_evacuate(t)),
               show(t));
    });
  }));
  out.push_back(run_check("evacuation then dual evacuation is promotion to the n", scope,
                          [&](CheckResult& r) {
    for_each_syt(all, [&](const Tableau& t) {
      const int n = t.size();
      r.expect(ops.dual_evacuate(ops.evacuate(t)) == power(promote, t, n) &&
                   ops.evacuate(ops.dual_evacuate(t)) == power(dual_promote, t, n),
               show(t));
    });
  }));
  out.push_back(run_check("promotion has order n on rectangles", shape_list(u.rectangles),
                          [&](CheckResult& r) {
    for_each_syt(u.rectangles, [&](const Tableau& t) {
      r.expect(power(promote, t, t.size()) == t, show(t));
    });
  }));
  out.push_back(run_check("evacuation and dual evacuation agree on rectangles",
                          shape_list(u.rectangles), [&](CheckResult& r) {
    for_each_syt(u.rectangles, [&](const Tableau& t) {
      r.expect(ops.evacuate(t) == ops.dual_evacuate(t), show(t));
    });
  }));
  out.push_back(run_check("promotion to the n transposes a staircase tableau",
                          shape_list(u.staircases), [&](CheckResult& r) {
    for_each_syt(u.staircases, [&](const Tableau& t) {
      const Tableau half = power(promote, t, t.size());
      r.expect(half == transpose(t) && power(promote, half, t.size()) == t, show(t));
    });
  }));
  out.push_back(run_check("dual evacuation is transposed evacuation on staircases",
                          shape_list(u.staircases), [&](CheckResult& r) {
    for_each_syt(u.staircases, [&](const Tableau& t) {
      r.expect(ops.dual_evacuate(t) == transpose(ops.evacuate(t)), show(t));
    });
  }));
  out.push_back(run_check("dual evacuation by insertion matches sliding", scope,
                          [&](CheckResult& r) {
    for_each_syt(all, [&](const Tableau& t) {
      r.expect(dual_evacuate_via_rsk(t) == ops.dual_evacuate(t), show(t));
    });
  }));
  out.push_back(run_check("promotion path lies weakly on one side of the dual promotion path",
                          scope, [&](CheckResult& r) {
    for_each_syt(all, [&](const Tableau& t) {
      const CellPath p = ops.promote_with_path(t).path;
      if (p.cells.size() < 2) return;
      const PathRelation rel = compare_paths(p, ops.dual_promote_with_path(t).path);
      r.expect(ends_with_vertical_move(p) ? rel.weakly_northeast : rel.weakly_southwest,
               show(t));
    });
  }));
  out.push_back(run_check("dual promotion of the dual evacuation ends at the corner of n", scope,
                          [&](CheckResult& r) {
    for_each_syt(all, [&](const Tableau& t) {
      r.expect(ops.dual_promote_with_path(ops.dual_evacuate(t)).path.cells.back() ==
                   corner_of_max(t),
               show(t));
    });
  }));
}

void add_embedding_checks(const Universe& u, const Operators& ops,
                          std::vector<CheckResult>& out) {
  const std::string scope = shape_list(u.staircases);
  out.push_back(run_check("embedding is an injection into standard rectangles", scope,
                          [&](CheckResult& r) {
    for (const Partition& shape : u.staircases) {
      std::set<Tableau> images;
      for (const Tableau& s : enumerate_syt(shape)) {
        const Tableau e = ops.embed(s);
        const auto pair = project(e);
        r.expect(is_standard(e.shape(), e.entries()) && images.insert(e).second && pair &&
                     pair->upper == s && pair->lower == ops.evacuate(s),
                 show(s));
      }
    }
  }));
  auto relation = [&](std::string name, auto&& holds) {
    out.push_back(run_check(std::move(name), scope, [&](CheckResult& r) {
      for_each_syt(u.staircases, [&](const Tableau& s) { r.expect(holds(s), show(s)); });
    }));
  };
  relation("embedding commutes with promotion",
           [&](const Tableau& s) { return ops.embed(ops.promote(s)) == ops.promote(ops.embed(s)); });
  relation("embedding commutes with dual promotion", [&](const Tableau& s) {
    return ops.embed(ops.dual_promote(s)) == ops.dual_promote(ops.embed(s));
  });
  relation("embedding commutes with evacuation", [&](const Tableau& s) {
    return ops.embed(ops.evacuate(s)) == ops.evacuate(ops.embed(s));
  });
  relation("embedding sends evacuation to dual evacuation", [&](const Tableau& s) {
    return ops.embed(ops.evacuate(s)) == ops.dual_evacuate(ops.embed(s));
  });
  relation("embedding sends dual evacuation to evacuation of the transpose", [&](const Tableau& s) {
    return ops.embed(ops.dual_evacuate(s)) == ops.evacuate(ops.embed(transpose(s)));
  });
  relation("wide embedding commutes with promotion and evacuation", [&](const Tableau& s) {
    const Tableau w = ops.embed_wide(s);
    return ops.embed_wide(ops.promote(s)) == ops.promote(w) &&
           ops.embed_wide(ops.evacuate(s)) == ops.evacuate(w);
  });
  relation("rectangle promotion path passes the corner of n", [&](const Tableau& s) {
    const auto cells = ops.promote_with_path(ops.embed(s)).path.cells;
    return std::find(cells.begin(), cells.end(), corner_of_max(s)) != cells.end();
  });
}

void add_descent_checks(const Universe& u, const Operators& ops,
                        std::vector<CheckResult>& out) {
  const std::string rect_scope = shape_list(u.rectangles);
  const std::string stair_scope = shape_list(u.staircases);
  auto on = [&](const std::vector<Partition>& shapes, const std::string& scope, std::string name,
                auto&& holds) {
    out.push_back(run_check(std::move(name), scope, [&](CheckResult& r) {
      for_each_syt(shapes, [&](const Tableau& t) { r.expect(holds(t), show(t)); });
    }));
  };
  on(u.rectangles, rect_scope, "promotion rotates rectangular descent vectors by one",
     [&](const Tableau& t) {
       return extended_descent_rect(ops.promote(t)) == rotate(extended_descent_rect(t), 1);
     });
  on(u.rectangles, rect_scope, "evacuation reflects rectangular descent vectors i to n-i",
     [&](const Tableau& t) {
       return extended_descent_rect(ops.evacuate(t)) ==
              flip_about(extended_descent_rect(t), t.size());
     });
  on(u.staircases, stair_scope, "promotion rotates staircase descent vectors by one",
     [&](const Tableau& t) {
       return extended_descent_staircase(ops.promote(t)) ==
              rotate(extended_descent_staircase(t), 1);
     });
  on(u.staircases, stair_scope, "evacuation reflects staircase descent vectors i to 2n-i",
     [&](const Tableau& t) {
       return extended_descent_staircase(ops.evacuate(t)) ==
              flip_about(extended_descent_staircase(t), 2 * t.size());
     });
  on(u.staircases, stair_scope, "dual evacuation reflects staircase descent vectors i to n-i",
     [&](const Tableau& t) {
       return extended_descent_staircase(ops.dual_evacuate(t)) ==
              flip_about(extended_descent_staircase(t), t.size());
     });
  on(u.staircases, stair_scope, "embedding preserves descent vectors", [&](const Tableau& t) {
    return extended_descent_rect(ops.embed(t)) == extended_descent_staircase(t);
  });
  on(u.staircases, stair_scope, "staircase descent vector halves are complementary",
     [&](const Tableau& t) {
       const DescentVector v = extended_descent_staircase(t);
       return rotate(v, t.size()) == complement(v);
     });
  on(u.staircases, stair_scope, "transposing a staircase complements its descent vector",
     [&](const Tableau& t) {
       return extended_descent_staircase(transpose(t)) ==
              complement(extended_descent_staircase(t));
     });
  on(u.staircases, stair_scope, "1 is a descent after promotion iff the path ends vertically",
     [&](const Tableau& t) {
       const auto step = ops.promote_with_path(t);
       return descent_set(step.tableau).contains(1) == ends_with_vertical_move(step.path);
     });
  on(u.staircases, stair_scope, "dual evacuation moves the corner of n across the diagonal",
     [&](const Tableau& t) {
       const Cell here = corner_of_max(t);
       const Cell there = corner_of_max(ops.dual_evacuate(t));
       if (ends_with_vertical_move(ops.promote_with_path(t).path)) {
         return there.row < here.row && there.col > here.col;
       }
       return there.row > here.row && there.col < here.col;
     });

  auto shapes = u.rectangles;
  shapes.insert(shapes.end(), u.staircases.begin(), u.staircases.end());
  const Fn promote = [&](const Tableau& t) { return ops.promote(t); };
  out.push_back(run_check("descent vector period divides the promotion orbit length",
                          rect_scope + " " + stair_scope, [&](CheckResult& r) {
    for (const Partition& shape : shapes) {
      const auto elements = enumerate_syt(shape);
      const Cycles cycles = cycles_of(elements, promote);
      for (std::size_t i = 0; i < elements.size(); ++i) {
        r.expect(cycles.length_at[i] % period(extended_descent(elements[i])) == 0,
                 show(elements[i]));
      }
    }
  }));
  on(u.staircases, stair_scope, "no staircase descent vector has period dividing n",
     [&](const Tableau& t) { return t.size() % period(extended_descent_staircase(t)) != 0; });
}

void add_cycle_checks(const Universe& u, const Operators& ops, bool include_k5,
                      std::vector<CheckResult>& out) {
  auto staircases = u.staircases;
  if (include_k5) staircases.push_back(Partition::staircase(5));
  const Fn promote = [&](const Tableau& t) { return ops.promote(t); };
  std::vector<Tableau> columns;
  std::vector<Cycles> cycles;

  out.push_back(run_check("staircase promotion orbits divide 2n but not n",
                          shape_list(staircases), [&](CheckResult& r) {
    for (const Partition& shape : staircases) {
      const int n = shape.size();
      const Cycles c = cycles_of(enumerate_syt(shape), promote);
      for (auto [len, m] : c.multiplicities) {
        r.expect((2 * n) % len == 0 && n % len != 0,
                 format_shape(shape) + " has an orbit of length " + std::to_string(len));
      }
    }
  }));
  std::vector<Partition> full_cycle_shapes;
  for (const Partition& p : staircases) {
    if (p.num_rows() >= 3) full_cycle_shapes.push_back(p);
  }
  out.push_back(run_check("column filling lies in a promotion orbit of length 2n",
                          shape_list(full_cycle_shapes), [&](CheckResult& r) {
    for (const Partition& shape : full_cycle_shapes) {
      const Tableau t = column_filling(shape);
      int length = 1;
      for (Tableau v = ops.promote(t); v != t && length <= 2 * shape.size(); v = ops.promote(v)) {
        ++length;
      }
      r.expect(length == 2 * shape.size(),
               format_shape(shape) + " orbit length " + std::to_string(length));
    }
  }));
  const auto all = u.all();
  out.push_back(run_check("evacuation cycles have length 1 or 2", u.all_scope(),
                          [&](CheckResult& r) {
    for (const Partition& shape : all) {
      const auto elements = enumerate_syt(shape);
      for (const Fn& f : {Fn(ops.evacuate), Fn(ops.dual_evacuate)}) {
        for (auto [len, m] : cycles_of(elements, f).multiplicities) {
          r.expect(len <= 2, format_shape(shape) + " has a cycle of length " +
                                 std::to_string(len));
        }
      }
    }
  }));
}

void add_csp_checks(const Universe& u, const Operators& ops, bool include_k5,
                    std::vector<CheckResult>& out) {
  const auto all = u.all();
  const Fn promote = [&](const Tableau& t) { return ops.promote(t); };

  auto proven = u.rectangles;
  proven.insert(proven.end(), u.staircases.begin(), u.staircases.end());
  out.push_back(run_check("canonical polynomial at roots of unity counts fixed points",
                          "evacuations on " + u.all_scope() + "; promotion on " +
                              shape_list(proven),
                          [&](CheckResult& r) {
    auto compare = [&](const std::vector<Tableau>& elements, const Fn& f, int order) {
      const Cycles c = cycles_of(elements, f);
      const CycleStructure cs = structure_of(c, order);
      const PolynomialModQN canonical = canonical_csp_polynomial(cs);
      for (int k = 0; k < cs.order; ++k) {
        const auto fixed = std::count_if(c.length_at.begin(), c.length_at.end(),
                                         [&](int len) { return k % len == 0; });
        r.expect(value_at_root_of_unity(canonical, k) == fixed,
                 format_shape(elements.front().shape()) + " at k=" + std::to_string(k));
      }
    };
    for (const Partition& shape : all) {
      const auto elements = enumerate_syt(shape);
      compare(elements, ops.evacuate, 2);
      compare(elements, ops.dual_evacuate, 2);
    }
    for (const Partition& shape : proven) compare(enumerate_syt(shape), promote, *promotion_order(shape));
  }));
  out.push_back(run_check("cycle counts give the fixed points of promotion powers",
                          u.all_scope() + ", powers 0..2n", [&](CheckResult& r) {
    for (const Partition& shape : all) {
      const auto elements = enumerate_syt(shape);
      const CycleStructure cs = structure_of(cycles_of(elements, promote), promotion_order(shape));
      std::vector<Tableau> current = elements;
      for (int k = 0; k <= 2 * shape.size(); ++k) {
        std::int64_t fixed = 0;
        for (std::size_t i = 0; i < elements.size(); ++i) fixed += current[i] == elements[i];
        r.expect(fixed_point_count(cs, k) == fixed,
                 format_shape(shape) + " at k=" + std::to_string(k));
        for (Tableau& t : current) t = ops.promote(t);
      }
    }
  }));
  out.push_back(run_check("evacuation fixed points match the canonical polynomial at q = -1",
                          u.all_scope(), [&](CheckResult& r) {
    for (const Partition& shape : all) {
      const auto elements = enumerate_syt(shape);
      const CycleStructure cs = structure_of(cycles_of(elements, ops.evacuate), 2);
      std::int64_t direct = 0;
      for (const Tableau& t : elements) direct += ops.evacuate(t) == t;
      r.expect(canonical_csp_polynomial(cs).lift().evaluate(-1) == direct, format_shape(shape));
    }
  }));
  out.push_back(run_check("q-hook polynomial at q = 1 counts tableaux",
                          "shapes up to " + std::to_string(std::max(u.max_cells, 12)) + " cells",
                          [&](CheckResult& r) {
    for (int n = 1; n <= std::max(u.max_cells, 12); ++n) {
      for (const Partition& shape : partitions_of(n)) {
        r.expect(q_hook_length(shape).evaluate(1) == static_cast<std::int64_t>(count_syt(shape)),
                 format_shape(shape));
      }
    }
  }));

  CheckResult sieving = run_check("q-hook polynomial sieves promotion on rectangles",
                                  shape_list(u.rectangles), [&](CheckResult& r) {
    for (const Partition& shape : u.rectangles) {
      const auto elements = enumerate_syt(shape);
      const CycleStructure cs = structure_of(cycles_of(elements, promote), shape.size());
      r.expect(is_csp_polynomial(PolynomialModQN(cs.order, q_hook_length(shape)), cs),
               format_shape(shape));
      const auto gf = statistic_generating_function(shape, maj_statistic(), cs.order);
      std::string shifts;
      for (int s : csp_shifts(gf.reduced, cs)) shifts += (shifts.empty() ? "" : ",") + std::to_string(s);
      r.note += (r.note.empty() ? "" : "; ") + format_shape(shape) + " maj shifts {" + shifts +
                "} b=" + std::to_string(b_number(shape));
    }
  });
  out.push_back(std::move(sieving));

  struct Certificate {
    int k;
    const char* factors;
  };
  std::vector<Certificate> certificates = {
      {3, "2,4^2,6,8,12"}, {3, "2^2,4,6,10,12"}, {4, "2^3,3,4^2,8,10^2,16,20"}};
  if (include_k5) certificates.push_back({5, "2^11,6,10^3,11,13,22,24^4,30"});
  std::map<int, CycleStructure> structures;
  for (const Certificate& c : certificates) {
    const auto factors = parse_factors(c.factors);
    const Partition shape = Partition::staircase(c.k);
    out.push_back(run_check(format_factors(factors) + " is a CSP polynomial for promotion",
                            format_shape(shape), [&](CheckResult& r) {
      if (!structures.contains(c.k)) {
        structures.emplace(c.k, structure_of(cycles_of(enumerate_syt(shape), promote),
                                             promotion_order(shape)));
      }
      const CycleStructure& cs = structures.at(c.k);
      const PolynomialModQN product = cyclotomic_product(factors, cs.order);
      const std::int64_t at_one = cyclotomic_product(factors).evaluate(1);
      std::string why = "reduced product " + coefficient_list(product) + " differs from " +
                        coefficient_list(canonical_csp_polynomial(cs));
      if (at_one != cs.set_size()) {
        why = "product is " + std::to_string(at_one) + " at q = 1 but the set has " +
              std::to_string(cs.set_size()) + " elements";
      }
      r.expect(is_csp_polynomial(product, cs), why);
    }));
  }
}

}  // namespace

std::vector<CheckResult> golden_examples(const Operators& ops) {
  std::vector<CheckResult> out;
  auto golden = [&](std::string name, auto&& compute, const std::string& expected) {
    out.push_back(run_check(std::move(name), "worked example", [&](CheckResult& r) {
      const std::string got = compute();
      r.expect(got == expected, "expected \"" + expected + "\", got \"" + got + "\"");
    }));
  };
  const Tableau big = parse_tableau("1 4 5/2 6 8/3 7 13/9 10 15/11 14/12");
  golden("promotion of 1 4 5/2 6 8/3 7 13/9 10 15/11 14/12 with path", [&] {
    const auto res = ops.promote_with_path(big);
    return show(res.tableau) + " | " + format_path(res.path);
  }, "1 2 6/3 5 7/4 8 9/10 11 14/12 15/13 | (4,3) (3,3) (2,3) (2,2) (1,2) (1,1)");
  golden("dual promotion of 1 4 5/2 6 8/3 7 13/9 10 15/11 14/12 with path", [&] {
    const auto res = ops.dual_promote_with_path(big);
    return show(res.tableau) + " | " + format_path(res.path);
  }, "1 3 4/2 5 7/6 9 12/8 13 14/10 15/11 | (1,1) (2,1) (3,1) (3,2) (4,2) (5,2)");
  const Tableau ten = parse_tableau("1 3 8/2 4/5 9/6 10/7");
  golden("evacuation of 1 3 8/2 4/5 9/6 10/7", [&] { return show(ops.evacuate(ten)); },
         "1 3 8/2 5/4 6/7 10/9");
  golden("dual evacuation of 1 3 8/2 4/5 9/6 10/7", [&] { return show(ops.dual_evacuate(ten)); },
         "1 4 9/2 5/3 6/7 10/8");
  const Tableau s = parse_tableau("1 2 6/3 5/4");
  golden("embedding of 1 2 6/3 5/4", [&] { return show(ops.embed(s)); },
         "1 2 6/3 5 10/4 7 11/8 9 12");
  golden("wide embedding of 1 2 6/3 5/4", [&] { return show(ops.embed_wide(s)); },
         "1 2 6 10/3 5 7 11/4 8 9 12");

  const Tableau r2 = parse_tableau("1 2 4/3 5 9/6 8 11/7 10 12");
  const Tableau r3 = parse_tableau("1 3 5/2 4 6/7 9 10/8 11 12");
  const Tableau s3 = parse_tableau("1 2 4/3 6/5");
  auto vec = [](const Tableau& t) { return extended_descent(t).to_string(); };
  golden("promotion of 1 2 4/3 5 9/6 8 11/7 10 12", [&] { return show(ops.promote(r2)); },
         show(r3));
  golden("descent vector of 1 3 6/2 5 7/4 9 11/8 10 12",
         [&] { return vec(parse_tableau("1 3 6/2 5 7/4 9 11/8 10 12")); }, "x.x..xx.x.x.");
  golden("descent vector of 1 2 4/3 5 9/6 8 11/7 10 12", [&] { return vec(r2); }, ".x.xxx..x.xx");
  golden("descent vector of 1 3 5/2 4 6/7 9 10/8 11 12", [&] { return vec(r3); }, "x.x.xxx..x.x");
  golden("descent vector of the evacuation of 1 3 5/2 4 6/7 9 10/8 11 12",
         [&] { return vec(ops.evacuate(r3)); }, ".x..xxx.x.xx");
  golden("descent vector of 1 4 5/2 6/3", [&] { return vec(parse_tableau("1 4 5/2 6/3")); },
         "xx..xx..xx..");
  golden("descent vector of 1 2 5/3 6/4", [&] { return vec(parse_tableau("1 2 5/3 6/4")); },
         ".xx.x.x..x.x");
  golden("descent vector of 1 2 4/3 6/5", [&] { return vec(s3); }, ".x.x..x.x.xx");
  golden("descent vector of the evacuation of 1 2 4/3 6/5", [&] { return vec(ops.evacuate(s3)); },
         "x.x.x..x.x.x");
  golden("descent vector of the dual evacuation of 1 2 4/3 6/5",
         [&] { return vec(ops.dual_evacuate(s3)); }, ".x.x.xx.x.x.");
  golden("descent vector and period of 1 5 9/2 6 10/3 7 11/4 8 12", [&] {
    const DescentVector v = extended_descent(parse_tableau("1 5 9/2 6 10/3 7 11/4 8 12"));
    return v.to_string() + " " + std::to_string(period(v));
  }, "xxx.xxx.xxx. 4");
  golden("descent set of 1 2 3/4 6 9/5 7/8", [&] {
    std::string out;
    for (int d : descent_set(parse_tableau("1 2 3/4 6 9/5 7/8"))) {
      out += (out.empty() ? "" : ",") + std::to_string(d);
    }
    return out;
  }, "3,4,6,7");
  return out;
}

std::vector<CheckResult> property_checks(const VerifyOptions& options) {
  const Universe u = make_universe(options.max_cells);
  std::vector<CheckResult> out;
  add_dynamics_checks(u, options.ops, out);
  add_embedding_checks(u, options.ops, out);
  add_descent_checks(u, options.ops, out);
  add_cycle_checks(u, options.ops, options.include_k5, out);
  add_csp_checks(u, options.ops, options.include_k5, out);
  return out;
}

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
  std::vector<CheckResult> out = golden_examples(options.ops);
  for (CheckResult& r : property_checks(options)) out.push_back(std::move(r));
  return out;
}

}  // namespace syt
