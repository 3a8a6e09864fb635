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

#include "syt/cli.hpp"

#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "syt/checked.hpp"
#include "syt/csp.hpp"
#include "syt/descent.hpp"
#include "syt/dynamics.hpp"
#include "syt/embedding.hpp"
#include "syt/partition.hpp"
#include "syt/tableau.hpp"
#include "syt/verify.hpp"

namespace syt {
namespace {

using nlohmann::json;

// A failure the user can fix by changing the arguments.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json tableau_json(const Tableau& t) {
  return {{"shape", t.shape().parts()}, {"rows", t.rows()}};
}

json path_json(const CellPath& path) {
  json cells = json::array();
  for (const Cell& c : path.cells) cells.push_back({c.row, c.col});
  return cells;
}

std::string join(const std::vector<std::int64_t>& values, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + std::to_string(values[i]);
  return out;
}

std::string join(const std::vector<int>& values, const char* sep = ",") {
  return join(std::vector<std::int64_t>(values.begin(), values.end()), sep);
}

json cycles_json(const CycleStructure& cs) {
  json cycles = json::object();
  for (auto [c, m] : cs.multiplicities) cycles[std::to_string(c)] = m;
  return cycles;
}

struct Common {
  std::string format = "text";
  std::uint64_t limit = kDefaultEnumerationLimit;

  bool as_json() const { return format == "json"; }
};

void add_format(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_limit(CLI::App* cmd, Common& common) {
  cmd->add_option("--limit", common.limit, "Refuse to enumerate more tableaux than this")
      ->capture_default_str();
}

Operator action_operator(const std::string& name) {
  const Operator op = parse_operator(name);
  if (op == Operator::kTranspose) {
    throw UsageError("transpose does not act on the tableaux of a fixed shape");
  }
  return op;
}

int cmd_apply(const Common& common, const std::string& op_name, long long power,
              const std::string& input, bool show_path, std::ostream& out) {
  const Operator op = parse_operator(op_name);
  const Tableau t = read_tableau(input);
  const bool promotion = op == Operator::kPromote || op == Operator::kDualPromote;
  if (show_path && !(promotion && power == 1)) {
    throw UsageError("--show-path needs a single promote or dual-promote step");
  }
  Tableau result = t;
  std::optional<CellPath> path;
  if (show_path) {
    auto step = op == Operator::kPromote ? promote_with_path(t) : dual_promote_with_path(t);
    result = std::move(step.tableau);
    path = std::move(step.path);
  } else if (promotion) {
    result = apply_power(t, op, power);
  } else if (floor_mod(power, 2LL) == 1) {
    result = apply(op, t);
  }
  if (common.as_json()) {
    json j = {{"tableau", tableau_json(result)}, {"text", serialize_tableau(result)}};
    if (path) j["path"] = path_json(*path);
    out << j.dump() << '\n';
  } else {
    out << serialize_tableau(result) << '\n';
    if (path) out << "path: " << format_path(*path) << '\n';
  }
  return kExitOk;
}

int cmd_embed(const Common& common, const std::string& input, bool wide, std::ostream& out) {
  const Tableau s = read_tableau(input);
  const Tableau rect = wide ? embed_wide(s) : embed(s);
  if (common.as_json()) {
    const json j = {{"upper", tableau_json(s)},
                    {"lower", tableau_json(evacuate(s))},
                    {"rect", tableau_json(rect)},
                    {"wide", wide}};
    out << j.dump() << '\n';
  } else {
    out << serialize_tableau(rect) << '\n';
  }
  return kExitOk;
}

int cmd_desc(const Common& common, const std::string& input, std::ostream& out) {
  const Tableau t = read_tableau(input);
  const DescentVector v = extended_descent(t);
  const std::set<int> dots = v.dotted_positions();
  const std::vector<int> dot_list(dots.begin(), dots.end());
  if (common.as_json()) {
    const json j = {{"vector", v.to_string()},
                    {"length", v.length()},
                    {"dots", dot_list},
                    {"period", period(v)}};
    out << j.dump() << '\n';
  } else {
    out << v.to_string() << '\n'
        << "dots: " << join(dot_list) << '\n'
        << "period: " << period(v) << '\n';
  }
  return kExitOk;
}

int cmd_orbits(const Common& common, const std::string& shape_text, const std::string& op_name,
               std::ostream& out) {
  const Partition shape = parse_shape(shape_text);
  const CycleStructure cs = cycle_structure(shape, action_operator(op_name), common.limit);
  if (common.as_json()) {
    const json j = {{"N", cs.order},
                    {"cycles", cycles_json(cs)},
                    {"total", cs.set_size()},
                    {"empirical_order", cs.empirical_order}};
    out << j.dump() << '\n';
  } else {
    out << "N: " << cs.order << (cs.empirical_order ? " (lcm of observed cycles)" : "") << '\n';
    out << "cycles:";
    for (auto [c, m] : cs.multiplicities) out << ' ' << c << '^' << m;
    out << '\n' << "total: " << cs.set_size() << '\n';
  }
  return kExitOk;
}

int cmd_csp(const Common& common, const std::string& shape_text, const std::string& op_name,
            const std::string& stat_name, const std::optional<std::string>& factor_text,
            std::ostream& out) {
  const Partition shape = parse_shape(shape_text);
  const Operator op = action_operator(op_name);
  if (stat_name.empty() && !factor_text) throw UsageError("csp needs --stat or --factors");
  std::vector<CyclotomicFactor> factors;
  if (factor_text) factors = parse_factors(*factor_text);

  const CycleStructure cs = cycle_structure(shape, op, common.limit);
  const PolynomialModQN canonical = canonical_csp_polynomial(cs);
  json j = {{"shape", shape.parts()},
            {"op", operator_name(op)},
            {"N", cs.order},
            {"cycles", cycles_json(cs)},
            {"empirical_order", cs.empirical_order},
            {"canonical", canonical.coeffs()}};
  std::string text = "N: " + std::to_string(cs.order) + "\ncanonical: [" +
                     join(canonical.coeffs()) + "]\n";
  int exit_code = kExitOk;

  if (!stat_name.empty()) {
    Polynomial unreduced;
    if (stat_name == "qhook") {
      unreduced = q_hook_length(shape);
    } else {
      const Statistic stat = stat_name == "maj" ? maj_statistic() : comaj_statistic();
      unreduced = statistic_generating_function(shape, stat, cs.order, common.limit).unreduced;
    }
    const PolynomialModQN reduced(cs.order, unreduced);
    const bool is_csp = is_csp_polynomial(reduced, cs);
    const std::vector<int> shifts = csp_shifts(reduced, cs);
    j["statistic"] = {{"name", stat_name},
                      {"generating_function", unreduced.coeffs()},
                      {"reduced", reduced.coeffs()},
                      {"is_csp", is_csp},
                      {"shifts", shifts}};
    text += "statistic: " + stat_name + "\ngenerating function: " + to_string(unreduced) +
            "\nreduced: [" + join(reduced.coeffs()) + "]\n" +
            "csp polynomial: " + (is_csp ? "yes" : "no") + "\nshifts: " +
            (shifts.empty() ? "none" : join(shifts, " ")) + "\n";
  }
  if (factor_text) {
    const PolynomialModQN product = cyclotomic_product(factors, cs.order);
    const bool ok = is_csp_polynomial(product, cs);
    j["factors"] = {{"text", format_factors(factors)},
                    {"reduced", product.coeffs()},
                    {"value_at_1", cyclotomic_product(factors).evaluate(1)},
                    {"is_csp", ok}};
    text += "product: " + format_factors(factors) + "\nreduced product: [" +
            join(product.coeffs()) + "]\n" + "certificate: " + (ok ? "valid" : "INVALID") + "\n";
    if (!ok) exit_code = kExitVerificationFailed;
  }
  out << (common.as_json() ? j.dump() + "\n" : text);
  return exit_code;
}

int cmd_verify(const Common& common, int max_cells, bool include_k5, bool examples_only,
               std::ostream& out) {
  VerifyOptions options;
  options.max_cells = max_cells;
  options.include_k5 = include_k5;
  const std::vector<CheckResult> results =
      examples_only ? golden_examples(options.ops) : run_verify(options);
  const bool ok = all_passed(results);
  if (common.as_json()) {
    json checks = json::array();
    for (const CheckResult& r : results) {
      checks.push_back({{"name", r.name},
                        {"scope", r.scope},
                        {"cases", r.cases},
                        {"failures", r.failures},
                        {"passed", r.passed()},
                        {"detail", r.detail},
                        {"note", r.note}});
    }
    out << json{{"checks", checks}, {"passed", ok}}.dump() << '\n';
  } else {
    std::size_t passed = 0;
    for (const CheckResult& r : results) {
      passed += r.passed();
      out << (r.passed() ? "PASS  " : "FAIL  ") << r.name << "  [" << r.scope << "]  cases "
          << r.cases;
      if (r.failures) out << ", failures " << r.failures;
      out << '\n';
      if (!r.detail.empty()) out << "      counterexample: " << r.detail << '\n';
      if (!r.note.empty()) out << "      note: " << r.note << '\n';
    }
    out << passed << " of " << results.size() << " checks passed\n";
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Promotion, evacuation, staircase embedding and cyclic sieving for SYT", "syt"};
  app.require_subcommand(1);
  Common common;

  std::string op_name;
  std::string tableau_text;
  std::string shape_text;
  long long power = 1;
  bool show_path = false;
  bool wide = false;
  std::string stat_name;
  std::optional<std::string> factor_text;
  int max_cells = 10;
  bool include_k5 = false;
  bool examples_only = false;

  const std::vector<std::string> ops = {"promote", "dual-promote", "evacuate", "dual-evacuate"};
  std::vector<std::string> apply_ops = ops;
  apply_ops.push_back("transpose");

  CLI::App* apply_cmd = app.add_subcommand("apply", "Apply an operator to a tableau");
  apply_cmd->add_option("--op", op_name, "Operator")->required()->check(CLI::IsMember(apply_ops));
  apply_cmd->add_option("--power", power, "Number of applications (negative inverts)")
      ->capture_default_str();
  apply_cmd->add_option("--tableau", tableau_text, "Tableau as \"1 2/3\" or JSON")->required();
  apply_cmd->add_flag("--show-path", show_path, "Print the sliding path");
  add_format(apply_cmd, common);

  CLI::App* embed_cmd = app.add_subcommand("embed", "Embed a staircase tableau in a rectangle");
  embed_cmd->add_option("--tableau", tableau_text, "Staircase tableau")->required();
  embed_cmd->add_flag("--wide", wide, "Use the (k+1)^k target instead of k^(k+1)");
  add_format(embed_cmd, common);

  CLI::App* desc_cmd = app.add_subcommand("desc", "Extended descent vector and its period");
  desc_cmd->add_option("--tableau", tableau_text, "Rectangular or staircase tableau")->required();
  add_format(desc_cmd, common);

  CLI::App* orbits_cmd = app.add_subcommand("orbits", "Cycle structure of an operator");
  orbits_cmd->add_option("--shape", shape_text, "Shape as 3,2,1 or 3^4 or sc:3")->required();
  orbits_cmd->add_option("--op", op_name, "Operator")->required()->check(CLI::IsMember(ops));
  add_format(orbits_cmd, common);
  add_limit(orbits_cmd, common);

  CLI::App* csp_cmd = app.add_subcommand("csp", "Cyclic sieving report or certificate check");
  csp_cmd->add_option("--shape", shape_text, "Shape as 3,2,1 or 3^4 or sc:3")->required();
  csp_cmd->add_option("--op", op_name, "Operator")->required()->check(CLI::IsMember(ops));
  csp_cmd->add_option("--stat", stat_name, "Statistic")
      ->check(CLI::IsMember({"maj", "comaj", "qhook"}));
  csp_cmd->add_option("--factors", factor_text, "Cyclotomic factors, e.g. 2,4^2,6,8,12");
  add_format(csp_cmd, common);
  add_limit(csp_cmd, common);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the worked examples and property checks");
  verify_cmd->add_option("--max-cells", max_cells, "Largest general shape size")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  verify_cmd->add_flag("--include-k5", include_k5, "Add the staircase k = 5 checks (slow)");
  verify_cmd->add_flag("--worked-examples", examples_only, "Run only the worked examples");
  add_format(verify_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*apply_cmd) return cmd_apply(common, op_name, power, tableau_text, show_path, out);
    if (*embed_cmd) return cmd_embed(common, tableau_text, wide, out);
    if (*desc_cmd) return cmd_desc(common, tableau_text, out);
    if (*orbits_cmd) return cmd_orbits(common, shape_text, op_name, out);
    if (*csp_cmd) return cmd_csp(common, shape_text, op_name, stat_name, factor_text, out);
    if (*verify_cmd) return cmd_verify(common, max_cells, include_k5, examples_only, out);
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const ModulusTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace syt
