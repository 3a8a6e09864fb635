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

#include "syt/csp.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "syt/checked.hpp"
#include "syt/descent.hpp"

namespace syt {

std::int64_t CycleStructure::set_size() const {
  std::int64_t total = 0;
  for (auto [c, m] : multiplicities) total = checked_add(total, checked_mul(c, m));
  return total;
}

CycleStructure make_cycle_structure(int order, std::map<int, std::int64_t> multiplicities,
                                    bool empirical_order) {
  if (order <= 0) throw std::invalid_argument("cycle structure order must be positive");
  CycleStructure cs{order, {}, empirical_order};
  for (auto [c, m] : multiplicities) {
    if (c <= 0 || m < 0) throw std::invalid_argument("invalid cycle size or multiplicity");
    if (m == 0) continue;
    if (order % c != 0) {
      throw std::invalid_argument("cycle size " + std::to_string(c) + " does not divide order " +
                                  std::to_string(order));
    }
    cs.multiplicities[c] = m;
  }
  return cs;
}

std::uint32_t ActionTable::index_of(const Tableau& t) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), t);
  if (it == elements.end() || *it != t) throw std::out_of_range("tableau not in table");
  return static_cast<std::uint32_t>(it - elements.begin());
}

unsigned worker_threads() {
  if (const char* env = std::getenv("SYT_THREADS")) {
    unsigned value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

void require_action(Operator op) {
  if (op == Operator::kTranspose) {
    throw std::invalid_argument("transpose does not act on SYT of a fixed shape");
  }
}

}  // namespace

ActionTable action_table(const Partition& shape, Operator op, std::uint64_t limit) {
  require_action(op);
  ActionTable table{enumerate_syt(shape, limit), {}};
  const std::size_t count = table.elements.size();
  table.image.assign(count, 0);
  const std::size_t workers =
      std::min<std::size_t>(worker_threads(), std::max<std::size_t>(1, count / 4096));
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      table.image[i] = table.index_of(apply(op, table.elements[i]));
    }
  };
  if (workers <= 1) {
    work(0, count);
    return table;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(count, begin + chunk);
      if (begin >= end) continue;
      pool.emplace_back([&, w, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return table;
}

std::vector<std::vector<std::uint32_t>> orbits(const ActionTable& table) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<char> seen(table.elements.size(), 0);
  for (std::uint32_t start = 0; start < table.elements.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> orbit;
    for (std::uint32_t i = start; !seen[i]; i = table.image[i]) {
      seen[i] = 1;
      orbit.push_back(i);
    }
    if (orbit.empty() || table.image[orbit.back()] != start) {
      throw std::logic_error("operator is not a bijection on the enumerated set");
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

CycleStructure cycle_structure(const ActionTable& table, const Partition& shape, Operator op) {
  std::map<int, std::int64_t> mult;
  std::int64_t lcm = 1;
  for (const auto& orbit : orbits(table)) {
    const int c = static_cast<int>(orbit.size());
    ++mult[c];
    lcm = checked_mul(lcm / std::gcd(lcm, std::int64_t{c}), std::int64_t{c});
    if (lcm > std::numeric_limits<int>::max()) throw OverflowError("cycle lengths have an lcm above 2^31");
  }
  std::optional<int> proven;
  if (op == Operator::kEvacuate || op == Operator::kDualEvacuate) {
    proven = 2;
  } else {
    proven = promotion_order(shape);
  }
  if (proven) return make_cycle_structure(*proven, std::move(mult));
  return make_cycle_structure(static_cast<int>(lcm), std::move(mult), /*empirical_order=*/true);
}

CycleStructure cycle_structure(const Partition& shape, Operator op, std::uint64_t limit) {
  return cycle_structure(action_table(shape, op, limit), shape, op);
}

int orbit_length(const Tableau& t, Operator op) {
  require_action(op);
  int length = 1;
  for (Tableau u = apply(op, t); u != t; u = apply(op, u)) ++length;
  return length;
}

PolynomialModQN canonical_csp_polynomial(const CycleStructure& cs) {
  const int n = cs.order;
  std::vector<std::int64_t> coeffs(n, 0);
  for (auto [c, m] : cs.multiplicities) {
    for (int j = 0; j < c; ++j) coeffs[j * (n / c)] = checked_add(coeffs[j * (n / c)], m);
  }
  return PolynomialModQN(n, coeffs);
}

std::int64_t fixed_point_count(const CycleStructure& cs, long long k) {
  const long long g = std::gcd(floor_mod(k, cs.order), static_cast<long long>(cs.order));
  std::int64_t total = 0;
  for (auto [c, m] : cs.multiplicities) {
    if (g % c == 0) total = checked_add(total, checked_mul(c, m));
  }
  return total;
}

std::optional<std::int64_t> value_at_root_of_unity(const PolynomialModQN& p, long long k) {
  const int n = p.modulus_degree();
  const long long g = std::gcd(floor_mod(k, n), static_cast<long long>(n));
  const int d = static_cast<int>(n / g);
  const Polynomial rem = divmod(p.lift(), cyclotomic(d)).second;
  if (rem.degree() > 0) return std::nullopt;
  return rem.coeff(0);
}

bool is_csp_polynomial(const PolynomialModQN& x, const CycleStructure& cs) {
  if (x.modulus_degree() != cs.order) {
    throw std::invalid_argument("polynomial modulus " + std::to_string(x.modulus_degree()) +
                                " does not match group order " + std::to_string(cs.order));
  }
  return x == canonical_csp_polynomial(cs);
}

std::vector<int> csp_shifts(const PolynomialModQN& x, const CycleStructure& cs) {
  const PolynomialModQN target = canonical_csp_polynomial(cs);
  if (x.modulus_degree() != cs.order) {
    throw std::invalid_argument("polynomial modulus does not match group order");
  }
  std::vector<int> out;
  for (int s = 0; s < cs.order; ++s) {
    if (x.shifted(s) == target) out.push_back(s);
  }
  return out;
}

std::int64_t maj(const Tableau& t) {
  std::int64_t total = 0;
  for (int d : descent_set(t)) total += d;
  return total;
}

std::int64_t comaj(const Tableau& t) {
  std::int64_t total = 0;
  for (int d : descent_set(t)) total += t.size() - d;
  return total;
}

std::int64_t b_number(const Partition& shape) {
  std::int64_t total = 0;
  for (int i = 1; i <= shape.num_rows(); ++i) {
    total = checked_add(total, checked_mul(std::int64_t{i - 1}, std::int64_t{shape.row_length(i)}));
  }
  return total;
}

Statistic maj_statistic() { return {"maj", [](const Tableau& t) { return maj(t); }}; }

Statistic comaj_statistic() { return {"comaj", [](const Tableau& t) { return comaj(t); }}; }

GeneratingFunction statistic_generating_function(const Partition& shape, const Statistic& stat,
                                                 int modulus_degree, std::uint64_t limit) {
  std::vector<std::int64_t> coeffs;
  for (const Tableau& t : enumerate_syt(shape, limit)) {
    const std::int64_t value = stat.evaluate(t);
    if (value < 0) throw std::domain_error("statistic " + stat.name + " took a negative value");
    if (static_cast<std::size_t>(value) >= coeffs.size()) coeffs.resize(value + 1, 0);
    ++coeffs[value];
  }
  Polynomial unreduced(std::move(coeffs));
  PolynomialModQN reduced(modulus_degree, unreduced);
  return {std::move(unreduced), std::move(reduced)};
}

Polynomial q_hook_length(const Partition& shape) {
  std::vector<int> numerator;
  for (int i = 1; i <= shape.size(); ++i) numerator.push_back(i);
  std::vector<int> denominator;
  for (int i = 1; i <= shape.num_rows(); ++i) {
    for (int j = 1; j <= shape.row_length(i); ++j) {
      denominator.push_back((shape.row_length(i) - j) + (shape.column_length(j) - i) + 1);
    }
  }
  std::sort(denominator.begin(), denominator.end());
  // Identical q-integers cancel outright; the rest is one exact division.
  std::vector<int> num_left;
  std::vector<int> den_left;
  std::set_difference(numerator.begin(), numerator.end(), denominator.begin(), denominator.end(),
                      std::back_inserter(num_left));
  std::set_difference(denominator.begin(), denominator.end(), numerator.begin(), numerator.end(),
                      std::back_inserter(den_left));
  Polynomial num = Polynomial::constant(1);
  for (int m : num_left) num = num * Polynomial::q_integer(m);
  Polynomial den = Polynomial::constant(1);
  for (int m : den_left) den = den * Polynomial::q_integer(m);
  return exact_divide(num, den);
}

std::vector<CyclotomicFactor> parse_factors(std::string_view text) {
  auto parse_int = [&](std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value <= 0) {
      throw std::invalid_argument("malformed factor list '" + std::string(text) + "'");
    }
    return value;
  };
  std::vector<CyclotomicFactor> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma - start);
    const std::size_t caret = item.find('^');
    if (caret == std::string_view::npos) {
      out.push_back({parse_int(item), 1});
    } else {
      out.push_back({parse_int(item.substr(0, caret)), parse_int(item.substr(caret + 1))});
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_factors(const std::vector<CyclotomicFactor>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += ' ';
    out += "Phi_" + std::to_string(f.index);
    if (f.exponent != 1) out += '^' + std::to_string(f.exponent);
  }
  return out;
}

Polynomial cyclotomic_product(const std::vector<CyclotomicFactor>& factors) {
  Polynomial out = Polynomial::constant(1);
  for (const auto& f : factors) out = out * cyclotomic(f.index).pow(f.exponent);
  return out;
}

PolynomialModQN cyclotomic_product(const std::vector<CyclotomicFactor>& factors,
                                   int modulus_degree) {
  PolynomialModQN out(modulus_degree, Polynomial::constant(1));
  for (const auto& f : factors) {
    const PolynomialModQN phi(modulus_degree, cyclotomic(f.index));
    for (int e = 0; e < f.exponent; ++e) out = out * phi;
  }
  return out;
}

bool verify_cyclotomic_product(const std::vector<CyclotomicFactor>& factors,
                               const CycleStructure& cs) {
  return is_csp_polynomial(cyclotomic_product(factors, cs.order), cs);
}

bool verify_cyclotomic_product(const std::vector<CyclotomicFactor>& factors,
                               const Partition& shape, Operator op, std::uint64_t limit) {
  return verify_cyclotomic_product(factors, cycle_structure(shape, op, limit));
}

}  // namespace syt
