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

#ifndef SYT_CSP_HPP_
#define SYT_CSP_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syt/dynamics.hpp"
#include "syt/polynomial.hpp"
#include "syt/tableau.hpp"

namespace syt {

// Cycle type of a permutation generating a cyclic group of order N.
struct CycleStructure {
  int order = 1;
  // Cycle size c -> multiplicity m_c; only positive multiplicities are kept.
  std::map<int, std::int64_t> multiplicities;
  // True when `order` is the lcm of the observed cycles rather than a proven
  // order of the operator.
  bool empirical_order = false;

  std::int64_t set_size() const;
  friend bool operator==(const CycleStructure&, const CycleStructure&) = default;
};

// Throws std::invalid_argument if some cycle size does not divide order.
CycleStructure make_cycle_structure(int order, std::map<int, std::int64_t> multiplicities,
                                    bool empirical_order = false);

// SYT(shape) together with the permutation induced by an operator, as indices
// into the sorted enumeration.
struct ActionTable {
  std::vector<Tableau> elements;
  std::vector<std::uint32_t> image;

  std::uint32_t index_of(const Tableau& t) const;
};

// Worker count from SYT_THREADS, else the hardware concurrency. Results never
// depend on it.
unsigned worker_threads();

// op must act on SYT(shape): promote, dual-promote, evacuate or dual-evacuate.
ActionTable action_table(const Partition& shape, Operator op,
                         std::uint64_t limit = kDefaultEnumerationLimit);

// Orbits of the table, each listed from its smallest element, in order of
// their smallest element.
std::vector<std::vector<std::uint32_t>> orbits(const ActionTable& table);

// Proven operator order when one is known (promotion n on rectangles and 2n
// on staircases, 2 for either evacuation), else the lcm of cycle sizes.
CycleStructure cycle_structure(const Partition& shape, Operator op,
                               std::uint64_t limit = kDefaultEnumerationLimit);
CycleStructure cycle_structure(const ActionTable& table, const Partition& shape, Operator op);

// Length of the orbit of t under op, by direct iteration.
int orbit_length(const Tableau& t, Operator op);

// sum_c m_c (1 + q^(N/c) + ... + q^((c-1)N/c)).
PolynomialModQN canonical_csp_polynomial(const CycleStructure& cs);

// Number of points fixed by a^k: sum of c * m_c over c dividing k.
std::int64_t fixed_point_count(const CycleStructure& cs, long long k);

// Exact value of p at zeta^k, zeta = exp(2 pi i / N), when that value is an
// integer: p is reduced modulo Phi_d, d = N / gcd(k, N), and the remainder
// must be constant. nullopt otherwise.
std::optional<std::int64_t> value_at_root_of_unity(const PolynomialModQN& p, long long k);

// x == canonical_csp_polynomial(cs) in Z[q]/(q^N - 1). Throws
// std::invalid_argument when the moduli differ.
bool is_csp_polynomial(const PolynomialModQN& x, const CycleStructure& cs);

// Every s in [0, N) such that q^s x is a CSP polynomial.
std::vector<int> csp_shifts(const PolynomialModQN& x, const CycleStructure& cs);

struct Statistic {
  std::string name;
  std::function<std::int64_t(const Tableau&)> evaluate;
};

std::int64_t maj(const Tableau& t);
std::int64_t comaj(const Tableau& t);
// sum_i (i - 1) lambda_i.
std::int64_t b_number(const Partition& shape);

Statistic maj_statistic();
Statistic comaj_statistic();

struct GeneratingFunction {
  Polynomial unreduced;
  PolynomialModQN reduced;
};

// sum over SYT(shape) of q^stat(T), also reduced modulo q^N - 1.
GeneratingFunction statistic_generating_function(const Partition& shape, const Statistic& stat,
                                                 int modulus_degree,
                                                 std::uint64_t limit = kDefaultEnumerationLimit);

// [n]_q! / prod over cells of [hook]_q, by exact division.
Polynomial q_hook_length(const Partition& shape);

struct CyclotomicFactor {
  int index;
  int exponent;
  friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

// "2,4^2,6,8,12" -> Phi_2 Phi_4^2 Phi_6 Phi_8 Phi_12. Throws std::invalid_argument.
std::vector<CyclotomicFactor> parse_factors(std::string_view text);
std::string format_factors(const std::vector<CyclotomicFactor>& factors);

Polynomial cyclotomic_product(const std::vector<CyclotomicFactor>& factors);
// The product reduced modulo q^N - 1, reducing after every factor.
PolynomialModQN cyclotomic_product(const std::vector<CyclotomicFactor>& factors,
                                   int modulus_degree);

bool verify_cyclotomic_product(const std::vector<CyclotomicFactor>& factors,
                               const CycleStructure& cs);
bool verify_cyclotomic_product(const std::vector<CyclotomicFactor>& factors,
                               const Partition& shape, Operator op,
                               std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace syt

#endif  // SYT_CSP_HPP_
