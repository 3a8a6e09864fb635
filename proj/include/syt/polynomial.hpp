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

#ifndef SYT_POLYNOMIAL_HPP_
#define SYT_POLYNOMIAL_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace syt {

// Dense polynomial in q with int64 coefficients, lowest degree first and no
// trailing zeros. Every operation is exact and throws OverflowError instead
// of wrapping.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::int64_t> coeffs);

  static Polynomial constant(std::int64_t c);
  static Polynomial monomial(int degree, std::int64_t c = 1);
  // [m]_q = 1 + q + ... + q^(m-1).
  static Polynomial q_integer(int m);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t coeff(int d) const {
    return d >= 0 && d < static_cast<int>(coeffs_.size()) ? coeffs_[d] : 0;
  }
  std::int64_t evaluate(std::int64_t x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(int e) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

// Quotient and remainder by a monic divisor. Throws std::invalid_argument if
// the divisor is zero or not monic.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Throws std::domain_error when the remainder is nonzero.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

// Ascending human form, e.g. "1 + q^2", "-1 + q", "0".
std::string to_string(const Polynomial& p);

// The d-th cyclotomic polynomial, from q^d - 1 divided by the lower Phi_e, e | d.
Polynomial cyclotomic(int d);

// Thrown when a quotient ring would need more coefficients than
// kMaxModulusDegree; empirical orders of general shapes easily reach 10^8.
class ModulusTooLarge : public std::length_error {
 public:
  explicit ModulusTooLarge(const std::string& what) : std::length_error(what) {}
};

inline constexpr int kMaxModulusDegree = 1 << 20;

// Element of Z[q]/(q^N - 1) stored as its unique representative of degree < N.
class PolynomialModQN {
 public:
  // Throws std::invalid_argument for N <= 0 and ModulusTooLarge above
  // kMaxModulusDegree.
  explicit PolynomialModQN(int modulus_degree);
  PolynomialModQN(int modulus_degree, const Polynomial& p);
  PolynomialModQN(int modulus_degree, const std::vector<std::int64_t>& coeffs);

  int modulus_degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(int d) const { return coeffs_[d]; }
  bool is_zero() const;
  Polynomial lift() const { return Polynomial(coeffs_); }

  // Multiplication by q^s.
  PolynomialModQN shifted(long long s) const;

  PolynomialModQN& operator+=(const PolynomialModQN& other);
  friend PolynomialModQN operator+(PolynomialModQN a, const PolynomialModQN& b) { return a += b; }
  friend PolynomialModQN operator*(const PolynomialModQN& a, const PolynomialModQN& b);

  friend bool operator==(const PolynomialModQN&, const PolynomialModQN&) = default;

 private:
  void require_same_modulus(const PolynomialModQN& other) const;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace syt

#endif  // SYT_POLYNOMIAL_HPP_
