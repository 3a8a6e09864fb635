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

#include "syt/polynomial.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "syt/checked.hpp"

namespace syt {

Polynomial::Polynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(std::int64_t c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int degree, std::int64_t c) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<std::int64_t> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::q_integer(int m) {
  if (m < 0) throw std::invalid_argument("q-integer of a negative number");
  return Polynomial(std::vector<std::int64_t>(m, 1));
}

std::int64_t Polynomial::evaluate(std::int64_t x) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = checked_add(checked_mul(acc, x), *it);
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] = checked_sub(coeffs_[i], other.coeffs_[i]);
  }
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial exponent");
  Polynomial result = constant(1);
  for (int i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero() || b.coeffs().back() != 1) {
    throw std::invalid_argument("division requires a monic divisor");
  }
  std::vector<std::int64_t> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<std::int64_t> quot(a.degree() - db + 1, 0);
  for (int d = a.degree(); d >= db; --d) {
    const std::int64_t lead = rem[d];
    if (lead == 0) continue;
    quot[d - db] = lead;
    for (int i = 0; i <= db; ++i) {
      rem[d - db + i] = checked_sub(rem[d - db + i], checked_mul(lead, b.coeffs()[i]));
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  auto [quot, rem] = divmod(a, b);
  if (!rem.is_zero()) throw std::domain_error("polynomial division is not exact");
  return quot;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  // Ascending degree, which reads naturally for CSP polynomials.
  std::string out;
  for (int d = 0; d <= p.degree(); ++d) {
    const std::int64_t c = p.coeff(d);
    if (c == 0) continue;
    const bool negative = c < 0;
    const std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || d == 0) out += std::to_string(mag);
    if (d >= 1) out += 'q';
    if (d >= 2) out += '^' + std::to_string(d);
  }
  return out;
}

Polynomial cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<int, Polynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  Polynomial result = Polynomial::monomial(d) - Polynomial::constant(1);
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) result = exact_divide(result, cyclotomic(e));
  }
  std::lock_guard lock(mutex);
  cache.emplace(d, result);
  return result;
}

PolynomialModQN::PolynomialModQN(int modulus_degree) {
  if (modulus_degree <= 0) throw std::invalid_argument("modulus degree must be positive");
  if (modulus_degree > kMaxModulusDegree) {
    throw ModulusTooLarge("modulus degree " + std::to_string(modulus_degree) + " exceeds " +
                          std::to_string(kMaxModulusDegree));
  }
  coeffs_.assign(modulus_degree, 0);
}

PolynomialModQN::PolynomialModQN(int modulus_degree, const Polynomial& p)
    : PolynomialModQN(modulus_degree) {
  for (int d = 0; d <= p.degree(); ++d) {
    auto& slot = coeffs_[d % modulus_degree];
    slot = checked_add(slot, p.coeff(d));
  }
}

PolynomialModQN::PolynomialModQN(int modulus_degree, const std::vector<std::int64_t>& coeffs)
    : PolynomialModQN(modulus_degree, Polynomial(coeffs)) {}

bool PolynomialModQN::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

PolynomialModQN PolynomialModQN::shifted(long long s) const {
  const int n = modulus_degree();
  PolynomialModQN out(n);
  for (int d = 0; d < n; ++d) out.coeffs_[floor_mod(d + s, n)] = coeffs_[d];
  return out;
}

void PolynomialModQN::require_same_modulus(const PolynomialModQN& other) const {
  if (other.modulus_degree() != modulus_degree()) {
    throw std::invalid_argument("mismatched moduli q^N - 1");
  }
}

PolynomialModQN& PolynomialModQN::operator+=(const PolynomialModQN& other) {
  require_same_modulus(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  }
  return *this;
}

PolynomialModQN operator*(const PolynomialModQN& a, const PolynomialModQN& b) {
  a.require_same_modulus(b);
  const int n = a.modulus_degree();
  PolynomialModQN out(n);
  for (int i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      auto& slot = out.coeffs_[(i + j) % n];
      slot = checked_add(slot, checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return out;
}

}  // namespace syt
