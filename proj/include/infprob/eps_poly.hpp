// Copyright 2026 The infprob Authors
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

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "infprob/rational.hpp"

namespace infprob {

/// Polynomial in the infinitesimal e with rational coefficients.
/// coefficients()[i] is the coefficient of e^i; the highest stored
/// coefficient is nonzero, so the zero polynomial is the empty sequence.
class EpsPoly {
 public:
  EpsPoly() = default;
  explicit EpsPoly(std::vector<Rational> coefficients);

  static EpsPoly constant(const Rational& c);
  static EpsPoly monomial(const Rational& c, std::size_t power);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const noexcept { return coeffs_.size(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of e^i; zero beyond the degree.
  Rational coefficient(std::size_t i) const;

  /// Index of the lowest nonzero coefficient. Requires a nonzero polynomial.
  std::size_t valuation() const;
  const Rational& lowest_coefficient() const { return coeffs_[valuation()]; }
  const Rational& leading_coefficient() const { return coeffs_.back(); }

  EpsPoly shifted_up(std::size_t k) const;
  /// Divides by e^k; the k lowest coefficients must be zero.
  EpsPoly shifted_down(std::size_t k) const;
  EpsPoly scaled(const Rational& c) const;
  /// Keeps only the terms of degree < n.
  EpsPoly truncated(std::size_t n) const;

  Rational evaluate(const Rational& x) const;

  EpsPoly operator-() const;
  EpsPoly& operator+=(const EpsPoly& rhs);
  EpsPoly& operator-=(const EpsPoly& rhs);
  friend EpsPoly operator+(EpsPoly lhs, const EpsPoly& rhs) { return lhs += rhs; }
  friend EpsPoly operator-(EpsPoly lhs, const EpsPoly& rhs) { return lhs -= rhs; }
  friend EpsPoly operator*(const EpsPoly& lhs, const EpsPoly& rhs);
  friend bool operator==(const EpsPoly& lhs, const EpsPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Euclidean division over Q: a = q*b + r with deg r < deg b. Throws
/// DivisionByZero when b is zero.
std::pair<EpsPoly, EpsPoly> divmod(const EpsPoly& a, const EpsPoly& b);

/// Quotient of a division known to be exact.
EpsPoly exact_quotient(const EpsPoly& a, const EpsPoly& b);

/// Greatest common divisor over Q, scaled so its lowest nonzero coefficient
/// is 1. gcd(0, 0) = 0.
EpsPoly gcd(const EpsPoly& a, const EpsPoly& b);

}  // namespace infprob
