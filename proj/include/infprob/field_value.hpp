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

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "infprob/eps_poly.hpp"
#include "infprob/rational.hpp"

namespace infprob {

/// Element of the ordered field Q(e) of rational functions in one positive
/// infinitesimal e.
///
/// Values are always held in canonical form: numerator and denominator are
/// coprime, the denominator's lowest nonzero coefficient is 1, and zero is
/// 0/1. Structural equality is therefore semantic equality. The ordering is
/// the one in which e is positive and below every positive rational: the
/// sign of a value is the sign of the lowest nonzero numerator coefficient.
class FieldValue {
 public:
  FieldValue() : den_(EpsPoly::constant(1)) {}
  FieldValue(const Rational& r);  // NOLINT(google-explicit-constructor)
  FieldValue(long n) : FieldValue(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  static FieldValue epsilon();
  /// e^k for any integer k.
  static FieldValue epsilon_power(long k);
  /// num/den reduced to canonical form. Throws DivisionByZero if den is zero.
  static FieldValue ratio(EpsPoly num, EpsPoly den);

  /// Parses the polynomial syntax produced by str(), e.g. "(1+2e)/(2+e^2)".
  /// Accepts + - * / ^, parentheses, integers, "p/q" and "e". A coefficient
  /// written next to e ("2e") binds tighter than / and *.
  static FieldValue parse(std::string_view text);
  std::string str() const;

  const EpsPoly& numerator() const noexcept { return num_; }
  const EpsPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// e-adic order val(num) - val(den). Requires a nonzero value.
  long order() const;

  FieldValue operator-() const;
  FieldValue& operator+=(const FieldValue& rhs) { return *this = *this + rhs; }
  FieldValue& operator-=(const FieldValue& rhs) { return *this = *this - rhs; }
  FieldValue& operator*=(const FieldValue& rhs) { return *this = *this * rhs; }
  FieldValue& operator/=(const FieldValue& rhs) { return *this = *this / rhs; }

  friend FieldValue operator+(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator-(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator*(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator/(const FieldValue& a, const FieldValue& b);

  friend bool operator==(const FieldValue& a, const FieldValue& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const FieldValue& a, const FieldValue& b);

 private:
  struct Trusted {};
  FieldValue(EpsPoly num, EpsPoly den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}

  EpsPoly num_;
  EpsPoly den_;
};

std::strong_ordering compare(const FieldValue& a, const FieldValue& b);

/// Multiplicative inverse; throws DivisionByZero on zero.
FieldValue inverse(const FieldValue& a);

/// -1, 0 or +1.
int sign(const FieldValue& a);

/// The unique rational infinitely close to a finite value. Throws
/// InfiniteValue when the value is infinite.
Rational standard_part(const FieldValue& a);

bool is_infinitesimal(const FieldValue& a);
bool is_finite(const FieldValue& a);

std::ostream& operator<<(std::ostream& os, const FieldValue& a);

/// Renders a polynomial in the FieldValue text syntax, e.g. "1/2-e+3e^2".
std::string render_poly(const EpsPoly& p);

}  // namespace infprob
