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

#include "infprob/field_value.hpp"

#include <ostream>

#include "infprob/errors.hpp"

namespace infprob {

namespace {

bool is_one(const EpsPoly& p) { return p.size() == 1 && p.coefficients()[0] == 1; }

}  // namespace

FieldValue::FieldValue(const Rational& r) : num_(EpsPoly::constant(r)), den_(EpsPoly::constant(1)) {}

FieldValue FieldValue::epsilon() { return {EpsPoly::monomial(1, 1), EpsPoly::constant(1), Trusted{}}; }

FieldValue FieldValue::epsilon_power(long k) {
  if (k >= 0) return {EpsPoly::monomial(1, static_cast<std::size_t>(k)), EpsPoly::constant(1), Trusted{}};
  return {EpsPoly::constant(1), EpsPoly::monomial(1, static_cast<std::size_t>(-k)), Trusted{}};
}

FieldValue FieldValue::ratio(EpsPoly num, EpsPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return {};
  EpsPoly g = gcd(num, den);
  if (!is_one(g)) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  const Rational lead = den.lowest_coefficient();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return {std::move(num), std::move(den), Trusted{}};
}

long FieldValue::order() const {
  return static_cast<long>(num_.valuation()) - static_cast<long>(den_.valuation());
}

FieldValue FieldValue::operator-() const { return {-num_, den_, Trusted{}}; }

FieldValue operator+(const FieldValue& a, const FieldValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return FieldValue::ratio(a.num_ + b.num_, a.den_);
  // Henrici: with g = gcd(da, db), only g can share factors with the new numerator.
  const EpsPoly g = gcd(a.den_, b.den_);
  if (is_one(g)) {
    EpsPoly num = a.num_ * b.den_ + b.num_ * a.den_;
    if (num.is_zero()) return {};
    return {std::move(num), a.den_ * b.den_, FieldValue::Trusted{}};
  }
  const EpsPoly da = exact_quotient(a.den_, g);
  const EpsPoly db = exact_quotient(b.den_, g);
  EpsPoly num = a.num_ * db + b.num_ * da;
  if (num.is_zero()) return {};
  const EpsPoly g2 = gcd(num, g);
  if (!is_one(g2)) return FieldValue::ratio(exact_quotient(num, g2), da * exact_quotient(b.den_, g2));
  return FieldValue::ratio(std::move(num), da * b.den_);
}

FieldValue operator-(const FieldValue& a, const FieldValue& b) { return a + (-b); }

FieldValue operator*(const FieldValue& a, const FieldValue& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Cross-cancel so that only coprime pieces are multiplied.
  const EpsPoly g1 = gcd(a.num_, b.den_);
  const EpsPoly g2 = gcd(b.num_, a.den_);
  const EpsPoly an = is_one(g1) ? a.num_ : exact_quotient(a.num_, g1);
  const EpsPoly bd = is_one(g1) ? b.den_ : exact_quotient(b.den_, g1);
  const EpsPoly bn = is_one(g2) ? b.num_ : exact_quotient(b.num_, g2);
  const EpsPoly ad = is_one(g2) ? a.den_ : exact_quotient(a.den_, g2);
  // gcds have lowest coefficient 1, so the product denominator stays normalized.
  return {an * bn, ad * bd, FieldValue::Trusted{}};
}

FieldValue inverse(const FieldValue& a) {
  if (a.is_zero()) throw DivisionByZero();
  return FieldValue::ratio(a.denominator(), a.numerator());
}

FieldValue operator/(const FieldValue& a, const FieldValue& b) {
  if (b.is_zero()) throw DivisionByZero();
  return a * inverse(b);
}

int sign(const FieldValue& a) {
  if (a.is_zero()) return 0;
  return sgn(a.numerator().lowest_coefficient());
}

std::strong_ordering compare(const FieldValue& a, const FieldValue& b) {
  if (a == b) return std::strong_ordering::equal;
  const int s = sign(a - b);
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering operator<=>(const FieldValue& a, const FieldValue& b) { return compare(a, b); }

Rational standard_part(const FieldValue& a) {
  if (a.is_zero()) return 0;
  const long k = a.order();
  if (k < 0) throw InfiniteValue();
  if (k > 0) return 0;
  return a.numerator().lowest_coefficient() / a.denominator().lowest_coefficient();
}

bool is_infinitesimal(const FieldValue& a) { return !a.is_zero() && a.order() > 0; }

bool is_finite(const FieldValue& a) { return a.is_zero() || a.order() >= 0; }

std::ostream& operator<<(std::ostream& os, const FieldValue& a) { return os << a.str(); }

}  // namespace infprob
