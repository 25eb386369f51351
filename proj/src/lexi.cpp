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

#include "infprob/lexi.hpp"

#include <stdexcept>

namespace infprob {

long Rank::value() const {
  if (!value_) throw std::logic_error("Rank::value on Top");
  return *value_;
}

std::string Rank::str() const { return value_ ? std::to_string(*value_) : "top"; }

std::strong_ordering operator<=>(const Rank& a, const Rank& b) {
  if (a.is_top() || b.is_top()) return a.is_top() <=> b.is_top();
  return *a.value_ <=> *b.value_;
}

LaurentExpansion::LaurentExpansion(const FieldValue& a) {
  if (a.is_zero()) return;
  valuation_ = Rank::at(a.order());
  num_ = a.numerator().shifted_down(a.numerator().valuation());
  den_ = a.denominator().shifted_down(a.denominator().valuation());
}

const Rational& LaurentExpansion::term(std::size_t j) {
  static const Rational zero = 0;
  if (valuation_.is_top()) return zero;
  // den_(0) == 1, so c_j = N_j - sum_{i >= 1} D_i c_{j-i}.
  const auto& d = den_.coefficients();
  while (terms_.size() <= j) {
    const std::size_t n = terms_.size();
    Rational c = num_.coefficient(n);
    for (std::size_t i = 1; i < d.size() && i <= n; ++i)
      if (d[i] != 0) c -= d[i] * terms_[n - i];
    terms_.push_back(std::move(c));
  }
  return terms_[j];
}

Rank valuation(const FieldValue& a) { return a.is_zero() ? Rank::top() : Rank::at(a.order()); }

Rational coefficient_at(const FieldValue& a, long k) {
  if (a.is_zero()) return 0;
  const long v = a.order();
  if (k < v) return 0;
  LaurentExpansion series(a);
  return series.term(static_cast<std::size_t>(k - v));
}

FieldValue remainder(const FieldValue& a, std::size_t depth) {
  if (a.is_zero() || depth == 0) return a;
  const long v = a.order();
  const EpsPoly num = a.numerator().shifted_down(a.numerator().valuation());
  const EpsPoly den = a.denominator().shifted_down(a.denominator().valuation());

  LaurentExpansion series(a);
  std::vector<Rational> head(depth);
  for (std::size_t j = 0; j < depth; ++j) head[j] = series.term(j);

  // num - den * head vanishes below e^depth.
  const EpsPoly rest = num - den * EpsPoly(std::move(head));
  if (rest.is_zero()) return {};
  const EpsPoly tail = rest.shifted_down(depth);
  const long shift = v + static_cast<long>(depth);
  if (shift >= 0) return FieldValue::ratio(tail.shifted_up(static_cast<std::size_t>(shift)), den);
  return FieldValue::ratio(tail, den.shifted_up(static_cast<std::size_t>(-shift)));
}

std::optional<std::size_t> closure_depth(const FieldValue& a) {
  if (a.is_zero()) return 0;
  const EpsPoly& den = a.denominator();
  if (den.size() - 1 != den.valuation()) return std::nullopt;
  const EpsPoly& num = a.numerator();
  return num.size() - num.valuation();
}

LexSeries expand(const FieldValue& a, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("expansion depth must be positive");
  LexSeries out;
  if (a.is_zero()) return out;
  out.valuation = valuation(a);
  std::size_t count = depth;
  const auto closure = closure_depth(a);
  out.exact = closure && *closure <= depth;
  if (out.exact) count = *closure;
  LaurentExpansion series(a);
  out.coefficients.reserve(count);
  for (std::size_t j = 0; j < count; ++j) out.coefficients.push_back(series.term(j));
  return out;
}

FieldValue LexSeries::reconstitute() const {
  FieldValue sum;
  if (valuation.is_top()) return sum;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] != 0)
      sum += FieldValue(coefficients[i]) * FieldValue::epsilon_power(valuation.value() + static_cast<long>(i));
  return sum;
}

namespace {

std::string monomial(long power) {
  if (power == 0) return "1";
  if (power == 1) return "e";
  return "e^" + std::to_string(power);
}

}  // namespace

std::string LexSeries::str() const {
  if (valuation.is_top()) return "0";
  static const std::string kMinus = "−";
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const Rational& c = coefficients[i];
    if (c == 0) continue;
    const long power = valuation.value() + static_cast<long>(i);
    const Rational mag = abs(c);
    std::string term;
    if (power == 0) term = to_string(mag);
    else if (mag == 1) term = monomial(power);
    else term = to_string(mag) + "·" + monomial(power);
    if (out.empty()) out = (c < 0 ? kMinus : "") + term;
    else out += (c < 0 ? " " + kMinus + " " : " + ") + term;
  }
  if (!exact) out += " + O(" + monomial(valuation.value() + static_cast<long>(coefficients.size())) + ")";
  return out;
}

LexComparison compare_lex(const FieldValue& a, const FieldValue& b) {
  LexComparison out;
  if (a == b) return out;
  LaurentExpansion sa(a);
  LaurentExpansion sb(b);
  const Rank start = std::min(sa.valuation(), sb.valuation());
  // a != b, so at least one side is nonzero and start is finite.
  auto coefficient = [](LaurentExpansion& s, long k) -> Rational {
    if (s.valuation().is_top() || k < s.valuation().value()) return 0;
    return s.term(static_cast<std::size_t>(k - s.valuation().value()));
  };
  for (long k = start.value();; ++k) {
    const Rational ca = coefficient(sa, k);
    const Rational cb = coefficient(sb, k);
    if (ca != cb) {
      out.order = ca < cb ? std::strong_ordering::less : std::strong_ordering::greater;
      out.divergence = Rank::at(k);
      out.difference = ca - cb;
      return out;
    }
  }
}

}  // namespace infprob
