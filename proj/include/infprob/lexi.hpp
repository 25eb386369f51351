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
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "infprob/field_value.hpp"

namespace infprob {

/// Rank of a field value: its e-adic order, or Top for zero. Int(j) < Int(k)
/// iff j < k, and every Int(k) < Top.
class Rank {
 public:
  static Rank top() { return Rank(); }
  static Rank at(long k) { return Rank(k); }

  bool is_top() const noexcept { return !value_; }
  /// Integer value; throws std::logic_error for Top.
  long value() const;

  /// "top" or the decimal integer.
  std::string str() const;

  friend bool operator==(const Rank&, const Rank&) = default;
  friend std::strong_ordering operator<=>(const Rank& a, const Rank& b);

 private:
  Rank() = default;
  explicit Rank(long k) : value_(k) {}

  std::optional<long> value_;
};

/// Lazily computed Laurent expansion of a value around e = 0, with rank
/// units fixed as powers of e.
class LaurentExpansion {
 public:
  explicit LaurentExpansion(const FieldValue& a);

  Rank valuation() const { return valuation_; }
  /// Coefficient of e^(valuation + j). All zero for the zero value.
  const Rational& term(std::size_t j);

 private:
  Rank valuation_ = Rank::top();
  EpsPoly num_;  // numerator with its e-power removed
  EpsPoly den_;  // denominator with its e-power removed; constant term is 1
  std::vector<Rational> terms_;
};

/// Truncated or complete expansion sum coefficients[i] * e^(valuation + i).
struct LexSeries {
  Rank valuation = Rank::top();
  std::vector<Rational> coefficients;
  /// True when the expansion terminates within the requested depth.
  bool exact = true;

  /// The finite sum of the stored terms.
  FieldValue reconstitute() const;
  /// e.g. "1/2 + 1/4·e − 1/8·e^2 + O(e^3)"; no O-term when exact.
  std::string str() const;
};

Rank valuation(const FieldValue& a);

/// Coefficient of e^k in the Laurent expansion of a.
Rational coefficient_at(const FieldValue& a, long k);

/// a minus its first `depth` expansion terms, counted from the valuation.
FieldValue remainder(const FieldValue& a, std::size_t depth);

/// Up to `depth` (>= 1) expansion terms. Exact expansions are trimmed to
/// their closure depth.
LexSeries expand(const FieldValue& a, std::size_t depth);

/// Smallest n with remainder(a, n) == 0, or nullopt if the expansion never
/// terminates (the reduced denominator is not a monomial).
std::optional<std::size_t> closure_depth(const FieldValue& a);

struct LexComparison {
  std::strong_ordering order = std::strong_ordering::equal;
  /// First rank at which the expansions differ; Top when a == b.
  Rank divergence = Rank::top();
  /// Coefficient of a - b at the divergence rank; zero when a == b.
  Rational difference;
};

/// Lexicographic comparison: walks both expansions upward from the smaller
/// valuation and decides at the first rank where coefficients differ.
LexComparison compare_lex(const FieldValue& a, const FieldValue& b);

}  // namespace infprob
