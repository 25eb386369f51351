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

// Shared generators and independent oracles for the test suites. Nothing
// here calls FieldValue arithmetic: oracles work on raw coefficient vectors.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "infprob/bridge.hpp"
#include "infprob/events.hpp"
#include "infprob/field_value.hpp"
#include "infprob/popper.hpp"

namespace infprob::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long max_mag) {
  Rational r(uniform(rng, -max_mag, max_mag), uniform(rng, 1, max_mag));
  r.canonicalize();
  return r;
}

/// Integer coefficients in [-max_mag, max_mag], degree <= max_degree; never zero.
inline EpsPoly random_poly(Rng& rng, int max_degree, long max_mag) {
  for (;;) {
    const int degree = static_cast<int>(uniform(rng, 0, max_degree));
    // Sparse low terms make nonzero valuations common.
    const int low = uniform(rng, 0, 3) == 0 ? static_cast<int>(uniform(rng, 0, degree)) : 0;
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (int i = low; i <= degree; ++i) c[static_cast<std::size_t>(i)] = uniform(rng, -max_mag, max_mag);
    EpsPoly p(std::move(c));
    if (!p.is_zero()) return p;
  }
}

/// Random element of Q(e) with numerator and denominator of degree <= 8.
inline FieldValue random_value(Rng& rng, int max_degree = 8, long max_mag = 1000000) {
  switch (uniform(rng, 0, 9)) {
    case 0: return FieldValue(random_rational(rng, max_mag));
    case 1: return FieldValue(random_rational(rng, max_mag)) * FieldValue::epsilon_power(uniform(rng, -3, 3));
    case 2: return {};
    case 3: {
      // shared factor forces a nontrivial gcd during canonicalization
      const EpsPoly f = random_poly(rng, 2, 9);
      return FieldValue::ratio(random_poly(rng, max_degree - 2, max_mag) * f, random_poly(rng, max_degree - 2, max_mag) * f);
    }
    default: return FieldValue::ratio(random_poly(rng, max_degree, max_mag), random_poly(rng, max_degree, max_mag));
  }
}

// ---- naive coefficient-vector arithmetic ----

using Coeffs = std::vector<Rational>;

inline Coeffs naive_mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Coeffs naive_sub(Coeffs a, const Coeffs& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

inline Rational naive_eval(const Coeffs& p, const Rational& x) {
  Rational acc = 0, power = 1;
  for (const auto& c : p) {
    acc += c * power;
    power *= x;
  }
  return acc;
}

/// A positive rational below every positive root of p (Cauchy bound applied
/// to the reversed polynomial). On (0, point) p has no sign change.
inline Rational below_roots(const Coeffs& p) {
  std::size_t v = 0;
  while (v < p.size() && p[v] == 0) ++v;
  if (v == p.size()) return 1;
  Rational largest = 0;
  for (std::size_t i = v + 1; i < p.size(); ++i) largest = std::max(largest, Rational(abs(p[i])));
  const Rational low = abs(p[v]);
  return low / (low + largest) / 2;
}

/// Sign of an/ad - bn/bd as e -> 0+, by exact evaluation at a point below
/// all positive roots of the numerator and both denominators.
inline int oracle_sign_of_difference(const FieldValue& a, const FieldValue& b) {
  const Coeffs an = a.numerator().coefficients(), ad = a.denominator().coefficients();
  const Coeffs bn = b.numerator().coefficients(), bd = b.denominator().coefficients();
  const Coeffs top = naive_sub(naive_mul(an, bd), naive_mul(bn, ad));
  const Coeffs bottom = naive_mul(ad, bd);
  const Rational x = std::min(below_roots(top), below_roots(bottom));
  return sgn(naive_eval(top, x)) * sgn(naive_eval(bottom, x));
}

/// Value of a at the rational point x (x must not be a pole).
inline Rational eval_at(const FieldValue& a, const Rational& x) {
  return naive_eval(a.numerator().coefficients(), x) / naive_eval(a.denominator().coefficients(), x);
}

// ---- random models ----

inline NapModel random_model(Rng& rng, std::size_t max_outcomes, long max_rank) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_outcomes)));
  std::vector<std::string> labels;
  std::vector<Rational> weights;
  std::vector<long> ranks;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i));
    Rational w(uniform(rng, 1, 12), uniform(rng, 1, 12));
    w.canonicalize();
    weights.push_back(w);
    ranks.push_back(uniform(rng, 0, max_rank));
  }
  return NapModel(SampleSpace(std::move(labels)), std::move(weights), std::move(ranks));
}

inline Event random_subset(Rng& rng, std::size_t n) {
  return Event(std::uniform_int_distribution<std::uint64_t>(0, Event::full(n).bits())(rng));
}

inline std::vector<std::string> atom_labels(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back("b" + std::to_string(i + 1));
  return out;
}

/// Random well-formed stratified measure with m atoms and at most
/// max_rank + 1 strata (every stratum nonempty).
inline StratifiedMeasure random_stratified(Rng& rng, std::size_t m, long max_rank) {
  const auto strata = static_cast<std::size_t>(uniform(rng, 1, std::min<long>(max_rank + 1, static_cast<long>(m))));
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> stratum_of(m);
  for (std::size_t k = 0; k < strata; ++k) stratum_of[order[k]] = k;  // each stratum gets one atom
  for (std::size_t k = strata; k < m; ++k) stratum_of[order[k]] = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(strata) - 1));

  StratifiedMeasure s;
  s.atom_count = m;
  s.strata.resize(strata);
  std::vector<Rational> raw(m);
  std::vector<Rational> total(strata);
  for (std::size_t i = 0; i < m; ++i) {
    raw[i] = uniform(rng, 1, 9);
    total[stratum_of[i]] += raw[i];
  }
  for (std::size_t i = 0; i < m; ++i) s.strata[stratum_of[i]].emplace(i, raw[i] / total[stratum_of[i]]);
  return s;
}

}  // namespace infprob::testing
