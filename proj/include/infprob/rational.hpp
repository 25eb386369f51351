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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace infprob {

/// Exact rational number. GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0 after sign handling). Surrounding
/// whitespace is ignored. Throws ParseError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Renders as "p" for integers and "p/q" otherwise.
std::string to_string(const Rational& r);

/// Decimal rendering rounded to `digits` fractional digits (display only).
std::string to_decimal(const Rational& r, int digits = 12);

/// n/d in lowest terms. Throws DivisionByZero when d = 0.
Rational make_rational(const Integer& n, const Integer& d);

int sign(const Rational& r);

}  // namespace infprob
