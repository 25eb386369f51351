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

#include "doctest.h"
#include "infprob/errors.hpp"
#include "infprob/rational.hpp"

using infprob::ParseError;
using infprob::Rational;
using infprob::make_rational;

TEST_CASE("rational text") {
  CHECK(infprob::parse_rational("2/4") == make_rational(1, 2));
  CHECK(infprob::parse_rational(" -3 ") == -3);
  CHECK(infprob::parse_rational("+7/21") == make_rational(1, 3));
  CHECK(infprob::to_string(infprob::make_rational(-6, 4)) == "-3/2");
  CHECK(infprob::to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(infprob::parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(infprob::parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(infprob::parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(infprob::parse_rational(""), ParseError);
  CHECK_THROWS_AS(infprob::parse_rational("--1"), ParseError);
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(infprob::to_decimal(infprob::make_rational(1, 3), 4) == "0.3333");
  CHECK(infprob::to_decimal(infprob::make_rational(2, 3), 4) == "0.6667");
  CHECK(infprob::to_decimal(infprob::make_rational(-1, 8), 2) == "-0.13");
  CHECK(infprob::to_decimal(Rational(5), 0) == "5");
  CHECK(infprob::to_decimal(infprob::make_rational(-1, 1000), 2) == "0.00");
}

TEST_CASE("make_rational reduces") {
  CHECK(infprob::to_string(make_rational(10, -4)) == "-5/2");
  CHECK_THROWS_AS(make_rational(1, 0), infprob::DivisionByZero);
}
