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
#include "infprob/eps_poly.hpp"
#include "infprob/errors.hpp"
#include "test_support.hpp"

using namespace infprob;
using namespace infprob::testing;

namespace {

EpsPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return EpsPoly(std::move(v));
}

bool divides(const EpsPoly& d, const EpsPoly& p) { return divmod(p, d).second.is_zero(); }

}  // namespace

TEST_CASE("trailing zeros are trimmed") {
  CHECK(poly({1, 2, 0, 0}).size() == 2);
  CHECK(poly({0, 0}).is_zero());
  CHECK(poly({0, 0, 3}).valuation() == 2);
}

TEST_CASE("divmod reconstructs the dividend") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const EpsPoly a = random_poly(rng, 9, 50);
    const EpsPoly b = random_poly(rng, 5, 50);
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
  CHECK_THROWS_AS(divmod(poly({1}), EpsPoly{}), DivisionByZero);
}

TEST_CASE("gcd of known factorizations") {
  // (1+e)(2-e) and (1+e)e^2 share exactly 1+e
  CHECK(gcd(poly({2, 1, -1}), poly({0, 0, 1, 1})) == poly({1, 1}));
  CHECK(gcd(poly({0, 0, 5}), poly({0, 3})) == poly({0, 1}));
  CHECK(gcd(poly({3}), poly({1, 1})) == poly({1}));
  CHECK(gcd(EpsPoly{}, poly({4, 2})) == EpsPoly(std::vector<Rational>{1, make_rational(1, 2)}));
  CHECK(gcd(EpsPoly{}, EpsPoly{}).is_zero());
}

TEST_CASE("gcd recovers a planted common factor") {
  Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    const EpsPoly f = random_poly(rng, 4, 20);
    const EpsPoly a = random_poly(rng, 6, 1000);
    const EpsPoly b = random_poly(rng, 6, 1000);
    const EpsPoly g = gcd(a * f, b * f);
    CHECK(divides(g, a * f));
    CHECK(divides(g, b * f));
    CHECK(divides(f, g));
    // cofactors are coprime
    const EpsPoly ca = exact_quotient(a * f, g);
    const EpsPoly cb = exact_quotient(b * f, g);
    CHECK(gcd(ca, cb) == EpsPoly::constant(1));
    CHECK(g.lowest_coefficient() == 1);
  }
}
