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
#include "infprob/events.hpp"
#include "infprob/lexi.hpp"
#include "test_support.hpp"

using namespace infprob;
using namespace infprob::testing;

namespace {

const FieldValue e = FieldValue::epsilon();

NapModel two_point(long rank_b) {
  return NapModel(SampleSpace({"a", "b"}), {Rational(1), Rational(1)}, {0, rank_b});
}

// Sums w * e^rank outcome by outcome in the field itself.
FieldValue prob_by_terms(const NapModel& m, Event a) {
  FieldValue num, den;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const FieldValue term = FieldValue(m.weight(i)) * FieldValue::epsilon_power(m.rank(i));
    den = den + term;
    if (a.contains(i)) num = num + term;
  }
  return num / den;
}

// Physically lists every replicated copy and counts weight.
Rational counted_snapshot(const NapModel& m, Event a, Event b, const SnapshotProfile& p, unsigned long n) {
  std::vector<std::pair<std::size_t, Rational>> copies;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const unsigned long count = p.count_of(m.rank(i), n).get_ui();
    for (unsigned long c = 0; c < count; ++c) copies.emplace_back(i, m.weight(i));
  }
  Rational in_a, in_b;
  for (const auto& [i, w] : copies) {
    if (!b.contains(i)) continue;
    in_b += w;
    if (a.contains(i)) in_a += w;
  }
  return in_a / in_b;
}

Event random_nonempty(Rng& rng, std::size_t n) {
  Event b;
  while (b.empty()) b = random_subset(rng, n);
  return b;
}

}  // namespace

TEST_CASE("sample space") {
  const SampleSpace s({"a", "b", "c"});
  CHECK(s.size() == 3);
  CHECK(s.index_of("b") == std::optional<std::size_t>(1));
  CHECK(!s.index_of("z").has_value());
  const std::vector<std::string> names{"c", "a"};
  CHECK(s.event_of(names) == Event(0b101));
  CHECK(s.render(Event(0b101)) == "{a, c}");
  CHECK(s.render(Event()) == "{}");
  const std::vector<std::string> bad{"q"};
  CHECK_THROWS_AS(s.event_of(bad), UnboundAtom);
  CHECK_THROWS_AS(SampleSpace(std::vector<std::string>{}), InvalidModel);
  CHECK_THROWS_AS(SampleSpace({"a", "a"}), InvalidModel);
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("x" + std::to_string(i));
  CHECK_THROWS_AS(SampleSpace{many}, InvalidModel);
}

TEST_CASE("event algebra") {
  const Event a(0b0110), b(0b0011);
  CHECK((a & b) == Event(0b0010));
  CHECK((a | b) == Event(0b0111));
  CHECK((a - b) == Event(0b0100));
  CHECK(a.complement(4) == Event(0b1001));
  CHECK(a.size() == 2);
  CHECK(a.members() == std::vector<std::size_t>{1, 2});
  CHECK(Event(0b0010).subset_of(a));
  CHECK(!a.disjoint(b));
  CHECK(Event::full(64).size() == 64);
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(NapModel(SampleSpace({"a"}), {Rational(0)}, {0}), InvalidModel);
  CHECK_THROWS_AS(NapModel(SampleSpace({"a"}), {Rational(-1)}, {0}), InvalidModel);
  CHECK_THROWS_AS(NapModel(SampleSpace({"a"}), {Rational(1)}, {-1}), InvalidModel);
  CHECK_THROWS_AS(NapModel(SampleSpace({"a", "b"}), {Rational(1)}, {0, 0}), InvalidModel);
  const NapModel shifted(SampleSpace({"a", "b"}), {Rational(1), Rational(1)}, {2, 3});
  CHECK(shifted.ranks() == std::vector<long>{0, 1});
  CHECK(prob(shifted, Event(0b10)) == prob(two_point(1), Event(0b10)));
  CHECK_THROWS_AS(prob(shifted, Event(0b100)), InvalidModel);
}

TEST_CASE("prob examples") {
  const NapModel uniform2 = two_point(0);
  CHECK(prob(uniform2, Event(0b01)) == FieldValue(make_rational(1, 2)));
  const NapModel m = two_point(1);
  CHECK(prob(m, Event(0b10)) == e / (1 + e));
  CHECK(prob(m, m.space().full()) == FieldValue(1));
  CHECK(prob(m, Event()) == FieldValue());
}

TEST_CASE("cond examples") {
  const NapModel uniform2 = two_point(0);
  const FieldValue half = cond(uniform2, Event(0b01), Event(0b11));
  CHECK(half == FieldValue(make_rational(1, 2)));
  CHECK(valuation(half) == Rank::at(0));
  const NapModel m = two_point(1);
  CHECK(cond(m, Event(0b10), Event(0b10)) == FieldValue(1));
  const FieldValue c = cond(m, Event(0b10), Event(0b11));
  CHECK(c == e / (1 + e));
  CHECK(standard_part(c) == 0);
  CHECK_THROWS_AS(cond(m, Event(0b01), Event()), EmptyCondition);
}

TEST_CASE("snapshot profile") {
  const SnapshotProfile p(2);
  CHECK(p.count_of(2, 3) == 3);
  CHECK(p.count_of(1, 3) == 27);
  CHECK(p.count_of(0, 3) == 19683);
  CHECK_THROWS_AS(p.count_of(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(p.count_of(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(SnapshotProfile(-1), std::invalid_argument);
  for (long R = 0; R <= 4; ++R) {
    const SnapshotProfile q(R);
    for (unsigned long n = 2; n <= 6; ++n)
      for (long j = 0; j < R; ++j)
        for (long k = j + 1; k <= R; ++k) CHECK(q.count_of(j, n) > q.count_of(k, n) * q.count_of(k, n));
  }
}

TEST_CASE("snapshot examples") {
  const NapModel m = two_point(1);
  const SnapshotProfile p = SnapshotProfile::for_model(m);
  for (unsigned long n : {2UL, 3UL, 4UL, 8UL, 16UL, 100UL}) {
    const Integer nn(static_cast<long>(n));
    CHECK(snapshot_cond(m, Event(0b10), m.space().full(), p, n) == make_rational(1, nn * nn + 1));
  }
  CHECK_THROWS_AS(snapshot_cond(m, Event(0b10), Event(), p, 2), EmptyCondition);
  CHECK_THROWS_AS(snapshot_cond(m, Event(0b10), Event(0b11), p, 1), std::invalid_argument);
}

TEST_CASE("snapshot with equal ranks matches cond") {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    NapModel base = random_model(rng, 8, 0);
    const Event a = random_subset(rng, base.size()), b = random_nonempty(rng, base.size());
    const FieldValue exact = cond(base, a, b);
    const auto n = static_cast<unsigned long>(uniform(rng, 2, 50));
    CHECK(FieldValue(snapshot_cond(base, a, b, SnapshotProfile::for_model(base), n)) == exact);
  }
}

TEST_CASE("snapshot agrees with literal replication") {
  Rng rng(22);
  for (int t = 0; t < 60; ++t) {
    const NapModel m = random_model(rng, 5, 2);
    const SnapshotProfile p = SnapshotProfile::for_model(m);
    const Event a = random_subset(rng, m.size()), b = random_nonempty(rng, m.size());
    for (unsigned long n : {2UL, 3UL})
      CHECK(snapshot_cond(m, a, b, p, n) == counted_snapshot(m, a, b, p, n));
  }
}

TEST_CASE("snapshot converges to the standard part") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const NapModel m = random_model(rng, 8, 3);
    const SnapshotProfile p = SnapshotProfile::for_model(m);
    const Event a = random_subset(rng, m.size()), b = random_nonempty(rng, m.size());
    const Rational target = standard_part(cond(m, a, b));
    const Rational d = abs(snapshot_cond(m, a, b, p, 64) - target);
    CHECK(d < make_rational(1, 1000));
  }
}

TEST_CASE("NAP laws") {
  Rng rng(24);
  for (int t = 0; t < 400; ++t) {
    const NapModel m = random_model(rng, 12, 4);
    const std::size_t n = m.size();
    CHECK(prob(m, m.space().full()) == FieldValue(1));
    const Event a = random_subset(rng, n), b = random_subset(rng, n);
    const FieldValue pa = prob(m, a);
    CHECK(pa == prob_by_terms(m, a));
    if (!a.empty()) {
      CHECK(sign(pa) == 1);
      Rank expected = Rank::top();
      for (std::size_t i : a.members()) expected = std::min(expected, Rank::at(m.rank(i)));
      CHECK(valuation(pa) == expected);
    } else {
      CHECK(pa.is_zero());
    }
    if (a.disjoint(b)) CHECK(prob(m, a | b) == pa + prob(m, b));
    CHECK(prob(m, a & b) <= prob(m, a));
    CHECK(prob(m, a) <= prob(m, a | b));
    if (!b.empty()) CHECK(cond(m, a, b) * prob(m, b) == prob(m, a & b));

    std::vector<Event> parts;
    for (std::size_t i : a.members()) {
      const auto k = static_cast<std::size_t>(uniform(rng, 0, 2));
      if (k >= parts.size()) parts.emplace_back();
      parts[std::min(k, parts.size() - 1)] = parts[std::min(k, parts.size() - 1)] | Event::singleton(i);
    }
    CHECK(partition_sum_check(m, a, parts));
  }
}

TEST_CASE("partition validation") {
  const NapModel m = two_point(1);
  const std::vector<Event> none;
  CHECK(partition_sum_check(m, Event(), none));
  const std::vector<Event> singles{Event(0b01), Event(0b10)};
  CHECK(partition_sum_check(m, m.space().full(), singles));
  const std::vector<Event> overlap{Event(0b01), Event(0b11)};
  CHECK_THROWS_AS(partition_sum_check(m, m.space().full(), overlap), InvalidPartition);
  const std::vector<Event> short_cover{Event(0b01)};
  CHECK_THROWS_AS(partition_sum_check(m, m.space().full(), short_cover), InvalidPartition);
}

TEST_CASE("uniform models give uniform singletons") {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("o" + std::to_string(i));
    const NapModel m(SampleSpace(labels), std::vector<Rational>(n, Rational(3)), std::vector<long>(n, 2));
    for (std::size_t i = 0; i < n; ++i)
      CHECK(prob(m, Event::singleton(i)) == FieldValue(make_rational(1, static_cast<long>(n))));
  }
}
