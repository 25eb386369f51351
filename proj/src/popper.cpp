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

#include "infprob/popper.hpp"

#include <stdexcept>

#include "infprob/errors.hpp"

namespace infprob {

namespace {

SampleSpace checked_space(std::vector<std::string> atoms) {
  if (atoms.size() > kMaxPopperAtoms)
    throw CapacityExceeded("Popper tables support at most " + std::to_string(kMaxPopperAtoms) + " atoms");
  return SampleSpace(std::move(atoms));
}

class Recorder {
 public:
  Recorder(std::string name, std::size_t cap) : cap_(cap) { result_.name = std::move(name); }

  void count() { ++result_.checked; }
  void fail(std::vector<Event> events, std::string detail) {
    result_.passed = false;
    if (result_.witnesses.size() < cap_) result_.witnesses.push_back({std::move(events), std::move(detail)});
  }
  AxiomResult take() { return std::move(result_); }

 private:
  AxiomResult result_;
  std::size_t cap_;
};

std::string show(const Rational& r) { return to_string(r); }

}  // namespace

PopperTable::PopperTable(std::vector<std::string> atoms)
    : space_(checked_space(std::move(atoms))), values_(condition_count() * atom_count(), Rational(1)) {}

Rational PopperTable::conditional(Event a, Event s) const {
  if (s.empty()) return 1;
  Rational sum = 0;
  for (auto i : a.members()) sum += value(i, s);
  return sum;
}

bool AxiomReport::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

const AxiomResult& AxiomReport::result(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name) return r;
  throw std::out_of_range("no axiom result named " + name);
}

AxiomReport check_axioms(const PopperTable& table, const CheckOptions& options) {
  const std::size_t m = table.atom_count();
  if (m > options.max_atoms)
    throw CapacityExceeded("exhaustive axiom check is capped at " + std::to_string(options.max_atoms) +
                           " atoms; table has " + std::to_string(m));
  const std::uint64_t n = table.condition_count();
  const Event top = table.top();
  const std::size_t cap = options.max_witnesses;

  Recorder ax1("axiom1", cap), ax2("axiom2", cap), ax3("axiom3", cap), ax4("axiom4", cap);
  Recorder range("range", cap), regular("regularity", cap);

  // is_one[d * n + a] records C(a, d) == 1 for the axiom 4 premise.
  std::vector<bool> is_one(n * n);
  std::vector<Rational> row(n);

  for (std::uint64_t d = 0; d < n; ++d) {
    const Event cond_event(d);
    // C(., d) for every first argument, by adding one atom at a time.
    row[0] = d == 0 ? Rational(1) : Rational(0);
    for (std::uint64_t a = 1; a < n; ++a) {
      if (d == 0) {
        row[a] = 1;
      } else {
        const auto low = static_cast<std::size_t>(std::countr_zero(a));
        row[a] = row[a & (a - 1)] + table.value(low, cond_event);
      }
    }
    for (std::uint64_t a = 0; a < n; ++a) {
      is_one[d * n + a] = row[a] == 1;
      range.count();
      if (row[a] < 0 || row[a] > 1)
        range.fail({Event(a), cond_event}, "C(a, d) = " + show(row[a]) + " outside [0, 1]");
    }

    ax1.count();
    if (row[d] != 1) ax1.fail({cond_event, cond_event}, "C(a, a) = " + show(row[d]));

    if (d != 0) {
      const Event not_d = cond_event.complement(m);
      // C(not x, x) = 1 forces C(., x) to be constant 1.
      regular.count();
      if (row[not_d.bits()] == 1) regular.fail({cond_event}, "C(not x, x) = 1 for a nonempty x");

      if (row[not_d.bits()] != 1) {
        ax2.count();
        for (std::size_t i = 0; i < m; ++i)
          if (table.value(i, cond_event) < 0)
            ax2.fail({Event::singleton(i), cond_event}, "negative C(b, a) = " + show(table.value(i, cond_event)));
        if (row[top.bits()] != 1)
          ax2.fail({top, cond_event}, "C(top, a) = " + show(row[top.bits()]) + " instead of 1");
      }
    }

    // Axiom 3: C(a & b, d) = C(a, d) * C(b, a & d).
    for (std::uint64_t a = 0; a < n; ++a) {
      const Event ae(a);
      const Event ad = ae & cond_event;
      if (d != 0 && ad.empty()) {
        // Right side is C(a, d) for every b, the left side is additive in b.
        ax3.count();
        if (row[a] != 0) {
          ax3.fail({ae, Event(), cond_event}, "C(a & b, d) = 0 but C(a, d) * C(b, a & d) = " + show(row[a]));
          continue;
        }
        for (std::size_t j = 0; j < m; ++j) {
          ax3.count();
          if (ae.contains(j) && table.value(j, cond_event) != 0)
            ax3.fail({ae, Event::singleton(j), cond_event},
                     "C(a & b, d) = " + show(table.value(j, cond_event)) + " but C(a, d) * C(b, a & d) = 0");
        }
        continue;
      }
      for (std::size_t j = 0; j < m; ++j) {
        ax3.count();
        const Rational lhs = d == 0 ? Rational(1) : (ae.contains(j) ? table.value(j, cond_event) : Rational(0));
        const Rational rhs = row[a] * table.value(j, ad);
        if (lhs != rhs)
          ax3.fail({ae, Event::singleton(j), cond_event},
                   "C(a & b, d) = " + show(lhs) + " but C(a, d) * C(b, a & d) = " + show(rhs));
      }
    }
  }

  // Axiom 4: C(a, b) = C(b, a) = 1 implies C(., a) = C(., b).
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = a + 1; b < n; ++b) {
      if (!is_one[b * n + a] || !is_one[a * n + b]) continue;
      const Event ae(a), be(b);
      ax4.count();
      if (a == 0 || b == 0) {
        // C(., empty) is constant 1 while C(empty, x) = 0 for nonempty x.
        ax4.fail({ae, be, Event()}, "C(empty, a) != C(empty, b)");
        continue;
      }
      for (std::size_t j = 0; j < m; ++j) {
        ax4.count();
        if (table.value(j, ae) != table.value(j, be))
          ax4.fail({ae, be, Event::singleton(j)},
                   "C(d, a) = " + show(table.value(j, ae)) + " but C(d, b) = " + show(table.value(j, be)));
      }
    }
  }

  AxiomReport report;
  report.results.push_back(ax1.take());
  report.results.push_back(ax2.take());
  report.results.push_back(ax3.take());
  report.results.push_back(ax4.take());
  report.results.push_back(range.take());
  report.results.push_back(regular.take());
  return report;
}

void StratifiedMeasure::validate() const {
  if (atom_count == 0) throw InvalidModel("stratified measure has no atoms");
  std::vector<bool> seen(atom_count, false);
  for (std::size_t k = 0; k < strata.size(); ++k) {
    const auto& stratum = strata[k];
    if (stratum.empty()) throw InvalidModel("stratum " + std::to_string(k) + " is empty");
    Rational total = 0;
    for (const auto& [atom, w] : stratum) {
      if (atom >= atom_count) throw InvalidModel("stratum " + std::to_string(k) + " names an unknown atom");
      if (seen[atom]) throw InvalidModel("atom " + std::to_string(atom) + " appears in two strata");
      seen[atom] = true;
      if (w <= 0) throw InvalidModel("stratum " + std::to_string(k) + " has a non-positive weight");
      total += w;
    }
    if (total != 1)
      throw InvalidModel("stratum " + std::to_string(k) + " weights sum to " + to_string(total) + ", not 1");
  }
  for (std::size_t i = 0; i < atom_count; ++i)
    if (!seen[i]) throw InvalidModel("atom " + std::to_string(i) + " belongs to no stratum");
}

std::vector<long> StratifiedMeasure::atom_ranks() const {
  std::vector<long> ranks(atom_count, -1);
  for (std::size_t k = 0; k < strata.size(); ++k)
    for (const auto& entry : strata[k]) ranks.at(entry.first) = static_cast<long>(k);
  return ranks;
}

PopperTable from_stratified(const StratifiedMeasure& measure, std::vector<std::string> atoms) {
  measure.validate();
  if (atoms.size() != measure.atom_count) throw InvalidModel("atom list does not match the stratified measure");
  const std::vector<long> rank = measure.atom_ranks();
  std::vector<Rational> weight(measure.atom_count);
  for (const auto& stratum : measure.strata)
    for (const auto& [atom, w] : stratum) weight[atom] = w;

  std::uint64_t cached_set = 0;
  long cached_rank = 0;
  Rational cached_mass;
  return PopperTable::tabulate(std::move(atoms), [&](std::size_t i, Event s) -> Rational {
    if (s.bits() != cached_set) {
      cached_set = s.bits();
      cached_rank = -1;
      for (auto j : s.members())
        if (cached_rank < 0 || rank[j] < cached_rank) cached_rank = rank[j];
      cached_mass = 0;
      for (auto j : s.members())
        if (rank[j] == cached_rank) cached_mass += weight[j];
    }
    if (!s.contains(i) || rank[i] != cached_rank) return 0;
    return weight[i] / cached_mass;
  });
}

namespace {

void require_popper(const PopperTable& table, const CheckOptions& options) {
  const AxiomReport report = check_axioms(table, options);
  if (!report.result("regularity").passed)
    throw NotAPopperFunction(
        "table fails regularity: a non-contradictory condition has C(., x) identically 1; such conditions are "
        "read as the empty event and must be removed from the atom list first");
  for (const auto& r : report.results) {
    if (r.passed) continue;
    std::string msg = "table fails " + r.name;
    if (!r.witnesses.empty()) msg += ": " + r.witnesses.front().detail;
    throw NotAPopperFunction(msg);
  }
}

}  // namespace

VanFraassenRanks van_fraassen_ranks(const PopperTable& table, const CheckOptions& options) {
  require_popper(table, options);
  const std::size_t m = table.atom_count();
  VanFraassenRanks out;
  out.atom_rank.assign(m, -1);
  Event current = table.top();
  for (long k = 0;; ++k) {
    out.chain.push_back(current);
    Event next;
    for (auto i : current.members()) {
      if (table.value(i, current) == 0) next = next | Event::singleton(i);
      else if (out.atom_rank[i] < 0) out.atom_rank[i] = k;
    }
    // Axiom 2 makes C(., current) sum to 1, so next is a strict subset.
    if (next.empty() || next == current) break;
    current = next;
  }
  out.table_rank = static_cast<long>(out.chain.size()) - 1;
  return out;
}

StratifiedMeasure to_stratified(const PopperTable& table, const CheckOptions& options) {
  const VanFraassenRanks ranks = van_fraassen_ranks(table, options);
  StratifiedMeasure out;
  out.atom_count = table.atom_count();
  out.strata.resize(ranks.chain.size());
  for (std::size_t i = 0; i < out.atom_count; ++i) {
    const auto k = static_cast<std::size_t>(ranks.atom_rank[i]);
    out.strata[k].emplace(i, table.value(i, ranks.chain[k]));
  }
  return out;
}

}  // namespace infprob
