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

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "infprob/events.hpp"
#include "infprob/rational.hpp"

namespace infprob {

/// Hard storage limit for tables: m * 2^m stored values.
inline constexpr std::size_t kMaxPopperAtoms = 16;

/// Conditional function C on the Boolean algebra generated by m mutually
/// exclusive, jointly exhaustive atoms b_0..b_{m-1}.
///
/// Only atom-level values C(b_i, S) are stored, for every nonempty condition
/// S (a bitmask over atoms). Compound first arguments are derived by
/// summation, and C(., empty) is the constant 1.
class PopperTable {
 public:
  /// Builds a table from value(i, S) for every atom i and nonempty S.
  /// Throws InvalidModel on bad atoms, CapacityExceeded above kMaxPopperAtoms.
  template <class ValueFn>
  static PopperTable tabulate(std::vector<std::string> atoms, ValueFn&& value) {
    PopperTable t(std::move(atoms));
    const std::size_t m = t.atom_count();
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s)
      for (std::size_t i = 0; i < m; ++i) t.values_[s * m + i] = value(i, Event(s));
    return t;
  }

  std::size_t atom_count() const noexcept { return space_.size(); }
  const SampleSpace& atoms() const noexcept { return space_; }
  Event top() const { return space_.full(); }
  std::size_t condition_count() const noexcept { return std::size_t{1} << atom_count(); }

  /// Stored C(b_i, S); 1 for the empty condition.
  const Rational& value(std::size_t i, Event s) const { return values_[s.bits() * atom_count() + i]; }

  /// C(a, S) = sum of C(b_i, S) over atoms b_i in a; 1 when S is empty.
  Rational conditional(Event a, Event s) const;

  friend bool operator==(const PopperTable&, const PopperTable&) = default;

 private:
  explicit PopperTable(std::vector<std::string> atoms);

  SampleSpace space_;
  std::vector<Rational> values_;
};

/// One rank-ordered family of probability measures with disjoint supports
/// covering all atoms: strata[k] maps atom index -> positive weight, and each
/// stratum's weights sum to 1.
struct StratifiedMeasure {
  std::size_t atom_count = 0;
  std::vector<std::map<std::size_t, Rational>> strata;

  /// Throws InvalidModel when the invariants above fail.
  void validate() const;
  /// Stratum index of every atom (requires a valid measure).
  std::vector<long> atom_ranks() const;

  friend bool operator==(const StratifiedMeasure&, const StratifiedMeasure&) = default;
};

struct AxiomWitness {
  std::vector<Event> events;
  std::string detail;
};

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::vector<AxiomWitness> witnesses;
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool passed() const;
  /// Throws std::out_of_range for unknown names.
  const AxiomResult& result(const std::string& name) const;
};

struct CheckOptions {
  /// Exhaustive checking costs O(4^m * m); larger tables need an explicit raise.
  std::size_t max_atoms = 10;
  std::size_t max_witnesses = 8;
};

/// Checks the four Popper axioms over every pair of events of the induced C,
/// plus the [0,1] range and regularity (only the empty event has C(., x)
/// identically 1, detected as C(not x, x) = 1). Results are named "axiom1".."axiom4", "range",
/// "regularity". Failures are report content, not exceptions. Throws
/// CapacityExceeded when the table has more than options.max_atoms atoms.
///
/// Both sides of axiom 3 (for a fixed a, d with a and d overlapping) and of
/// axiom 4 (for nonempty conditions) are additive in the remaining argument,
/// so checking that argument on the empty event and single atoms is
/// equivalent to checking it on every event.
AxiomReport check_axioms(const PopperTable& table, const CheckOptions& options = {});

/// C(a, S) = mu_d(a and S) / mu_d(S) with d the lowest stratum meeting S.
PopperTable from_stratified(const StratifiedMeasure& measure, std::vector<std::string> atoms);

struct VanFraassenRanks {
  /// a_0 = top, a_{k+1} = atoms of a_k that receive zero mass given a_k.
  std::vector<Event> chain;
  /// Least k with C(b_i, a_k) > 0.
  std::vector<long> atom_rank;
  /// Index of the last chain element.
  long table_rank = 0;
};

/// Throws NotAPopperFunction when the table fails check_axioms.
VanFraassenRanks van_fraassen_ranks(const PopperTable& table, const CheckOptions& options = {});

/// Stratum k holds the atoms of rank k weighted by C(b_i, a_k).
/// Throws NotAPopperFunction when the table fails check_axioms.
StratifiedMeasure to_stratified(const PopperTable& table, const CheckOptions& options = {});

}  // namespace infprob
