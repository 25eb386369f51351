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

#include <cstdint>
#include <span>
#include <vector>

#include "infprob/events.hpp"
#include "infprob/popper.hpp"

namespace infprob {

/// Outcome of an exhaustive comparison between a Popper table and the
/// standard parts of a NAP model's conditionals.
struct BridgeReport {
  std::uint64_t pairs_checked = 0;
  Rational max_discrepancy = 0;
  /// Failing (a, b) pairs, capped.
  std::vector<std::pair<Event, Event>> witnesses;

  bool agrees() const { return max_discrepancy == 0; }
};

/// One outcome per atom, weight(b_i) = C(b_i, a_k) and rank(b_i) = k where k
/// is the van Fraassen rank of b_i. Then st(P(a | b)) = C(a, b) for every
/// event pair with b nonempty. Throws NotAPopperFunction.
NapModel popper_to_nap(const PopperTable& table, const CheckOptions& options = {});

/// C(a, S) = st(P(a | S)) for nonempty S. The result always satisfies the
/// Popper axioms. Throws CapacityExceeded above kMaxPopperAtoms outcomes.
PopperTable nap_to_popper(const NapModel& model);

/// Exhaustively compares st(cond) on popper_to_nap(table) with C over every
/// pair (a, b), b nonempty.
BridgeReport verify_agreement(const PopperTable& table, const CheckOptions& options = {},
                              std::size_t max_witnesses = 8);

struct SnapshotRow {
  Event a;
  Event b;
  unsigned long stage = 0;
  Rational value;
  /// C(a, b), the limit the snapshots approach.
  Rational target;
  Rational deviation;
};

struct SnapshotStudy {
  std::vector<SnapshotRow> rows;
  /// K = max over rows of stage * deviation, so every deviation is <= K / stage.
  Rational bound_constant = 0;
};

/// Evaluates the counting construction on popper_to_nap(table) at each stage
/// for every pair (a, b) with b nonempty and a a subset of b (other first
/// arguments only matter through a & b). Throws std::invalid_argument for
/// stages below 2.
SnapshotStudy snapshot_oracle(const PopperTable& table, std::span<const unsigned long> stages,
                              const CheckOptions& options = {});

/// Same, restricted to one query pair.
SnapshotStudy snapshot_oracle(const PopperTable& table, Event a, Event b, std::span<const unsigned long> stages,
                              const CheckOptions& options = {});

/// Counting construction run directly on a model's weights and ranks; the
/// target is st(P(a | b)).
SnapshotStudy snapshot_oracle(const NapModel& model, Event a, Event b, std::span<const unsigned long> stages);

}  // namespace infprob
