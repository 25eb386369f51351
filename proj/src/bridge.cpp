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

#include "infprob/bridge.hpp"

#include <bit>
#include <stdexcept>

#include "infprob/errors.hpp"

namespace infprob {

NapModel popper_to_nap(const PopperTable& table, const CheckOptions& options) {
  const VanFraassenRanks ranks = van_fraassen_ranks(table, options);
  const std::size_t m = table.atom_count();
  std::vector<Rational> weights(m);
  for (std::size_t i = 0; i < m; ++i)
    weights[i] = table.value(i, ranks.chain[static_cast<std::size_t>(ranks.atom_rank[i])]);
  return NapModel(table.atoms(), std::move(weights), ranks.atom_rank);
}

PopperTable nap_to_popper(const NapModel& model) {
  if (model.size() > kMaxPopperAtoms)
    throw CapacityExceeded("models above " + std::to_string(kMaxPopperAtoms) + " outcomes cannot be tabulated");
  return PopperTable::tabulate(model.space().labels(), [&](std::size_t i, Event s) -> Rational {
    return standard_part(cond(model, Event::singleton(i), s));
  });
}

BridgeReport verify_agreement(const PopperTable& table, const CheckOptions& options, std::size_t max_witnesses) {
  const NapModel model = popper_to_nap(table, options);
  const std::uint64_t n = table.condition_count();
  BridgeReport report;
  std::vector<Rational> st_by_subset(n);
  std::vector<Rational> row(n);
  for (std::uint64_t b = 1; b < n; ++b) {
    const Event be(b);
    // P(a | b) depends on a only through a & b.
    for (std::uint64_t c = b;; c = (c - 1) & b) {
      st_by_subset[c] = standard_part(cond(model, Event(c), be));
      if (c == 0) break;
    }
    row[0] = 0;
    for (std::uint64_t a = 0; a < n; ++a) {
      if (a != 0) row[a] = row[a & (a - 1)] + table.value(static_cast<std::size_t>(std::countr_zero(a)), be);
      ++report.pairs_checked;
      const Rational gap = abs(row[a] - st_by_subset[a & b]);
      if (gap != 0) {
        if (gap > report.max_discrepancy) report.max_discrepancy = gap;
        if (report.witnesses.size() < max_witnesses) report.witnesses.emplace_back(Event(a), be);
      }
    }
  }
  return report;
}

namespace {

void require_stages(std::span<const unsigned long> stages) {
  for (auto n : stages)
    if (n < 2) throw std::invalid_argument("snapshot stages must be at least 2");
}

template <class Target>
SnapshotStudy run_snapshots(const NapModel& model, const std::vector<std::pair<Event, Event>>& pairs,
                            std::span<const unsigned long> stages, Target&& target_of) {
  const SnapshotProfile profile = SnapshotProfile::for_model(model);
  SnapshotStudy study;
  for (const auto& [a, b] : pairs) {
    const Rational target = target_of(a, b);
    for (auto n : stages) {
      SnapshotRow row{a, b, n, snapshot_cond(model, a, b, profile, n), target, 0};
      row.deviation = abs(row.value - target);
      const Rational scaled = row.deviation * n;
      if (scaled > study.bound_constant) study.bound_constant = scaled;
      study.rows.push_back(std::move(row));
    }
  }
  return study;
}

SnapshotStudy run_snapshots(const PopperTable& table, const std::vector<std::pair<Event, Event>>& pairs,
                            std::span<const unsigned long> stages, const CheckOptions& options) {
  require_stages(stages);
  return run_snapshots(popper_to_nap(table, options), pairs, stages,
                       [&](Event a, Event b) { return table.conditional(a, b); });
}

}  // namespace

SnapshotStudy snapshot_oracle(const PopperTable& table, std::span<const unsigned long> stages,
                              const CheckOptions& options) {
  std::vector<std::pair<Event, Event>> pairs;
  for (std::uint64_t b = 1; b < table.condition_count(); ++b)
    for (std::uint64_t c = b;; c = (c - 1) & b) {
      pairs.emplace_back(Event(c), Event(b));
      if (c == 0) break;
    }
  return run_snapshots(table, pairs, stages, options);
}

SnapshotStudy snapshot_oracle(const PopperTable& table, Event a, Event b, std::span<const unsigned long> stages,
                              const CheckOptions& options) {
  if (b.empty()) throw EmptyCondition();
  return run_snapshots(table, {{a, b}}, stages, options);
}

SnapshotStudy snapshot_oracle(const NapModel& model, Event a, Event b, std::span<const unsigned long> stages) {
  require_stages(stages);
  model.require_event(a);
  model.require_event(b);
  if (b.empty()) throw EmptyCondition();
  return run_snapshots(model, {{a, b}}, stages,
                       [&](Event x, Event y) { return standard_part(cond(model, x, y)); });
}

}  // namespace infprob
