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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "infprob/field_value.hpp"

namespace infprob {

/// Largest supported sample space (events are 64-bit masks).
inline constexpr std::size_t kMaxOutcomes = 64;

/// Set of outcome (or atom) indices, stored as a bitmask.
class Event {
 public:
  constexpr Event() = default;
  constexpr explicit Event(std::uint64_t bits) : bits_(bits) {}

  static constexpr Event singleton(std::size_t i) { return Event(std::uint64_t{1} << i); }
  static constexpr Event full(std::size_t n) {
    return Event(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(Event other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(Event other) const noexcept { return (bits_ & other.bits_) == 0; }
  /// Complement relative to the first n outcomes.
  constexpr Event complement(std::size_t n) const noexcept { return Event(~bits_ & full(n).bits_); }

  std::vector<std::size_t> members() const;

  friend constexpr Event operator&(Event a, Event b) { return Event(a.bits_ & b.bits_); }
  friend constexpr Event operator|(Event a, Event b) { return Event(a.bits_ | b.bits_); }
  friend constexpr Event operator-(Event a, Event b) { return Event(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Event, Event) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Finite ordered set of distinct outcome labels.
class SampleSpace {
 public:
  /// Throws InvalidModel when empty, oversized or when labels repeat.
  explicit SampleSpace(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  Event full() const { return Event::full(labels_.size()); }

  /// Event made of the named outcomes; throws UnboundAtom on unknown labels.
  Event event_of(std::span<const std::string> labels) const;
  /// "{a, b}".
  std::string render(Event e) const;

  friend bool operator==(const SampleSpace& a, const SampleSpace& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Finite NAP model: each outcome x carries mass weight(x) * e^rank(x), and
/// probabilities are ratios of total masses. Ranks are shifted on
/// construction so the smallest is 0; the shift cancels in every ratio.
class NapModel {
 public:
  /// Throws InvalidModel on non-positive weights, negative ranks or size mismatch.
  NapModel(SampleSpace space, std::vector<Rational> weights, std::vector<long> ranks);

  const SampleSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return space_.size(); }
  const Rational& weight(std::size_t i) const { return weights_.at(i); }
  long rank(std::size_t i) const { return ranks_.at(i); }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const std::vector<long>& ranks() const noexcept { return ranks_; }
  long max_rank() const noexcept { return max_rank_; }

  /// Sum of weight(x) * e^rank(x) over x in a.
  EpsPoly mass(Event a) const;
  /// Throws InvalidModel if the event names outcomes outside the space.
  void require_event(Event a) const;

 private:
  SampleSpace space_;
  std::vector<Rational> weights_;
  std::vector<long> ranks_;
  long max_rank_ = 0;
};

/// P(A) = mass(A) / mass(Omega).
FieldValue prob(const NapModel& model, Event a);

/// P(A | B) = P(A and B) / P(B). Throws EmptyCondition when B is empty.
FieldValue cond(const NapModel& model, Event a, Event b);

/// Replication schedule of the counting construction: at stage n an outcome
/// of rank k stands for n^(3^(max_rank - k)) copies. For n >= 2 and j < k the
/// rank-j count exceeds the square of the rank-k count, and equal ranks get
/// equal counts.
class SnapshotProfile {
 public:
  /// max_rank must lie in [0, 20].
  explicit SnapshotProfile(long max_rank);
  static SnapshotProfile for_model(const NapModel& model) { return SnapshotProfile(model.max_rank()); }

  long max_rank() const noexcept { return max_rank_; }
  /// Throws std::invalid_argument when rank is outside [0, max_rank] or stage < 2.
  Integer count_of(long rank, unsigned long stage) const;

 private:
  long max_rank_;
};

/// Classical conditional probability of A given B when every outcome x is
/// replicated count_of(rank(x), stage) times with weight w(x).
Rational snapshot_cond(const NapModel& model, Event a, Event b, const SnapshotProfile& profile,
                       unsigned long stage);

/// True iff P(A) equals the exact sum of P over the parts. Throws
/// InvalidPartition unless the parts are pairwise disjoint with union A.
bool partition_sum_check(const NapModel& model, Event a, std::span<const Event> parts);

}  // namespace infprob
