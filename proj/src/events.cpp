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

#include "infprob/events.hpp"

#include <algorithm>
#include <stdexcept>

#include "infprob/errors.hpp"

namespace infprob {

std::vector<std::size_t> Event::members() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

SampleSpace::SampleSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidModel("sample space must not be empty");
  if (labels_.size() > kMaxOutcomes)
    throw InvalidModel("sample space has more than " + std::to_string(kMaxOutcomes) + " outcomes");
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (!index_.emplace(labels_[i], i).second) throw InvalidModel("duplicate outcome label '" + labels_[i] + "'");
}

std::optional<std::size_t> SampleSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Event SampleSpace::event_of(std::span<const std::string> labels) const {
  Event e;
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (!i) throw UnboundAtom(l);
    e = e | Event::singleton(*i);
  }
  return e;
}

std::string SampleSpace::render(Event e) const {
  std::string out = "{";
  bool first = true;
  for (auto i : e.members()) {
    if (!first) out += ", ";
    out += labels_.at(i);
    first = false;
  }
  return out + "}";
}

NapModel::NapModel(SampleSpace space, std::vector<Rational> weights, std::vector<long> ranks)
    : space_(std::move(space)), weights_(std::move(weights)), ranks_(std::move(ranks)) {
  if (weights_.size() != space_.size() || ranks_.size() != space_.size())
    throw InvalidModel("every outcome needs exactly one weight and one rank");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] <= 0) throw InvalidModel("weight of '" + space_.label(i) + "' must be positive");
    if (ranks_[i] < 0) throw InvalidModel("rank of '" + space_.label(i) + "' must be nonnegative");
  }
  const long lowest = *std::min_element(ranks_.begin(), ranks_.end());
  for (auto& r : ranks_) r -= lowest;
  max_rank_ = *std::max_element(ranks_.begin(), ranks_.end());
}

void NapModel::require_event(Event a) const {
  if (!a.subset_of(space_.full())) throw InvalidModel("event names outcomes outside the sample space");
}

EpsPoly NapModel::mass(Event a) const {
  require_event(a);
  std::vector<Rational> coeffs;
  for (auto i : a.members()) {
    const auto r = static_cast<std::size_t>(ranks_[i]);
    if (coeffs.size() <= r) coeffs.resize(r + 1);
    coeffs[r] += weights_[i];
  }
  return EpsPoly(std::move(coeffs));
}

FieldValue prob(const NapModel& model, Event a) {
  return FieldValue::ratio(model.mass(a), model.mass(model.space().full()));
}

FieldValue cond(const NapModel& model, Event a, Event b) {
  if (b.empty()) throw EmptyCondition();
  // mass(Omega) cancels between P(A and B) and P(B).
  return FieldValue::ratio(model.mass(a & b), model.mass(b));
}

SnapshotProfile::SnapshotProfile(long max_rank) : max_rank_(max_rank) {
  if (max_rank < 0 || max_rank > 20) throw std::invalid_argument("snapshot max_rank must lie in [0, 20]");
}

Integer SnapshotProfile::count_of(long rank, unsigned long stage) const {
  if (rank < 0 || rank > max_rank_) throw std::invalid_argument("rank outside the snapshot profile");
  if (stage < 2) throw std::invalid_argument("snapshot stage must be at least 2");
  Integer exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), 3, static_cast<unsigned long>(max_rank_ - rank));
  Integer count;
  mpz_ui_pow_ui(count.get_mpz_t(), stage, exponent.get_ui());
  return count;
}

Rational snapshot_cond(const NapModel& model, Event a, Event b, const SnapshotProfile& profile,
                       unsigned long stage) {
  if (b.empty()) throw EmptyCondition();
  model.require_event(a);
  model.require_event(b);
  std::vector<Integer> counts;
  counts.reserve(static_cast<std::size_t>(profile.max_rank()) + 1);
  for (long k = 0; k <= profile.max_rank(); ++k) counts.push_back(profile.count_of(k, stage));
  Rational top = 0;
  Rational bottom = 0;
  for (auto i : b.members()) {
    const Rational m = model.weight(i) * counts.at(static_cast<std::size_t>(model.rank(i)));
    bottom += m;
    if (a.contains(i)) top += m;
  }
  return top / bottom;
}

bool partition_sum_check(const NapModel& model, Event a, std::span<const Event> parts) {
  model.require_event(a);
  Event covered;
  for (const auto& p : parts) {
    if (!p.disjoint(covered)) throw InvalidPartition("partition parts overlap");
    covered = covered | p;
  }
  if (covered != a) throw InvalidPartition("partition parts do not cover the event exactly");
  FieldValue sum;
  for (const auto& p : parts) sum += prob(model, p);
  return sum == prob(model, a);
}

}  // namespace infprob
