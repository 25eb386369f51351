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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "infprob/eventlang.hpp"
#include "infprob/events.hpp"
#include "infprob/popper.hpp"

namespace infprob {

/// A NAP model or Popper table loaded from (or destined for) a JSON file.
///
/// nap:    {"kind": "nap",
///          "outcomes": [{"label": "a", "weight": "1/2", "rank": 0}, ...],
///          "events": {"name": "expression", ...}}
/// popper: {"kind": "popper", "atoms": ["b1", "b2"],
///          "stratified": {"0": {"b1": "1"}, "1": {"b2": "1"}}
///            or "dense": [{"atom": "b1", "given": "b1 | b2", "value": "1"}, ...],
///          "events": {...}}
///
/// Rationals are "p/q" strings or JSON integers. Dense entries that are
/// left out are 0. Named events may use atoms and earlier named events.
class ModelFile {
 public:
  enum class Kind { Nap, Popper };

  /// Throws InvalidModel on schema errors, SyntaxError or UnboundAtom in
  /// event expressions.
  static ModelFile parse(std::string_view json_text);
  static ModelFile load(const std::filesystem::path& path);

  static ModelFile from_nap(NapModel model, std::vector<std::pair<std::string, std::string>> events = {});
  static ModelFile from_popper(PopperTable table, std::vector<std::pair<std::string, std::string>> events = {});

  Kind kind() const noexcept { return kind_; }
  bool is_nap() const noexcept { return kind_ == Kind::Nap; }
  /// Throw std::logic_error when the file holds the other kind.
  const NapModel& nap() const;
  const PopperTable& popper() const;
  const SampleSpace& space() const;

  const std::vector<std::pair<std::string, std::string>>& named_events() const noexcept { return events_; }

  /// Evaluates an event expression over the file's outcomes or atoms and
  /// its named events. Throws SyntaxError or UnboundAtom.
  Event resolve(std::string_view expression) const;

  /// Serializes; Popper tables are written as a stratified block unless
  /// `dense` is set or the table has no stratification.
  std::string to_json(bool dense = false) const;
  void save(const std::filesystem::path& path, bool dense = false) const;

 private:
  ModelFile(Kind kind, std::variant<NapModel, PopperTable> body,
            std::vector<std::pair<std::string, std::string>> events);

  Kind kind_;
  std::variant<NapModel, PopperTable> body_;
  std::vector<std::pair<std::string, std::string>> events_;
  EventBinding binding_;
};

}  // namespace infprob
