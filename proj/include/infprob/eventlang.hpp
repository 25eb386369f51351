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

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>

#include "infprob/events.hpp"

namespace infprob {

/// Immutable propositional expression over named atoms.
///
/// Grammar, loosest first: IFF "<->" (left-assoc), IMPLIES "->"
/// (right-assoc), OR "|", AND "&", NOT "!". Atoms match
/// [A-Za-z_][A-Za-z0-9_]*, except "T" (top) and "F" (bottom).
class EventExpr {
 public:
  enum class Kind { Atom, Top, Bottom, Not, And, Or, Implies, Iff };

  static EventExpr atom(std::string label);
  static EventExpr top();
  static EventExpr bottom();
  static EventExpr negate(EventExpr operand);
  static EventExpr both(EventExpr lhs, EventExpr rhs);
  static EventExpr either(EventExpr lhs, EventExpr rhs);
  static EventExpr implies(EventExpr lhs, EventExpr rhs);
  static EventExpr iff(EventExpr lhs, EventExpr rhs);

  Kind kind() const;
  /// Atom label; empty for other kinds.
  const std::string& label() const;
  /// Operand of Not, or left operand of a binary node.
  const EventExpr& lhs() const;
  const EventExpr& rhs() const;

  /// Canonical text with minimal parentheses; parse(str()) == *this.
  std::string str() const;
  std::set<std::string> atoms() const;

  friend bool operator==(const EventExpr& a, const EventExpr& b);

 private:
  struct Node;
  explicit EventExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Throws SyntaxError with the failing offset and the accepted tokens.
EventExpr parse_event(std::string_view text);

using EventBinding = std::unordered_map<std::string, Event>;

/// Set semantics over the space: NOT is complement, AND intersection, OR
/// union, TOP the full space. Throws UnboundAtom.
Event evaluate(const EventExpr& expr, const EventBinding& binding, const SampleSpace& space);

/// Atoms of the expression's normal form, where each declared atom is one
/// of the mutually exclusive, jointly exhaustive normal atoms. Bit i of the
/// result stands for atoms.label(i). Throws UnboundAtom.
Event normal_form(const EventExpr& expr, const SampleSpace& atoms);

}  // namespace infprob
