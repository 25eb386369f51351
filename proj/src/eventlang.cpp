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

#include "infprob/eventlang.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <vector>

#include "infprob/errors.hpp"

namespace infprob {

struct EventExpr::Node {
  Kind kind;
  std::string label;
  std::optional<EventExpr> lhs;
  std::optional<EventExpr> rhs;
};

namespace {

// Binding strength used by the renderer.
int level(EventExpr::Kind k) {
  switch (k) {
    case EventExpr::Kind::Iff: return 1;
    case EventExpr::Kind::Implies: return 2;
    case EventExpr::Kind::Or: return 3;
    case EventExpr::Kind::And: return 4;
    case EventExpr::Kind::Not: return 5;
    default: return 6;
  }
}

const char* symbol(EventExpr::Kind k) {
  switch (k) {
    case EventExpr::Kind::Iff: return " <-> ";
    case EventExpr::Kind::Implies: return " -> ";
    case EventExpr::Kind::Or: return " | ";
    case EventExpr::Kind::And: return " & ";
    default: return "";
  }
}

}  // namespace

EventExpr EventExpr::atom(std::string label) {
  return EventExpr(std::make_shared<const Node>(Node{Kind::Atom, std::move(label), {}, {}}));
}
EventExpr EventExpr::top() { return EventExpr(std::make_shared<const Node>(Node{Kind::Top, {}, {}, {}})); }
EventExpr EventExpr::bottom() { return EventExpr(std::make_shared<const Node>(Node{Kind::Bottom, {}, {}, {}})); }
EventExpr EventExpr::negate(EventExpr operand) {
  return EventExpr(std::make_shared<const Node>(Node{Kind::Not, {}, std::move(operand), {}}));
}
EventExpr EventExpr::both(EventExpr lhs, EventExpr rhs) {
  return EventExpr(std::make_shared<const Node>(Node{Kind::And, {}, std::move(lhs), std::move(rhs)}));
}
EventExpr EventExpr::either(EventExpr lhs, EventExpr rhs) {
  return EventExpr(std::make_shared<const Node>(Node{Kind::Or, {}, std::move(lhs), std::move(rhs)}));
}
EventExpr EventExpr::implies(EventExpr lhs, EventExpr rhs) {
  return EventExpr(std::make_shared<const Node>(Node{Kind::Implies, {}, std::move(lhs), std::move(rhs)}));
}
EventExpr EventExpr::iff(EventExpr lhs, EventExpr rhs) {
  return EventExpr(std::make_shared<const Node>(Node{Kind::Iff, {}, std::move(lhs), std::move(rhs)}));
}

EventExpr::Kind EventExpr::kind() const { return node_->kind; }
const std::string& EventExpr::label() const { return node_->label; }
const EventExpr& EventExpr::lhs() const { return node_->lhs.value(); }
const EventExpr& EventExpr::rhs() const { return node_->rhs.value(); }

bool operator==(const EventExpr& a, const EventExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case EventExpr::Kind::Atom: return a.label() == b.label();
    case EventExpr::Kind::Top:
    case EventExpr::Kind::Bottom: return true;
    case EventExpr::Kind::Not: return a.lhs() == b.lhs();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

std::string EventExpr::str() const {
  std::function<std::string(const EventExpr&, int)> render = [&](const EventExpr& e, int min_level) {
    std::string out;
    const Kind k = e.kind();
    switch (k) {
      case Kind::Atom: out = e.label(); break;
      case Kind::Top: out = "T"; break;
      case Kind::Bottom: out = "F"; break;
      case Kind::Not: out = "!" + render(e.lhs(), level(Kind::Not)); break;
      default: {
        const int l = level(k);
        // IMPLIES groups to the right, the others to the left.
        const bool right_assoc = k == Kind::Implies;
        out = render(e.lhs(), right_assoc ? l + 1 : l) + symbol(k) + render(e.rhs(), right_assoc ? l : l + 1);
      }
    }
    return level(k) < min_level ? "(" + out + ")" : out;
  };
  return render(*this, 0);
}

std::set<std::string> EventExpr::atoms() const {
  std::set<std::string> out;
  std::function<void(const EventExpr&)> walk = [&](const EventExpr& e) {
    switch (e.kind()) {
      case Kind::Atom: out.insert(e.label()); break;
      case Kind::Top:
      case Kind::Bottom: break;
      case Kind::Not: walk(e.lhs()); break;
      default:
        walk(e.lhs());
        walk(e.rhs());
    }
  };
  walk(*this);
  return out;
}

namespace {

enum class Tok { Ident, Top, Bottom, Not, And, Or, Implies, Iff, LParen, RParen, End, Bad };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Tok::End, start, "end of input"};
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      if (word == "T") return {Tok::Top, start, word};
      if (word == "F") return {Tok::Bottom, start, word};
      return {Tok::Ident, start, word};
    }
    auto starts = [&](std::string_view s) { return text_.substr(pos_, s.size()) == s; };
    if (starts("<->")) return advance(Tok::Iff, 3);
    if (starts("->")) return advance(Tok::Implies, 2);
    switch (c) {
      case '!': return advance(Tok::Not, 1);
      case '&': return advance(Tok::And, 1);
      case '|': return advance(Tok::Or, 1);
      case '(': return advance(Tok::LParen, 1);
      case ')': return advance(Tok::RParen, 1);
      default: return advance(Tok::Bad, 1);
    }
  }

 private:
  Token advance(Tok kind, std::size_t len) {
    Token t{kind, pos_, std::string(text_.substr(pos_, len))};
    pos_ += len;
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { look_ = lexer_.next(); }

  EventExpr parse() {
    EventExpr e = iff();
    if (look_.kind != Tok::End) fail({"end of input", "&", "|", "->", "<->"});
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const std::string found = look_.kind == Tok::End ? "end of input" : "'" + look_.text + "'";
    throw SyntaxError(look_.pos, std::move(expected), found);
  }

  void shift() { look_ = lexer_.next(); }

  EventExpr iff() {
    EventExpr e = implies();
    while (look_.kind == Tok::Iff) {
      shift();
      e = EventExpr::iff(std::move(e), implies());
    }
    return e;
  }

  EventExpr implies() {
    EventExpr e = disjunction();
    if (look_.kind == Tok::Implies) {
      shift();
      return EventExpr::implies(std::move(e), implies());
    }
    return e;
  }

  EventExpr disjunction() {
    EventExpr e = conjunction();
    while (look_.kind == Tok::Or) {
      shift();
      e = EventExpr::either(std::move(e), conjunction());
    }
    return e;
  }

  EventExpr conjunction() {
    EventExpr e = unary();
    while (look_.kind == Tok::And) {
      shift();
      e = EventExpr::both(std::move(e), unary());
    }
    return e;
  }

  EventExpr unary() {
    if (look_.kind == Tok::Not) {
      shift();
      return EventExpr::negate(unary());
    }
    return primary();
  }

  EventExpr primary() {
    switch (look_.kind) {
      case Tok::Ident: {
        EventExpr e = EventExpr::atom(look_.text);
        shift();
        return e;
      }
      case Tok::Top: shift(); return EventExpr::top();
      case Tok::Bottom: shift(); return EventExpr::bottom();
      case Tok::LParen: {
        shift();
        EventExpr e = iff();
        if (look_.kind != Tok::RParen) fail({")", "&", "|", "->", "<->"});
        shift();
        return e;
      }
      default: fail({"identifier", "T", "F", "!", "("});
    }
  }

  Lexer lexer_;
  Token look_;
};

}  // namespace

EventExpr parse_event(std::string_view text) { return Parser(text).parse(); }

Event evaluate(const EventExpr& expr, const EventBinding& binding, const SampleSpace& space) {
  const std::size_t n = space.size();
  using Kind = EventExpr::Kind;
  switch (expr.kind()) {
    case Kind::Atom: {
      auto it = binding.find(expr.label());
      if (it == binding.end()) throw UnboundAtom(expr.label());
      return it->second & space.full();
    }
    case Kind::Top: return space.full();
    case Kind::Bottom: return Event();
    case Kind::Not: return evaluate(expr.lhs(), binding, space).complement(n);
    default: break;
  }
  const Event a = evaluate(expr.lhs(), binding, space);
  const Event b = evaluate(expr.rhs(), binding, space);
  switch (expr.kind()) {
    case Kind::And: return a & b;
    case Kind::Or: return a | b;
    case Kind::Implies: return a.complement(n) | b;
    default: return (a & b) | (a.complement(n) & b.complement(n));
  }
}

Event normal_form(const EventExpr& expr, const SampleSpace& atoms) {
  EventBinding binding;
  for (std::size_t i = 0; i < atoms.size(); ++i) binding.emplace(atoms.label(i), Event::singleton(i));
  return evaluate(expr, binding, atoms);
}

}  // namespace infprob
