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

// Text form of field values. Grammar accepted by FieldValue::parse:
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := primary ['^' ['-'] digits]
//   primary := digits ['e' ['^' digits]] | 'e' | '(' expr ')'
//
// "2e^3" is a single factor, so "1/2e" means 1/(2e). str() never writes a
// non-integer coefficient next to e; it uses "1/2*e" instead.

#include <cctype>
#include <string>

#include "infprob/errors.hpp"
#include "infprob/field_value.hpp"

namespace infprob {

namespace {

std::string render_term(const Rational& magnitude, std::size_t power) {
  if (power == 0) return to_string(magnitude);
  std::string mono = power == 1 ? "e" : "e^" + std::to_string(power);
  if (magnitude == 1) return mono;
  if (magnitude.get_den() == 1) return to_string(magnitude) + mono;
  return to_string(magnitude) + "*" + mono;
}

std::size_t term_count(const EpsPoly& p) {
  std::size_t n = 0;
  for (const auto& c : p.coefficients()) n += c != 0;
  return n;
}

class TextParser {
 public:
  explicit TextParser(std::string_view text) : text_(text) {}

  FieldValue parse() {
    FieldValue v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  long small_integer() {
    Integer n = digits();
    if (!n.fits_slong_p()) fail("exponent too large");
    return n.get_si();
  }

  FieldValue expr() {
    FieldValue acc;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  FieldValue term() {
    FieldValue acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        FieldValue d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  FieldValue factor() {
    FieldValue base = primary();
    if (accept('^')) {
      skip_space();
      const bool negative = pos_ < text_.size() && text_[pos_] == '-';
      if (negative) ++pos_;
      skip_space();
      const long k = small_integer();
      if (negative && base.is_zero()) fail("zero raised to a negative power");
      FieldValue out = 1;
      for (long i = 0; i < k; ++i) out *= base;
      base = negative ? inverse(out) : out;
    }
    return base;
  }

  FieldValue epsilon_power() {
    ++pos_;  // 'e'
    std::size_t save = pos_;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      bool negative = pos_ < text_.size() && text_[pos_] == '-';
      if (negative) {
        ++pos_;
        skip_space();
      }
      const long k = small_integer();
      return FieldValue::epsilon_power(negative ? -k : k);
    }
    pos_ = save;
    return FieldValue::epsilon();
  }

  FieldValue primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FieldValue v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'e') return epsilon_power();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      FieldValue coeff = Rational(digits());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == 'e') return coeff * epsilon_power();
      return coeff;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render_poly(const EpsPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& coeffs = p.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    out += render_term(abs(c), i);
  }
  return out;
}

std::string FieldValue::str() const {
  if (den_.size() == 1 && den_.coefficients()[0] == 1) return render_poly(num_);
  std::string n = render_poly(num_);
  if (term_count(num_) > 1) n = "(" + n + ")";
  std::string d = render_poly(den_);
  if (term_count(den_) > 1) d = "(" + d + ")";
  return n + "/" + d;
}

FieldValue FieldValue::parse(std::string_view text) { return TextParser(text).parse(); }

}  // namespace infprob
