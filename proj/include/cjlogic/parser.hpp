#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cjlogic/formula.hpp"

namespace cjlogic {

// Concrete syntax
//
//   formula := disj [ ("->i" | "->c") formula ]     right associative
//   disj    := conj { "|" conj }                    left associative
//   conj    := unary { "&" unary }                  left associative
//   unary   := "~c" unary | "~i" unary | "(" formula ")" | "F" | "T" | atom
//   atom    := [a-z][a-zA-Z0-9_]*
//
// F is bottom, T is bottom ->i bottom, ~c A is A ->c F and ~i A is A ->i F.
// A chain that mixes ->i and ->c at one level without parentheses is
// rejected instead of being given an associativity.

class ParseError : public std::runtime_error {
 public:
  enum class Code { Syntax, MixedImplications, ReservedName };

  ParseError(Code code, std::size_t position, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        code_(code),
        position_(position) {}

  Code code() const noexcept { return code_; }
  /// Byte offset into the input.
  std::size_t position() const noexcept { return position_; }

 private:
  Code code_;
  std::size_t position_;
};

struct ParseOptions {
  /// Accept reserved skeleton atoms (X0, X1, ...). Off for user input.
  bool allow_reserved = false;
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, ParseOptions opts) : text_(text), opts_(opts) {}

  Formula run() {
    Formula f = formula();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  enum class Arrow { None, I, C };

  Formula formula() {
    Formula lhs = disj();
    Arrow a = arrow();
    if (a == Arrow::None) return lhs;
    Formula rhs = formula_chain(a);
    return a == Arrow::I ? Formula::imp_i(lhs, rhs) : Formula::imp_c(lhs, rhs);
  }

  // Right operand of an implication already committed to arrow `a`: further
  // unparenthesized arrows must be of the same kind.
  Formula formula_chain(Arrow a) {
    Formula lhs = disj();
    skip_space();
    std::size_t at = pos_;
    Arrow next = arrow();
    if (next == Arrow::None) return lhs;
    if (next != a)
      throw ParseError(ParseError::Code::MixedImplications, at,
                       "->i and ->c chained without parentheses");
    Formula rhs = formula_chain(a);
    return a == Arrow::I ? Formula::imp_i(lhs, rhs) : Formula::imp_c(lhs, rhs);
  }

  Arrow arrow() {
    skip_space();
    if (text_.substr(pos_, 3) == "->i") {
      pos_ += 3;
      return Arrow::I;
    }
    if (text_.substr(pos_, 3) == "->c") {
      pos_ += 3;
      return Arrow::C;
    }
    if (text_.substr(pos_, 2) == "->") fail("implication arrow must be '->i' or '->c'");
    return Arrow::None;
  }

  Formula disj() {
    Formula f = conj();
    while (accept('|')) f = Formula::disj(f, conj());
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (accept('&')) f = Formula::conj(f, unary());
    return f;
  }

  Formula unary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '~') {
      std::string_view op = text_.substr(pos_, 2);
      if (op == "~c") {
        pos_ += 2;
        return Formula::neg_c(unary());
      }
      if (op == "~i") {
        pos_ += 2;
        return Formula::neg_i(unary());
      }
      fail("negation must be '~c' or '~i'");
    }
    if (c == '(') {
      ++pos_;
      Formula f = formula();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      if (word == "F") return Formula::bottom();
      if (word == "T") return Formula::top();
      if (is_reserved_name(word)) {
        if (opts_.allow_reserved) return Formula::atom(std::move(word));
        throw ParseError(ParseError::Code::ReservedName, start, "'" + word + "' is a reserved atom name");
      }
      if (!std::islower(static_cast<unsigned char>(word[0])))
        throw ParseError(ParseError::Code::Syntax, start, "atom '" + word + "' must start with a lowercase letter");
      return Formula::atom(std::move(word));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(ParseError::Code::Syntax, pos_, msg); }

  std::string_view text_;
  ParseOptions opts_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse(std::string_view text, ParseOptions opts = {}) { return detail::Parser(text, opts).run(); }

/// Sugared output writes T, ~c and ~i where the tree has that shape; core
/// output uses only F, &, |, ->i and ->c.
enum class RenderMode { Sugared, Core };

namespace detail {

// Binding strength: implications 1, | 2, & 3, prefix/atomic 4.
inline int strength(const Formula& f, RenderMode mode) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bottom:
      return 4;
    case Kind::And:
      return 3;
    case Kind::Or:
      return 2;
    case Kind::ImpI:
    case Kind::ImpC:
      if (mode == RenderMode::Sugared && f.right().is_bottom()) return 4;
      return 1;
  }
  return 0;
}

inline void render_into(std::string& out, const Formula& f, RenderMode mode);

inline void render_operand(std::string& out, const Formula& f, RenderMode mode, bool parens) {
  if (parens) out += '(';
  render_into(out, f, mode);
  if (parens) out += ')';
}

inline void render_into(std::string& out, const Formula& f, RenderMode mode) {
  const Kind k = f.kind();
  switch (k) {
    case Kind::Atom:
      out += f.name();
      return;
    case Kind::Bottom:
      out += 'F';
      return;
    case Kind::And:
    case Kind::Or: {
      const int s = strength(f, mode);
      render_operand(out, f.left(), mode, strength(f.left(), mode) < s);
      out += k == Kind::And ? " & " : " | ";
      render_operand(out, f.right(), mode, strength(f.right(), mode) <= s);
      return;
    }
    case Kind::ImpI:
    case Kind::ImpC: {
      if (mode == RenderMode::Sugared && f.right().is_bottom()) {
        if (k == Kind::ImpI && f.left().is_bottom()) {
          out += 'T';
          return;
        }
        out += k == Kind::ImpI ? "~i " : "~c ";
        render_operand(out, f.left(), mode, strength(f.left(), mode) < 4);
        return;
      }
      render_operand(out, f.left(), mode, strength(f.left(), mode) <= 1);
      out += k == Kind::ImpI ? " ->i " : " ->c ";
      const Formula r = f.right();
      const bool same_arrow_chain = r.kind() == k && strength(r, mode) == 1;
      render_operand(out, r, mode, strength(r, mode) <= 1 && !same_arrow_chain);
      return;
    }
  }
}

}  // namespace detail

/// Minimal-parentheses text; parse(render(f)) == f in either mode.
inline std::string render(const Formula& f, RenderMode mode = RenderMode::Sugared) {
  std::string out;
  detail::render_into(out, f, mode);
  return out;
}

}  // namespace cjlogic
