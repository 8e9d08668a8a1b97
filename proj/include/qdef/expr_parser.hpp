#pragma once

#include <cctype>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qdef {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : std::runtime_error("column " + std::to_string(column + 1) + ": " + message), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Read position inside a single expression.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string_view read_digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return text_.substr(start, pos_ - start);
  }

  std::int64_t read_int() {
    bool negative = accept('-');
    if (!negative) accept('+');
    auto digits = read_digits();
    if (digits.size() > 15) fail("integer too large");
    std::int64_t v = std::stoll(std::string(digits));
    return negative ? -v : v;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

/// Recursive-descent parser for sums of products over a ring-like value type.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | '(' expr ')' | atom
template <class Value>
struct ExprGrammar {
  std::function<Value(Cursor&)> atom;
  std::function<Value(const Value&, const Value&)> add;
  std::function<Value(const Value&, const Value&)> mul;
  std::function<Value(const Value&)> neg;

  Value parse(std::string_view text) const {
    Cursor cur(text);
    if (cur.at_end()) cur.fail("empty expression");
    Value v = expr(cur);
    if (!cur.at_end()) cur.fail(std::string("unexpected '") + cur.peek() + "'");
    return v;
  }

 private:
  Value expr(Cursor& cur) const {
    Value acc = cur.accept('-') ? neg(term(cur)) : (cur.accept('+'), term(cur));
    while (true) {
      if (cur.accept('+')) {
        acc = add(acc, term(cur));
      } else if (cur.accept('-')) {
        acc = add(acc, neg(term(cur)));
      } else {
        return acc;
      }
    }
  }

  Value term(Cursor& cur) const {
    Value acc = factor(cur);
    while (cur.accept('*')) acc = mul(acc, factor(cur));
    return acc;
  }

  Value factor(Cursor& cur) const {
    if (cur.accept('-')) return neg(factor(cur));
    if (cur.accept('(')) {
      Value v = expr(cur);
      cur.expect(')');
      return v;
    }
    if (cur.at_end()) cur.fail("unexpected end of expression");
    return atom(cur);
  }
};

}  // namespace qdef
