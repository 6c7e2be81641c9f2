#include "diorace/parser.hpp"

#include <cctype>
#include <limits>
#include <optional>

namespace diorace {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

// Cap on any single exponent and on the resulting degree in one variable.
constexpr std::size_t kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, std::size_t arity) : text_(text), arity_(arity) {}

  Poly parse_all() {
    skip();
    Poly result = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

  // Highest variable index, found by a lexical pre-scan so every subterm can
  // be built at the final arity.
  static std::size_t scan_arity(std::string_view text) {
    std::size_t arity = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != 'x') continue;
      std::size_t j = i + 1;
      while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      std::size_t index = 0;
      bool any = false;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        any = true;
        if (index > 1'000'000) throw ParseError(i, "variable index too large");
        index = index * 10 + static_cast<std::size_t>(text[j] - '0');
        ++j;
      }
      if (!any) throw ParseError(j, "expected variable index after 'x'");
      if (index == 0) throw ParseError(i, "variable index 0 (variables start at x1)");
      arity = std::max(arity, index);
      i = j - 1;
    }
    return arity;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::optional<char> peek() {
    skip();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  Poly expr() {
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    Poly acc = term();
    if (negative) acc = negate(acc);
    for (;;) {
      if (accept('+')) acc = add(acc, term());
      else if (accept('-')) acc = subtract(acc, term());
      else return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = multiply(acc, factor());
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    while (accept('^')) {
      const std::size_t e = natural("exponent");
      if (e > kMaxExponent) fail("exponent above " + std::to_string(kMaxExponent));
      const auto bounds = base.degree_bounds();
      for (auto b : bounds) {
        if (b * e > kMaxExponent) fail("degree above " + std::to_string(kMaxExponent));
      }
      base = power(base, e);
    }
    return base;
  }

  Poly primary() {
    const auto next = peek();
    if (!next) fail("unexpected end of input");
    if (*next == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (*next == 'x') {
      ++pos_;
      const std::size_t index = natural("variable index");
      std::vector<std::size_t> exps(arity_, 0);
      exps[index - 1] = 1;
      return from_monomials(arity_, MonomialMap{{exps, BigInt(1)}});
    }
    if (std::isdigit(static_cast<unsigned char>(*next))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly::constant_at(arity_, parse_bigint(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, *next) + "'");
  }

  std::size_t natural(const char* what) {
    skip();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > std::numeric_limits<std::size_t>::max() / 100) fail(std::string(what) + " too large");
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return value;
  }

  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse(std::string_view text) {
  bool blank = true;
  for (char ch : text) blank = blank && std::isspace(static_cast<unsigned char>(ch));
  if (blank) throw ParseError(0, "empty input");
  Parser parser(text, Parser::scan_arity(text));
  return parser.parse_all();
}

}  // namespace diorace
