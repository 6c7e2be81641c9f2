#ifndef DIORACE_PARSER_HPP
#define DIORACE_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "diorace/poly.hpp"

namespace diorace {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := integer | var | factor '^' nat | '(' expr ')'
///   var    := 'x' nat>=1
/// Whitespace is insignificant. The arity is the highest variable index
/// mentioned, even when that variable cancels out.
Poly parse(std::string_view text);

}  // namespace diorace

#endif
