#ifndef DIORACE_GOEDEL_HPP
#define DIORACE_GOEDEL_HPP

#include <stdexcept>

#include "diorace/bigint.hpp"
#include "diorace/poly.hpp"

namespace diorace {

/// Natural-number code of a normalized Poly.
struct DioCode {
  BigInt value;
  friend bool operator==(const DioCode&, const DioCode&) = default;
};

class InvalidCodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Layout: code(p) = pair(arity, B), where B in binary is a 1 followed by the
// prefix-free bit string S(p):
//   S(constant c)     = gamma(zigzag_inv(c) + 1)
//   S(<b0..bn-1>)     = gamma(n + 1) S(b0) ... S(bn-1)
// gamma is Elias gamma.  Code length is linear in the size of p.  Naturals
// whose B does not parse exactly, or whose lists end in a zero entry, are
// outside the image.

DioCode encode_goedel(const Poly& p);

/// Throws InvalidCodeError when `code` is not the code of a normalized Poly.
Poly decode_goedel(const DioCode& code);

}  // namespace diorace

#endif
