#ifndef DIORACE_POLY_HPP
#define DIORACE_POLY_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "diorace/bigint.hpp"

namespace diorace {

class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of Z[x1][x2]...[xm] as a nested dense coefficient list.
///
/// Arity 0 holds one integer. Arity m >= 1 holds a list whose j-th entry is
/// the coefficient of x_m^j, itself a Poly of arity m-1. The arity is stored,
/// so the zero of arity 1 and the zero of arity 2 are different values.
///
/// Values built through the public factories and ring operations are
/// normalized: no list carries a trailing zero entry, and the zero of arity
/// m >= 1 is the empty list. `raw` exists to build unnormalized input for
/// `normalize`.
class Poly {
 public:
  /// Zero of arity 0.
  Poly() = default;

  static Poly constant(BigInt value);
  static Poly zero(std::size_t arity);
  /// Coefficient list for x_arity; every entry must have arity `arity - 1`.
  static Poly from_coefficients(std::size_t arity, std::vector<Poly> coeffs);
  /// As `from_coefficients`, but keeps trailing zero entries.
  static Poly raw(std::size_t arity, std::vector<Poly> coeffs);
  /// Constant `value` embedded at `arity`.
  static Poly constant_at(std::size_t arity, BigInt value);

  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const noexcept;
  bool is_normalized() const noexcept;

  /// Arity 0 only.
  const BigInt& value() const;
  /// Arity >= 1 only.
  const std::vector<Poly>& coefficients() const;

  /// Degree in the trailing variable (list length - 1); -1 for zero.
  long degree() const;
  /// Largest exponent of each variable x1..xm over all monomials.
  std::vector<std::size_t> degree_bounds() const;
  /// Coefficient of the monomial x1^0 ... xm^0.
  BigInt constant_term() const;
  /// True when no variable occurs (including zero).
  bool is_constant() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::size_t arity_ = 0;
  BigInt value_{};
  std::vector<Poly> coeffs_;
};

/// Exponent vector (e1..em) to coefficient; zero coefficients are never stored.
using MonomialMap = std::map<std::vector<std::size_t>, BigInt>;

Poly normalize(const Poly& p);

Poly add(const Poly& p, const Poly& q);
Poly negate(const Poly& p);
Poly subtract(const Poly& p, const Poly& q);
Poly scalar_mul(const Poly& p, const BigInt& c);
Poly multiply(const Poly& p, const Poly& q);
Poly power(const Poly& p, std::size_t exponent);

/// Same polynomial viewed at a larger arity (new trailing variables unused).
Poly lift(const Poly& p, std::size_t arity);

MonomialMap monomials(const Poly& p);
Poly from_monomials(std::size_t arity, const MonomialMap& terms);

/// Canonical text in the parser grammar; parse(print(p)) == p.
std::string print(const Poly& p);

/// Structural dump such as <<2;3;0;-4>;<0;3;-7>;<1;-4>>.
std::string nested_list(const Poly& p);

}  // namespace diorace

#endif
