#ifndef DIORACE_CERTIFICATES_HPP
#define DIORACE_CERTIFICATES_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "diorace/enumeration.hpp"
#include "diorace/execution.hpp"
#include "diorace/poly.hpp"

namespace diorace {

enum class Schema { NonzeroConstant, GcdObstruction, ModularObstruction };

/// A finite, mechanically checkable reason for a polynomial to have no
/// integer zero.
class Certificate {
 public:
  static Certificate nonzero_constant() { return Certificate{Schema::NonzeroConstant, 0}; }
  /// g >= 2
  static Certificate gcd(std::uint64_t g);
  /// m >= 2
  static Certificate modular(std::uint64_t m);

  Schema schema() const noexcept { return schema_; }
  /// g or m; 0 for NonzeroConstant.
  std::uint64_t parameter() const noexcept { return parameter_; }

  std::string describe() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;

 private:
  Certificate(Schema s, std::uint64_t param) : schema_(s), parameter_(param) {}
  Schema schema_;
  std::uint64_t parameter_;
};

struct VerifyBudget {
  /// Cap on m^arity residue tuples a modular check may exhaust.
  std::uint64_t max_residue_tuples = 1'000'000;
};

enum class VerifyResult { True, False, BudgetExceeded };

/// k = 0 -> NonzeroConstant, 2j+1 -> GcdObstruction(j+2), 2j+2 -> ModularObstruction(j+2).
Certificate cert_decode(Index k);
/// Inverse of cert_decode; throws std::overflow_error past 2^64.
Index cert_index(const Certificate& c);

/// TRUE only when p has no integer zero. Modular obstructions exhaust all
/// of [0, m)^arity, or report BudgetExceeded when that exceeds the cap.
VerifyResult verify(const Certificate& c, const Poly& p, const VerifyBudget& budget,
                    Execution exec = Execution::Serial);

/// m^arity when it is <= cap, nullopt otherwise.
std::optional<std::uint64_t> residue_tuple_count(std::uint64_t modulus, std::size_t arity,
                                                 std::uint64_t cap) noexcept;

/// Precondition check alone: would verify(c, p, budget) report BudgetExceeded?
bool exceeds_budget(const Certificate& c, const Poly& p, const VerifyBudget& budget) noexcept;

}  // namespace diorace

#endif
