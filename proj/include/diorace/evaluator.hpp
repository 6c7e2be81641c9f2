#ifndef DIORACE_EVALUATOR_HPP
#define DIORACE_EVALUATOR_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "diorace/bigint.hpp"
#include "diorace/poly.hpp"

namespace diorace {

/// Substitutes x for the trailing indeterminate x_m. Folds the coefficient
/// list from the highest index down: acc <- acc * x + c_j.
Poly horner_step(const Poly& p, const BigInt& x);

/// ev(p, (x1..xm)): horner_step on the trailing argument until arity 0.
/// Throws ArityError unless xs.size() == p.arity().
BigInt ev(const Poly& p, std::span<const BigInt> xs);

/// Monomial summation, sum of c * prod xi^ei. Shares no code with `ev`.
BigInt ev_naive(const Poly& p, std::span<const BigInt> xs);

/// ev(p, r) mod m with residues in [0, m); result in [0, m).
BigInt ev_mod(const Poly& p, std::span<const BigInt> residues, const BigInt& modulus);

/// Poly flattened to a dense box of coefficients, x1 fastest. Evaluation
/// repeats the trailing-variable Horner reduction on the flat buffer, which
/// avoids rebuilding nested Polys per point. Used by the race.
class CompiledPoly {
 public:
  explicit CompiledPoly(const Poly& p);

  std::size_t arity() const noexcept { return extents_.size(); }
  const std::vector<std::size_t>& extents() const noexcept { return extents_; }
  bool dense() const noexcept { return dense_; }

  BigInt eval(std::span<const BigInt> xs) const;

  /// Dense boxes above this many cells fall back to `ev` on the Poly.
  static constexpr std::size_t kMaxDenseCells = std::size_t{1} << 22;

 private:
  Poly source_;
  std::vector<std::size_t> extents_;
  std::vector<BigInt> cells_;
  bool dense_ = false;
};

/// Dense box layout shared with the modular kernels: extents[i] is
/// degree_bounds[i] + 1, coefficient of x^e sits at sum e_i * stride_i.
std::vector<std::size_t> dense_extents(const Poly& p);
std::size_t dense_cell_count(const std::vector<std::size_t>& extents);

/// Writes every coefficient of p into `cells` (sized to the box) via `put`.
template <typename Put>
void for_each_dense_cell(const Poly& p, const std::vector<std::size_t>& extents, Put&& put);

}  // namespace diorace

#include "diorace/detail/dense_impl.hpp"

#endif
