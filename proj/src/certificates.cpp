#include "diorace/certificates.hpp"

#include <limits>
#include <stdexcept>

#include "diorace/evaluator.hpp"
#include "diorace/kernels.hpp"

namespace diorace {

Certificate Certificate::gcd(std::uint64_t g) {
  if (g < 2) throw std::invalid_argument("gcd obstruction needs g >= 2");
  return Certificate{Schema::GcdObstruction, g};
}

Certificate Certificate::modular(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("modular obstruction needs m >= 2");
  return Certificate{Schema::ModularObstruction, m};
}

std::string Certificate::describe() const {
  switch (schema_) {
    case Schema::NonzeroConstant:
      return "nonzero constant";
    case Schema::GcdObstruction:
      return "gcd obstruction g=" + std::to_string(parameter_);
    case Schema::ModularObstruction:
      return "modular obstruction m=" + std::to_string(parameter_);
  }
  return "?";
}

Certificate cert_decode(Index k) {
  if (k == 0) return Certificate::nonzero_constant();
  if (k % 2 == 1) return Certificate::gcd((k - 1) / 2 + 2);
  return Certificate::modular((k - 2) / 2 + 2);
}

Index cert_index(const Certificate& c) {
  constexpr Index kMax = std::numeric_limits<Index>::max();
  switch (c.schema()) {
    case Schema::NonzeroConstant:
      return 0;
    case Schema::GcdObstruction:
      if (c.parameter() - 2 > (kMax - 1) / 2) throw std::overflow_error("certificate index out of range");
      return 2 * (c.parameter() - 2) + 1;
    case Schema::ModularObstruction:
      if (c.parameter() - 2 > (kMax - 2) / 2) throw std::overflow_error("certificate index out of range");
      return 2 * (c.parameter() - 2) + 2;
  }
  return 0;
}

std::optional<std::uint64_t> residue_tuple_count(std::uint64_t modulus, std::size_t arity,
                                                 std::uint64_t cap) noexcept {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (count > cap / modulus) return std::nullopt;
    count *= modulus;
  }
  if (count > cap) return std::nullopt;
  return count;
}

bool exceeds_budget(const Certificate& c, const Poly& p, const VerifyBudget& budget) noexcept {
  return c.schema() == Schema::ModularObstruction &&
         !residue_tuple_count(c.parameter(), p.arity(), budget.max_residue_tuples);
}

namespace {

bool gcd_obstructs(const Poly& p, std::uint64_t g) {
  const BigInt modulus(g);
  bool constant_seen = false;
  for (const auto& [exps, c] : monomials(p)) {
    bool is_constant = true;
    for (auto e : exps) is_constant = is_constant && e == 0;
    if (is_constant) {
      constant_seen = true;
      if ((c % modulus).is_zero()) return false;
    } else if (!(c % modulus).is_zero()) {
      return false;
    }
  }
  // A missing constant term is 0, which g divides.
  return constant_seen;
}

// For boxes too large for the dense kernels: walk every residue tuple.
bool residue_zero_by_ev_mod(const Poly& p, std::uint64_t m) {
  const BigInt modulus(m);
  TupleZ r(p.arity(), BigInt(0));
  for (;;) {
    if (ev_mod(p, r, modulus).is_zero()) return true;
    std::size_t i = 0;
    for (; i < r.size(); ++i) {
      r[i] += 1;
      if (r[i] < modulus) break;
      r[i] = 0;
    }
    if (i == r.size()) return false;
  }
}

}  // namespace

VerifyResult verify(const Certificate& c, const Poly& p, const VerifyBudget& budget, Execution exec) {
  switch (c.schema()) {
    case Schema::NonzeroConstant:
      return (p.is_constant() && !p.constant_term().is_zero()) ? VerifyResult::True : VerifyResult::False;
    case Schema::GcdObstruction:
      return gcd_obstructs(p, c.parameter()) ? VerifyResult::True : VerifyResult::False;
    case Schema::ModularObstruction: {
      if (!residue_tuple_count(c.parameter(), p.arity(), budget.max_residue_tuples)) {
        return VerifyResult::BudgetExceeded;
      }
      bool zero = false;
      if (dense_cell_count(dense_extents(p)) > CompiledPoly::kMaxDenseCells) {
        zero = residue_zero_by_ev_mod(p, c.parameter());
      } else {
        const ModularImage image(p, c.parameter());
        zero = exec == Execution::Parallel ? has_residue_zero_omp(image) : has_residue_zero_serial(image);
      }
      return zero ? VerifyResult::False : VerifyResult::True;
    }
  }
  return VerifyResult::False;
}

}  // namespace diorace
