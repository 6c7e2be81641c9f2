#include "diorace/evaluator.hpp"

#include <limits>
#include <stdexcept>

namespace diorace {

namespace {

void require_point(const Poly& p, std::size_t n, const char* op) {
  if (n != p.arity()) {
    throw ArityError(std::string(op) + ": polynomial of arity " + std::to_string(p.arity()) + " at a point of length " +
                     std::to_string(n));
  }
}

}  // namespace

Poly horner_step(const Poly& p, const BigInt& x) {
  if (p.arity() == 0) throw ArityError("horner_step needs arity >= 1");
  const auto& coeffs = p.coefficients();
  Poly acc = Poly::zero(p.arity() - 1);
  for (std::size_t j = coeffs.size(); j-- > 0;) acc = add(scalar_mul(acc, x), coeffs[j]);
  return acc;
}

BigInt ev(const Poly& p, std::span<const BigInt> xs) {
  require_point(p, xs.size(), "ev");
  Poly cur = p;
  for (std::size_t i = xs.size(); i-- > 0;) {
    if (cur.is_zero()) return 0;
    cur = horner_step(cur, xs[i]);
  }
  return cur.value();
}

BigInt ev_naive(const Poly& p, std::span<const BigInt> xs) {
  require_point(p, xs.size(), "ev_naive");
  BigInt sum = 0;
  for (const auto& [exps, c] : monomials(p)) {
    BigInt term = c;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      term *= boost::multiprecision::pow(xs[i], static_cast<unsigned>(exps[i]));
    }
    sum += term;
  }
  return sum;
}

namespace {

BigInt ev_mod_rec(const Poly& p, std::span<const BigInt> residues, const BigInt& m) {
  if (p.arity() == 0) return mod_floor(p.value(), m);
  const auto& coeffs = p.coefficients();
  const BigInt& x = residues[p.arity() - 1];
  const auto inner = residues.first(p.arity() - 1);
  BigInt acc = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) acc = (acc * x + ev_mod_rec(coeffs[j], inner, m)) % m;
  return acc;
}

}  // namespace

BigInt ev_mod(const Poly& p, std::span<const BigInt> residues, const BigInt& modulus) {
  if (modulus < 2) throw std::invalid_argument("ev_mod needs modulus >= 2");
  require_point(p, residues.size(), "ev_mod");
  for (const auto& r : residues) {
    if (r < 0 || r >= modulus) throw std::invalid_argument("residue outside [0, m)");
  }
  return ev_mod_rec(p, residues, modulus);
}

std::vector<std::size_t> dense_extents(const Poly& p) {
  auto bounds = p.degree_bounds();
  for (auto& b : bounds) ++b;
  return bounds;
}

std::size_t dense_cell_count(const std::vector<std::size_t>& extents) {
  std::size_t cells = 1;
  for (auto e : extents) {
    if (e != 0 && cells > std::numeric_limits<std::size_t>::max() / e) return std::numeric_limits<std::size_t>::max();
    cells *= e;
  }
  return cells;
}

CompiledPoly::CompiledPoly(const Poly& p) : source_(p), extents_(dense_extents(p)) {
  const std::size_t cells = dense_cell_count(extents_);
  if (cells > kMaxDenseCells) return;
  dense_ = true;
  cells_.assign(cells, BigInt(0));
  for_each_dense_cell(p, extents_, [&](std::size_t at, const BigInt& c) { cells_[at] = c; });
}

BigInt CompiledPoly::eval(std::span<const BigInt> xs) const {
  if (!dense_) return ev(source_, xs);
  require_point(source_, xs.size(), "eval");
  thread_local std::vector<BigInt> work;
  work.assign(cells_.begin(), cells_.end());
  std::size_t size = cells_.size();
  for (std::size_t a = extents_.size(); a-- > 0;) {
    const std::size_t extent = extents_[a];
    const std::size_t inner = size / extent;
    const BigInt& x = xs[a];
    for (std::size_t j = 0; j < inner; ++j) {
      BigInt acc = work[(extent - 1) * inner + j];
      for (std::size_t i = extent - 1; i-- > 0;) {
        acc *= x;
        acc += work[i * inner + j];
      }
      work[j] = std::move(acc);
    }
    size = inner;
  }
  return work[0];
}

}  // namespace diorace
