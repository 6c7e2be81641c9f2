#include "diorace/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace diorace {

namespace {

void check_children(std::size_t arity, const std::vector<Poly>& coeffs) {
  if (arity == 0) throw ArityError("a coefficient list needs arity >= 1");
  for (const auto& c : coeffs) {
    if (c.arity() != arity - 1) {
      throw ArityError("coefficient of arity " + std::to_string(c.arity()) + " inside a list of arity " +
                       std::to_string(arity));
    }
  }
}

void require_same_arity(const Poly& p, const Poly& q, const char* op) {
  if (p.arity() != q.arity()) {
    throw ArityError(std::string(op) + ": arity " + std::to_string(p.arity()) + " vs " + std::to_string(q.arity()));
  }
}

void trim(std::vector<Poly>& coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

}  // namespace

Poly Poly::constant(BigInt value) {
  Poly p;
  p.value_ = std::move(value);
  return p;
}

Poly Poly::zero(std::size_t arity) {
  Poly p;
  p.arity_ = arity;
  return p;
}

Poly Poly::raw(std::size_t arity, std::vector<Poly> coeffs) {
  check_children(arity, coeffs);
  Poly p;
  p.arity_ = arity;
  p.coeffs_ = std::move(coeffs);
  return p;
}

Poly Poly::from_coefficients(std::size_t arity, std::vector<Poly> coeffs) {
  return normalize(raw(arity, std::move(coeffs)));
}

Poly Poly::constant_at(std::size_t arity, BigInt value) { return lift(constant(std::move(value)), arity); }

bool Poly::is_zero() const noexcept {
  if (arity_ == 0) return value_.is_zero();
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Poly& c) { return c.is_zero(); });
}

bool Poly::is_normalized() const noexcept {
  if (arity_ == 0) return true;
  if (!coeffs_.empty() && coeffs_.back().is_zero()) return false;
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Poly& c) { return c.is_normalized(); });
}

const BigInt& Poly::value() const {
  if (arity_ != 0) throw ArityError("value() on a polynomial of arity " + std::to_string(arity_));
  return value_;
}

const std::vector<Poly>& Poly::coefficients() const {
  if (arity_ == 0) throw ArityError("coefficients() on a constant");
  return coeffs_;
}

long Poly::degree() const {
  if (arity_ == 0) return value_.is_zero() ? -1 : 0;
  return static_cast<long>(coeffs_.size()) - 1;
}

std::vector<std::size_t> Poly::degree_bounds() const {
  std::vector<std::size_t> bounds(arity_, 0);
  if (arity_ == 0) return bounds;
  if (!coeffs_.empty()) bounds[arity_ - 1] = coeffs_.size() - 1;
  for (const auto& c : coeffs_) {
    const auto inner = c.degree_bounds();
    for (std::size_t i = 0; i < inner.size(); ++i) bounds[i] = std::max(bounds[i], inner[i]);
  }
  return bounds;
}

BigInt Poly::constant_term() const {
  if (arity_ == 0) return value_;
  if (coeffs_.empty()) return 0;
  return coeffs_.front().constant_term();
}

bool Poly::is_constant() const {
  if (arity_ == 0) return true;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero()) return false;
  }
  return coeffs_.empty() || coeffs_.front().is_constant();
}

Poly normalize(const Poly& p) {
  if (p.arity() == 0) return p;
  std::vector<Poly> coeffs;
  coeffs.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) coeffs.push_back(normalize(c));
  trim(coeffs);
  return Poly::raw(p.arity(), std::move(coeffs));
}

Poly add(const Poly& p, const Poly& q) {
  require_same_arity(p, q, "add");
  if (p.arity() == 0) return Poly::constant(p.value() + q.value());
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<Poly> out;
  out.reserve(std::max(a.size(), b.size()));
  for (std::size_t j = 0; j < std::max(a.size(), b.size()); ++j) {
    if (j >= a.size()) out.push_back(b[j]);
    else if (j >= b.size()) out.push_back(a[j]);
    else out.push_back(add(a[j], b[j]));
  }
  trim(out);
  return Poly::raw(p.arity(), std::move(out));
}

Poly negate(const Poly& p) { return scalar_mul(p, BigInt(-1)); }

Poly subtract(const Poly& p, const Poly& q) {
  require_same_arity(p, q, "subtract");
  return add(p, negate(q));
}

Poly scalar_mul(const Poly& p, const BigInt& c) {
  if (c.is_zero()) return Poly::zero(p.arity());
  if (p.arity() == 0) return Poly::constant(p.value() * c);
  std::vector<Poly> out;
  out.reserve(p.coefficients().size());
  for (const auto& coeff : p.coefficients()) out.push_back(scalar_mul(coeff, c));
  trim(out);
  return Poly::raw(p.arity(), std::move(out));
}

Poly multiply(const Poly& p, const Poly& q) {
  require_same_arity(p, q, "multiply");
  if (p.arity() == 0) return Poly::constant(p.value() * q.value());
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  if (a.empty() || b.empty()) return Poly::zero(p.arity());
  std::vector<Poly> out(a.size() + b.size() - 1, Poly::zero(p.arity() - 1));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] = add(out[i + j], multiply(a[i], b[j]));
    }
  }
  trim(out);
  return Poly::raw(p.arity(), std::move(out));
}

Poly power(const Poly& p, std::size_t exponent) {
  Poly result = Poly::constant_at(p.arity(), 1);
  Poly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = multiply(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = multiply(base, base);
  }
  return result;
}

Poly lift(const Poly& p, std::size_t arity) {
  if (arity < p.arity()) throw ArityError("lift cannot lower arity");
  Poly out = normalize(p);
  for (std::size_t a = p.arity() + 1; a <= arity; ++a) {
    out = out.is_zero() ? Poly::zero(a) : Poly::raw(a, {std::move(out)});
  }
  return out;
}

namespace {

// Visits nonzero monomials ordered by (e_m, ..., e_1) ascending.
template <typename Visit>
void walk(const Poly& p, std::vector<std::size_t>& exps, Visit& visit) {
  if (p.arity() == 0) {
    if (!p.value().is_zero()) visit(exps, p.value());
    return;
  }
  const auto& coeffs = p.coefficients();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    exps[p.arity() - 1] = j;
    walk(coeffs[j], exps, visit);
  }
  exps[p.arity() - 1] = 0;
}

Poly monomial(std::size_t arity, const std::vector<std::size_t>& exps, const BigInt& c) {
  Poly out = Poly::constant(c);
  for (std::size_t a = 1; a <= arity; ++a) {
    std::vector<Poly> coeffs(exps[a - 1] + 1, Poly::zero(a - 1));
    coeffs.back() = std::move(out);
    out = Poly::raw(a, std::move(coeffs));
  }
  return out;
}

}  // namespace

MonomialMap monomials(const Poly& p) {
  MonomialMap out;
  std::vector<std::size_t> exps(p.arity(), 0);
  auto visit = [&](const std::vector<std::size_t>& e, const BigInt& c) { out[e] += c; };
  walk(p, exps, visit);
  return out;
}

Poly from_monomials(std::size_t arity, const MonomialMap& terms) {
  Poly out = Poly::zero(arity);
  for (const auto& [exps, c] : terms) {
    if (exps.size() != arity) throw ArityError("monomial exponent vector has wrong length");
    if (!c.is_zero()) out = add(out, monomial(arity, exps, c));
  }
  return out;
}

std::string print(const Poly& p) {
  std::ostringstream os;
  bool first = true;
  bool top_var_seen = false;
  std::vector<std::size_t> exps(p.arity(), 0);
  auto visit = [&](const std::vector<std::size_t>& e, const BigInt& c) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += 'x' + std::to_string(i + 1);
      if (e[i] > 1) factors += '^' + std::to_string(e[i]);
    }
    if (!e.empty() && e.back() > 0) top_var_seen = true;
    if (factors.empty()) os << to_string(magnitude);
    else if (magnitude == 1) os << factors;
    else os << to_string(magnitude) << '*' << factors;
  };
  walk(p, exps, visit);
  if (p.arity() > 0 && !top_var_seen) {
    os << (first ? "" : " + ") << "0*x" << p.arity();
  } else if (first) {
    os << '0';
  }
  return os.str();
}

std::string nested_list(const Poly& p) {
  if (p.arity() == 0) return to_string(p.value());
  std::string out = "<";
  const auto& coeffs = p.coefficients();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (j > 0) out += ';';
    out += nested_list(coeffs[j]);
  }
  return out + '>';
}

}  // namespace diorace
