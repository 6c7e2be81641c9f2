#include "diorace/enumeration.hpp"

#include <stdexcept>

#include "diorace/pairing.hpp"

namespace diorace {

BigInt zigzag(Index n) {
  if (n % 2 == 1) return BigInt(n / 2 + 1);
  return -BigInt(n / 2);
}

BigInt zigzag(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("zigzag of a negative index");
  if (boost::multiprecision::bit_test(n, 0)) return (n + 1) / 2;
  return -(n / 2);
}

BigInt zigzag_inv(const BigInt& z) {
  if (z > 0) return 2 * z - 1;
  return -2 * z;
}

TupleZ ct_m(Index n, std::size_t m) {
  if (m == 0) throw std::invalid_argument("ct_m needs m >= 1");
  TupleZ out;
  out.reserve(m);
  for (std::size_t i = 1; i < m; ++i) {
    const auto [head, rest] = cantor_unpair(n);
    out.push_back(zigzag(head));
    n = rest;
  }
  out.push_back(zigzag(n));
  return out;
}

TupleZ ct_m(const BigInt& n, std::size_t m) {
  if (m == 0) throw std::invalid_argument("ct_m needs m >= 1");
  if (n < 0) throw std::invalid_argument("ct_m of a negative index");
  TupleZ out;
  out.reserve(m);
  BigInt cur = n;
  for (std::size_t i = 1; i < m; ++i) {
    auto [head, rest] = cantor_unpair(cur);
    out.push_back(zigzag(head));
    cur = std::move(rest);
  }
  out.push_back(zigzag(cur));
  return out;
}

BigInt ct_m_inv(const TupleZ& xs, std::size_t m) {
  if (m == 0) throw std::invalid_argument("ct_m_inv needs m >= 1");
  if (xs.size() != m) throw std::invalid_argument("tuple length does not match m");
  BigInt acc = zigzag_inv(xs.back());
  for (std::size_t i = m - 1; i-- > 0;) acc = cantor_pair(zigzag_inv(xs[i]), acc);
  return acc;
}

TupleZ ct_star(Index n) {
  const auto [len_minus_one, payload] = cantor_unpair(n);
  return ct_m(payload, static_cast<std::size_t>(len_minus_one) + 1);
}

TupleZ ct_star(const BigInt& n) {
  auto [len_minus_one, payload] = cantor_unpair(n);
  if (len_minus_one >= BigInt(std::uint64_t{1} << 32)) throw std::out_of_range("ct_star tuple length out of range");
  return ct_m(payload, static_cast<std::size_t>(len_minus_one) + 1);
}

BigInt ct_star_inv(const TupleZ& xs) {
  if (xs.empty()) throw std::invalid_argument("ct_star covers tuples of length >= 1");
  return cantor_pair(BigInt(xs.size() - 1), ct_m_inv(xs, xs.size()));
}

}  // namespace diorace
