#ifndef DIORACE_ENUMERATION_HPP
#define DIORACE_ENUMERATION_HPP

#include <cstddef>
#include <cstdint>

#include "diorace/bigint.hpp"

namespace diorace {

/// Running index of the race.
using Index = std::uint64_t;

/// N -> Z: 0, 1, -1, 2, -2, ...
BigInt zigzag(Index n);
BigInt zigzag(const BigInt& n);
/// Z -> N; returns a natural.
BigInt zigzag_inv(const BigInt& z);

/// N -> Z^m: split n by (m-1)-fold Cantor unpairing (first coordinate
/// peeled off, remainder recursed), then zigzag each coordinate.
/// Throws std::invalid_argument for m == 0.
TupleZ ct_m(Index n, std::size_t m);
TupleZ ct_m(const BigInt& n, std::size_t m);
/// Inverse of ct_m; throws std::invalid_argument if xs.size() != m or m == 0.
BigInt ct_m_inv(const TupleZ& xs, std::size_t m);

/// N -> Z* (length >= 1): (length - 1, payload) = unpair(n), then ct_m.
TupleZ ct_star(Index n);
TupleZ ct_star(const BigInt& n);
/// Throws std::invalid_argument on the empty tuple.
BigInt ct_star_inv(const TupleZ& xs);

}  // namespace diorace

#endif
