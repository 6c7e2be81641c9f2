#ifndef DIORACE_PAIRING_HPP
#define DIORACE_PAIRING_HPP

#include <cstdint>
#include <utility>

#include "diorace/bigint.hpp"

namespace diorace {

/// Cantor diagonal pairing (a+b)(a+b+1)/2 + b and its inverse.
BigInt cantor_pair(const BigInt& a, const BigInt& b);
std::pair<BigInt, BigInt> cantor_unpair(const BigInt& z);

/// Word-sized unpairing; every 64-bit z has 64-bit components.
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) noexcept;

}  // namespace diorace

#endif
