#ifndef DIORACE_BIGINT_HPP
#define DIORACE_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace diorace {

/// Exact signed integer of unbounded size. Expression templates are off so
/// `auto` always yields a value.
using BigInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// A point of Z^m.
using TupleZ = std::vector<BigInt>;

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& value);

/// Least non-negative residue of `value` modulo `modulus` (modulus > 0).
BigInt mod_floor(const BigInt& value, const BigInt& modulus);

/// Least non-negative residue as a machine word; modulus >= 1.
std::uint64_t mod_u64(const BigInt& value, std::uint64_t modulus);

}  // namespace diorace

#endif
