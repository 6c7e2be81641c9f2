#include "diorace/bigint.hpp"

#include <cmath>
#include <stdexcept>

#include "diorace/pairing.hpp"

namespace diorace {

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  BigInt out = 0;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch < '0' || ch > '9') throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    out = out * 10 + (ch - '0');
  }
  return negative ? BigInt(-out) : out;
}

std::string to_string(const BigInt& value) { return value.str(); }

BigInt mod_floor(const BigInt& value, const BigInt& modulus) {
  BigInt r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

std::uint64_t mod_u64(const BigInt& value, std::uint64_t modulus) {
  return static_cast<std::uint64_t>(mod_floor(value, BigInt(modulus)));
}

BigInt cantor_pair(const BigInt& a, const BigInt& b) {
  const BigInt s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<BigInt, BigInt> cantor_unpair(const BigInt& z) {
  const BigInt w = (boost::multiprecision::sqrt(BigInt(8 * z + 1)) - 1) / 2;
  const BigInt t = w * (w + 1) / 2;
  const BigInt b = z - t;
  return {w - b, b};
}

namespace {

// floor(sqrt(v)) for v < 2^67.
std::uint64_t isqrt_u128(unsigned __int128 v) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (static_cast<unsigned __int128>(r) * r > v) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) noexcept {
  const unsigned __int128 disc = static_cast<unsigned __int128>(z) * 8 + 1;
  const std::uint64_t w = (isqrt_u128(disc) - 1) / 2;
  const unsigned __int128 t = static_cast<unsigned __int128>(w) * (w + 1) / 2;
  const auto b = static_cast<std::uint64_t>(z - t);
  return {w - b, b};
}

}  // namespace diorace
