#include "diorace/goedel.hpp"

#include <cstdint>
#include <iterator>
#include <limits>
#include <vector>

#include "diorace/enumeration.hpp"
#include "diorace/pairing.hpp"

namespace diorace {

namespace {

constexpr std::size_t kMaxDecodeDepth = 4096;

using Bits = std::vector<std::uint8_t>;  // one bit per entry, most significant first

// Elias gamma of v >= 1: (bit length - 1) zeros, then v in binary.
void put_gamma(Bits& out, const BigInt& v) {
  if (v < 256) {
    const auto x = static_cast<unsigned>(v);
    int len = 0;
    while ((x >> len) != 0) ++len;
    out.insert(out.end(), static_cast<std::size_t>(len - 1), 0);
    for (int i = len - 1; i >= 0; --i) out.push_back((x >> i) & 1u);
    return;
  }
  const std::size_t before = out.size();
  boost::multiprecision::export_bits(v, std::back_inserter(out), 1);
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(before), out.size() - before - 1, 0);
}

void put(Bits& out, const Poly& p) {
  if (p.arity() == 0) {
    put_gamma(out, zigzag_inv(p.value()) + 1);
    return;
  }
  put_gamma(out, BigInt(p.coefficients().size() + 1));
  for (const auto& c : p.coefficients()) put(out, c);
}

struct Reader {
  const Bits& bits;
  std::size_t pos;

  BigInt gamma() {
    std::size_t zeros = 0;
    while (pos < bits.size() && bits[pos] == 0) ++zeros, ++pos;
    if (bits.size() - pos < zeros + 1) throw InvalidCodeError("truncated code");
    BigInt v;
    const auto first = bits.begin() + static_cast<std::ptrdiff_t>(pos);
    boost::multiprecision::import_bits(v, first, first + static_cast<std::ptrdiff_t>(zeros + 1), 1);
    pos += zeros + 1;
    return v;
  }

  Poly get(std::size_t arity) {
    if (arity == 0) return Poly::constant(zigzag(gamma() - 1));
    const BigInt n = gamma() - 1;
    // Every entry takes at least one bit.
    if (n > BigInt(bits.size() - pos)) throw InvalidCodeError("list longer than the code");
    const auto len = static_cast<std::size_t>(n);
    std::vector<Poly> coeffs;
    coeffs.reserve(len);
    for (std::size_t j = 0; j < len; ++j) coeffs.push_back(get(arity - 1));
    if (!coeffs.empty() && coeffs.back().is_zero())
      throw InvalidCodeError("coefficient list ends in a zero entry");
    return Poly::raw(arity, std::move(coeffs));
  }
};

}  // namespace

DioCode encode_goedel(const Poly& p) {
  const Poly n = p.is_normalized() ? p : normalize(p);
  Bits bits{1};
  put(bits, n);
  BigInt body;
  boost::multiprecision::import_bits(body, bits.begin(), bits.end(), 1);
  return DioCode{cantor_pair(BigInt(n.arity()), body)};
}

Poly decode_goedel(const DioCode& code) {
  if (code.value < 0) throw InvalidCodeError("codes are natural numbers");
  auto [arity, body] = cantor_unpair(code.value);
  if (arity > BigInt(std::numeric_limits<std::size_t>::max())) throw InvalidCodeError("arity out of range");
  if (body < 2) throw InvalidCodeError("empty body");
  // Decoding recurses once per variable; only the zero polynomial is accepted
  // beyond a sane depth.
  if (arity > kMaxDecodeDepth) {
    if (body != 3) throw InvalidCodeError("arity too large to decode");
    return Poly::zero(static_cast<std::size_t>(arity));
  }
  Bits bits;
  boost::multiprecision::export_bits(body, std::back_inserter(bits), 1);
  Reader r{bits, 1};  // skip the sentinel bit
  Poly p = r.get(static_cast<std::size_t>(arity));
  if (r.pos != bits.size()) throw InvalidCodeError("trailing bits after the polynomial");
  return p;
}

}  // namespace diorace
