#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "diorace/certificates.hpp"
#include "diorace/evaluator.hpp"
#include "diorace/kernels.hpp"
#include "diorace/parser.hpp"
#include "support/oracles.hpp"

using namespace diorace;
using diorace::testing::Rng;

namespace {

const VerifyBudget kBudget{};

VerifyResult check(const Certificate& c, const char* text) { return verify(c, parse(text), kBudget); }

}  // namespace

TEST_CASE("cert_decode enumeration order") {
  CHECK(cert_decode(0) == Certificate::nonzero_constant());
  CHECK(cert_decode(1) == Certificate::gcd(2));
  CHECK(cert_decode(2) == Certificate::modular(2));
  CHECK(cert_decode(3) == Certificate::gcd(3));
  CHECK(cert_decode(6) == Certificate::modular(4));
  std::set<std::uint64_t> moduli;
  for (Index k = 0; k <= 20; ++k) {
    if (cert_decode(k).schema() == Schema::ModularObstruction) moduli.insert(cert_decode(k).parameter());
  }
  for (std::uint64_t m = 2; m <= 10; ++m) CHECK(moduli.count(m) == 1);
}

TEST_CASE("cert_decode hits each certificate at exactly one index") {
  std::set<std::pair<int, std::uint64_t>> seen;
  for (Index k = 0; k <= 10000; ++k) {
    const Certificate c = cert_decode(k);
    REQUIRE(seen.insert({static_cast<int>(c.schema()), c.parameter()}).second);
    REQUIRE(cert_index(c) == k);
  }
}

TEST_CASE("certificate parameters are range checked") {
  CHECK_THROWS_AS((void)Certificate::gcd(1), std::invalid_argument);
  CHECK_THROWS_AS((void)Certificate::modular(0), std::invalid_argument);
}

TEST_CASE("verify examples") {
  CHECK(check(Certificate::modular(4), "x1^2 + x2^2 - 3") == VerifyResult::True);
  CHECK(check(Certificate::gcd(2), "2*x1 - 1") == VerifyResult::True);
  CHECK(check(Certificate::modular(3), "x1 - 1") == VerifyResult::False);
  CHECK(check(Certificate::nonzero_constant(), "5") == VerifyResult::True);
  CHECK(check(Certificate::nonzero_constant(), "5 + 0*x3") == VerifyResult::True);
  CHECK(check(Certificate::nonzero_constant(), "0") == VerifyResult::False);
  CHECK(check(Certificate::nonzero_constant(), "x1 + 5") == VerifyResult::False);
  // no constant term: 0 is divisible by g
  CHECK(check(Certificate::gcd(2), "2*x1") == VerifyResult::False);
  CHECK(check(Certificate::gcd(3), "3*x1*x2 + 6*x2^2 + 4") == VerifyResult::True);
  CHECK(check(Certificate::modular(2), "7") == VerifyResult::True);
  CHECK(check(Certificate::modular(7), "7") == VerifyResult::False);
}

TEST_CASE("the parity oracle agrees with the gcd certificate for 2*x1 - 1") {
  CHECK_FALSE(testing::residue_zero_brute(parse("2*x1 - 1"), 2));
}

TEST_CASE("residue cap yields BudgetExceeded, not FALSE") {
  // squares mod 8 lie in {0, 1, 4}; no three of them sum to 7
  const VerifyBudget tight{512};
  const Poly p = parse("x1^2 + x2^2 + x3^2 - 7");
  CHECK(verify(Certificate::modular(8), p, tight) == VerifyResult::True);  // 512 tuples
  CHECK(verify(Certificate::modular(9), p, tight) == VerifyResult::BudgetExceeded);  // 729 tuples
  CHECK(verify(Certificate::modular(4), p, tight) == VerifyResult::False);  // 1 + 1 + 1 = 3
  CHECK(exceeds_budget(Certificate::modular(9), p, tight));
  CHECK_FALSE(exceeds_budget(Certificate::gcd(9), p, tight));
  CHECK(residue_tuple_count(10, 6, 1'000'000) == std::optional<std::uint64_t>{1'000'000});
  CHECK_FALSE(residue_tuple_count(10, 7, 1'000'000));
  CHECK_FALSE(residue_tuple_count(~std::uint64_t{0}, 2, ~std::uint64_t{0}));
}

TEST_CASE("no certificate up to id 500 verifies on polynomials with zeros") {
  Rng rng(41);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    TupleZ z;
    const auto arity = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    const Poly p = testing::poly_with_zero(rng, arity, 3, 6, 6, z);
    REQUIRE(testing::grid_zero(p, -10, 10).has_value());
    for (Index k = 0; k <= 500; ++k) {
      REQUIRE(verify(cert_decode(k), p, kBudget) != VerifyResult::True);
    }
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("a verified modular obstruction excludes zeros at random points") {
  Rng rng(42);
  int obstructed = 0;
  for (int i = 0; i < 400 && obstructed < 30; ++i) {
    const auto arity = static_cast<std::size_t>(testing::uniform(rng, 1, 2));
    const Poly p = testing::random_poly(rng, arity, 3, -8, 8);
    const std::uint64_t m = static_cast<std::uint64_t>(testing::uniform(rng, 2, 9));
    if (verify(Certificate::modular(m), p, kBudget) != VerifyResult::True) continue;
    ++obstructed;
    CHECK_FALSE(testing::residue_zero_brute(p, static_cast<std::int64_t>(m)));
    for (int j = 0; j < 500; ++j) {
      const TupleZ xs = testing::random_point(rng, arity, -1000, 1000);
      const BigInt v = ev(p, xs);
      REQUIRE(!mod_floor(v, BigInt(m)).is_zero());
      REQUIRE(!v.is_zero());
    }
  }
  CHECK(obstructed >= 10);
}

TEST_CASE("gcd obstruction implies the modular obstruction of the same modulus") {
  Rng rng(43);
  int hits = 0;
  for (int i = 0; i < 3000; ++i) {
    const auto arity = static_cast<std::size_t>(testing::uniform(rng, 0, 2));
    const std::uint64_t g = static_cast<std::uint64_t>(testing::uniform(rng, 2, 4));
    // multiples of g plus a constant, so some cases obstruct
    Poly p = scalar_mul(testing::random_poly(rng, arity, 3, -5, 5), BigInt(g));
    p = add(p, Poly::constant_at(arity, BigInt(testing::uniform(rng, -6, 6))));
    if (verify(Certificate::gcd(g), p, kBudget) != VerifyResult::True) continue;
    ++hits;
    CHECK(verify(Certificate::modular(g), p, kBudget) == VerifyResult::True);
  }
  CHECK(hits > 100);
}

TEST_CASE("residue kernels: serial, OpenMP and brute-force routes agree") {
  Rng rng(44);
  for (int i = 0; i < 300; ++i) {
    const auto arity = static_cast<std::size_t>(testing::uniform(rng, 0, 3));
    const Poly p = testing::random_poly(rng, arity, 3, -12, 12);
    const auto m = static_cast<std::uint64_t>(testing::uniform(rng, 2, arity == 3 ? 8 : 20));
    const ModularImage image(p, m);
    const bool brute = testing::residue_zero_brute(p, static_cast<std::int64_t>(m));
    CHECK(has_residue_zero_serial(image) == brute);
    CHECK(has_residue_zero_omp(image) == brute);
    const auto expect = brute ? VerifyResult::False : VerifyResult::True;
    CHECK(verify(Certificate::modular(m), p, kBudget, Execution::Serial) == expect);
    CHECK(verify(Certificate::modular(m), p, kBudget, Execution::Parallel) == expect);
  }
}

TEST_CASE("modular image handles moduli near 2^64") {
  const std::uint64_t m = ~std::uint64_t{0} - 58;  // odd, large
  const ModularImage image(parse("x1 - 5"), m);
  CHECK(image.cells()[0] == m - 5);
  CHECK(image.cells()[1] == 1);
  CHECK_THROWS_AS(ModularImage(parse("x1"), 1), std::invalid_argument);
}
