#ifndef DIORACE_RACE_HPP
#define DIORACE_RACE_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "diorace/certificates.hpp"
#include "diorace/enumeration.hpp"
#include "diorace/execution.hpp"
#include "diorace/goedel.hpp"
#include "diorace/kernels.hpp"
#include "diorace/poly.hpp"

namespace diorace {

/// Partial case distinction: 0 if u, 1 if !u && v, undefined (nullopt) otherwise.
constexpr std::optional<RaceWinner> dc(bool u, bool v) noexcept {
  if (u) return RaceWinner::ZeroSearch;
  if (v) return RaceWinner::CertificateSearch;
  return std::nullopt;
}

/// Race winner over one shared index stream: the least k < budget where
/// phi0(k) or phi1(k) holds, decided by dc at that k. nullopt if neither
/// fires below the budget. phi1 is not consulted where phi0 already holds.
template <typename Phi0, typename Phi1>
std::optional<RaceResult> mu_or(Phi0&& phi0, Phi1&& phi1, Index budget) {
  for (Index k = 0; k < budget; ++k) {
    const bool u = phi0(k);
    const bool v = !u && phi1(k);
    if (auto w = dc(u, v)) return RaceResult{*w, k};
  }
  return std::nullopt;
}

enum class Enumeration {
  /// ct_m at the polynomial's own arity.
  PerArity,
  /// ct_star over all lengths; wrong-length tuples never count as zeros.
  Uniform,
};

struct RaceConfig {
  Index budget = 100'000;
  VerifyBudget verify{};
  bool trace = false;
  Execution execution = Execution::Serial;
  Enumeration enumeration = Enumeration::PerArity;
  std::size_t chunk = 1024;
};

struct HasZero {
  TupleZ witness;
  Index step;
  friend bool operator==(const HasZero&, const HasZero&) = default;
};

struct NoZero {
  Certificate certificate;
  Index step;
  friend bool operator==(const NoZero&, const NoZero&) = default;
};

struct Undecided {
  Index budget;
  friend bool operator==(const Undecided&, const Undecided&) = default;
};

using Outcome = std::variant<HasZero, NoZero, Undecided>;

/// What the race consumed. Certificates whose residue count exceeded the cap
/// are counted as FALSE by the race and listed here.
struct RaceTrace {
  Index indices_explored = 0;
  std::vector<Index> budget_exceeded;
};

/// Least-index race of the zero search against the certificate search.
/// Constants are settled without racing: 0 has the empty witness, anything
/// else is NoZero{NonzeroConstant, 0}.
Outcome decide(const Poly& p, const RaceConfig& cfg);
Outcome decide(const Poly& p, const RaceConfig& cfg, RaceTrace& trace);

/// decode_goedel then decide. Throws InvalidCodeError.
Outcome decide_code(const DioCode& code, const RaceConfig& cfg);

/// Re-checks an outcome against p: a witness must vanish under both ev and
/// ev_naive, a certificate must verify TRUE. Undecided is trivially fine.
bool reverify(const Poly& p, const Outcome& outcome, const VerifyBudget& budget);

}  // namespace diorace

#endif
