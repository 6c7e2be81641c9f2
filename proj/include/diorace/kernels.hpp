#ifndef DIORACE_KERNELS_HPP
#define DIORACE_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "diorace/enumeration.hpp"
#include "diorace/poly.hpp"

namespace diorace {

/// Poly reduced modulo m into the dense box layout. 2 <= m < 2^64.
class ModularImage {
 public:
  ModularImage(const Poly& p, std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::size_t arity() const noexcept { return extents_.size(); }
  const std::vector<std::size_t>& extents() const noexcept { return extents_; }
  const std::vector<std::uint64_t>& cells() const noexcept { return cells_; }

 private:
  std::uint64_t modulus_;
  std::vector<std::size_t> extents_;
  std::vector<std::uint64_t> cells_;
};

// Residue exhaustion: does some r in [0, m)^arity give ev(p, r) = 0 (mod m)?
// The serial version is the reference; the OpenMP version splits the
// trailing residue across threads and must agree with it on every input.
bool has_residue_zero_serial(const ModularImage& image);
bool has_residue_zero_omp(const ModularImage& image);

/// Map Index -> bool; must be pure and, for the parallel race, thread safe.
using StepPredicate = std::function<bool(Index)>;

enum class RaceWinner : std::uint8_t { ZeroSearch = 0, CertificateSearch = 1 };

struct RaceResult {
  RaceWinner winner;
  Index step;
  friend bool operator==(const RaceResult&, const RaceResult&) = default;
};

/// Speculative chunked race on OpenMP threads. Same least-firing-index
/// result as the serial mu_or for every pair of pure predicates.
std::optional<RaceResult> mu_or_omp(const StepPredicate& phi0, const StepPredicate& phi1, Index budget,
                                    std::size_t chunk = 1024);

}  // namespace diorace

#endif
