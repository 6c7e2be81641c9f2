#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <vector>

#include <omp.h>

#include "diorace/kernels.hpp"

namespace diorace {

std::optional<RaceResult> mu_or_omp(const StepPredicate& phi0, const StepPredicate& phi1, Index budget,
                                    std::size_t chunk) {
  constexpr Index kNone = std::numeric_limits<Index>::max();
  chunk = std::max<std::size_t>(chunk, 1);
  std::vector<std::uint8_t> verdict(chunk);
  std::exception_ptr error;
  std::mutex error_mutex;

  for (Index base = 0; base < budget; base += std::min<Index>(chunk, budget - base)) {
    const auto n = static_cast<std::int64_t>(std::min<Index>(chunk, budget - base));
    std::atomic<Index> best{kNone};
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < n; ++i) {
      const Index k = base + static_cast<Index>(i);
      // Indices past a known firing index cannot change the least one.
      if (k > best.load(std::memory_order_relaxed)) continue;
      try {
        const bool u = phi0(k);
        const bool v = !u && phi1(k);
        if (u || v) {
          verdict[static_cast<std::size_t>(i)] = u ? 0 : 1;
          Index seen = best.load(std::memory_order_relaxed);
          while (k < seen && !best.compare_exchange_weak(seen, k, std::memory_order_relaxed)) {
          }
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        best.store(0, std::memory_order_relaxed);
      }
    }
    if (error) std::rethrow_exception(error);
    const Index t = best.load();
    if (t != kNone) {
      const auto w = verdict[static_cast<std::size_t>(t - base)] == 0 ? RaceWinner::ZeroSearch
                                                                      : RaceWinner::CertificateSearch;
      return RaceResult{w, t};
    }
  }
  return std::nullopt;
}

}  // namespace diorace
