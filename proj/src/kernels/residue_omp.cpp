#include <atomic>

#include <omp.h>

#include "diorace/kernels.hpp"
#include "kernels/residue_common.hpp"

namespace diorace {

bool has_residue_zero_omp(const ModularImage& image) {
  const std::size_t arity = image.arity();
  if (arity == 0) return image.cells()[0] == 0;
  const std::uint64_t m = image.modulus();
  std::atomic<bool> found{false};
#pragma omp parallel
  {
    kernels::LevelBuffers buffers(image);
#pragma omp for schedule(dynamic, 16)
    for (std::uint64_t r = 0; r < m; ++r) {
      if (found.load(std::memory_order_relaxed)) continue;
      kernels::reduce_trailing(image, buffers, arity, r);
      if (kernels::exhaust_level(image, buffers, arity - 1)) found.store(true, std::memory_order_relaxed);
    }
  }
  return found.load();
}

}  // namespace diorace
