#include <stdexcept>

#include "diorace/evaluator.hpp"
#include "diorace/kernels.hpp"
#include "kernels/residue_common.hpp"

namespace diorace {

ModularImage::ModularImage(const Poly& p, std::uint64_t modulus) : modulus_(modulus), extents_(dense_extents(p)) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  const std::size_t cells = dense_cell_count(extents_);
  if (cells > CompiledPoly::kMaxDenseCells) throw std::length_error("polynomial too large for a dense residue image");
  cells_.assign(cells, 0);
  for_each_dense_cell(p, extents_, [&](std::size_t at, const BigInt& c) { cells_[at] = mod_u64(c, modulus); });
}

namespace kernels {

bool exhaust_level(const ModularImage& image, LevelBuffers& buffers, std::size_t level) {
  if (level == 0) return buffers.source(0)[0] == 0;
  const std::uint64_t m = image.modulus();
  for (std::uint64_t r = 0; r < m; ++r) {
    reduce_trailing(image, buffers, level, r);
    if (exhaust_level(image, buffers, level - 1)) return true;
  }
  return false;
}

}  // namespace kernels

bool has_residue_zero_serial(const ModularImage& image) {
  kernels::LevelBuffers buffers(image);
  return kernels::exhaust_level(image, buffers, image.arity());
}

}  // namespace diorace
