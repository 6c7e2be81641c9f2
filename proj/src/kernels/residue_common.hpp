#ifndef DIORACE_SRC_KERNELS_RESIDUE_COMMON_HPP
#define DIORACE_SRC_KERNELS_RESIDUE_COMMON_HPP

#include <cstdint>
#include <vector>

#include "diorace/kernels.hpp"

namespace diorace::kernels {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  const std::uint64_t s = a + b;
  return (s < a || s >= m) ? s - m : s;
}

/// buffers.level(a) holds the image with x_{a+1}..x_m already substituted;
/// level(arity) aliases the image cells.
class LevelBuffers {
 public:
  explicit LevelBuffers(const ModularImage& image) : top_(&image.cells()), sizes_(image.arity() + 1, 1) {
    const auto& ext = image.extents();
    for (std::size_t a = 1; a <= ext.size(); ++a) sizes_[a] = sizes_[a - 1] * ext[a - 1];
    owned_.resize(ext.size());
    for (std::size_t a = 0; a < ext.size(); ++a) owned_[a].assign(sizes_[a], 0);
  }

  std::uint64_t* level(std::size_t a) { return owned_[a].data(); }
  const std::uint64_t* source(std::size_t a) const {
    return a == owned_.size() ? top_->data() : owned_[a].data();
  }
  std::size_t size(std::size_t a) const { return sizes_[a]; }

 private:
  const std::vector<std::uint64_t>* top_;
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<std::uint64_t>> owned_;
};

/// Horner in x_level at residue r: level(level) -> level(level - 1).
inline void reduce_trailing(const ModularImage& image, LevelBuffers& buffers, std::size_t level, std::uint64_t r) {
  const std::uint64_t m = image.modulus();
  const std::size_t extent = image.extents()[level - 1];
  const std::size_t inner = buffers.size(level - 1);
  const std::uint64_t* in = buffers.source(level);
  std::uint64_t* out = buffers.level(level - 1);
  for (std::size_t j = 0; j < inner; ++j) {
    std::uint64_t acc = in[(extent - 1) * inner + j];
    for (std::size_t i = extent - 1; i-- > 0;) acc = addmod(mulmod(acc, r, m), in[i * inner + j], m);
    out[j] = acc;
  }
}

bool exhaust_level(const ModularImage& image, LevelBuffers& buffers, std::size_t level);

}  // namespace diorace::kernels

#endif
