#ifndef DIORACE_DETAIL_DENSE_IMPL_HPP
#define DIORACE_DETAIL_DENSE_IMPL_HPP

namespace diorace {
namespace detail {

template <typename Put>
void walk_dense(const Poly& p, const std::vector<std::size_t>& extents, std::size_t offset, Put& put) {
  if (p.arity() == 0) {
    if (!p.value().is_zero()) put(offset, p.value());
    return;
  }
  std::size_t stride = 1;
  for (std::size_t i = 0; i + 1 < p.arity(); ++i) stride *= extents[i];
  const auto& coeffs = p.coefficients();
  for (std::size_t j = 0; j < coeffs.size(); ++j) walk_dense(coeffs[j], extents, offset + j * stride, put);
}

}  // namespace detail

template <typename Put>
void for_each_dense_cell(const Poly& p, const std::vector<std::size_t>& extents, Put&& put) {
  detail::walk_dense(p, extents, 0, put);
}

}  // namespace diorace

#endif
