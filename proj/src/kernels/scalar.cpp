#include "paracyclic/kernels.hpp"

namespace paracyclic::kernels::detail {

void accumulate_i64_scalar(const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                           std::size_t rows, std::size_t inner, std::size_t cols,
                           std::size_t k0, std::size_t k1) {
  for (std::size_t i = 0; i < rows; ++i) {
    std::int64_t* crow = c + i * cols;
    for (std::size_t k = k0; k < k1; ++k) {
      const std::int64_t aik = a[i * inner + k];
      if (aik == 0) continue;
      const std::int64_t* brow = b + k * cols;
      for (std::size_t j = 0; j < cols; ++j) crow[j] += aik * brow[j];
    }
  }
}

void matmul_i64_scalar(const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                       std::size_t rows, std::size_t inner, std::size_t cols) {
  for (std::size_t i = 0; i < rows * cols; ++i) c[i] = 0;
  accumulate_i64_scalar(a, b, c, rows, inner, cols, 0, inner);
}

}  // namespace paracyclic::kernels::detail
