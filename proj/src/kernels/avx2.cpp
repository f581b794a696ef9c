#include "paracyclic/kernels.hpp"

#if defined(PARACYCLIC_HAVE_AVX2) && defined(__AVX2__)
#include <immintrin.h>

namespace paracyclic::kernels::detail {

bool avx2_compiled() { return true; }

// _mm256_mul_epi32 multiplies the sign-extended low 32 bits of each 64-bit
// lane, which is exact because entries are bounded by kMaxKernelEntry.
void accumulate_i64_avx2(const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                         std::size_t rows, std::size_t inner, std::size_t cols,
                         std::size_t k0, std::size_t k1) {
  const std::size_t vec_cols = cols & ~std::size_t{3};
  for (std::size_t i = 0; i < rows; ++i) {
    std::int64_t* crow = c + i * cols;
    for (std::size_t k = k0; k < k1; ++k) {
      const std::int64_t aik = a[i * inner + k];
      if (aik == 0) continue;
      const std::int64_t* brow = b + k * cols;
      const __m256i av = _mm256_set1_epi64x(aik);
      std::size_t j = 0;
      for (; j < vec_cols; j += 4) {
        __m256i bv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(brow + j));
        __m256i cv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(crow + j));
        cv = _mm256_add_epi64(cv, _mm256_mul_epi32(av, bv));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(crow + j), cv);
      }
      for (; j < cols; ++j) crow[j] += aik * brow[j];
    }
  }
}

void matmul_i64_avx2(const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                     std::size_t rows, std::size_t inner, std::size_t cols) {
  for (std::size_t i = 0; i < rows * cols; ++i) c[i] = 0;
  accumulate_i64_avx2(a, b, c, rows, inner, cols, 0, inner);
}

}  // namespace paracyclic::kernels::detail

#else

namespace paracyclic::kernels::detail {

bool avx2_compiled() { return false; }

void accumulate_i64_avx2(const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                         std::size_t rows, std::size_t inner, std::size_t cols,
                         std::size_t k0, std::size_t k1) {
  accumulate_i64_scalar(a, b, c, rows, inner, cols, k0, k1);
}

void matmul_i64_avx2(const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                     std::size_t rows, std::size_t inner, std::size_t cols) {
  matmul_i64_scalar(a, b, c, rows, inner, cols);
}

}  // namespace paracyclic::kernels::detail

#endif
