#pragma once

// Dense integer product kernels behind Matrix multiplication.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The variant is picked once at runtime from CPUID; setting
// PARACYCLIC_ISA=scalar in the environment (or calling set_isa_override)
// forces the reference path. Both paths are required to agree bit-for-bit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace paracyclic::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

// Best ISA supported by this CPU and build.
Isa detected_isa();
// The ISA matmul dispatches to: the override if set, else the environment
// choice, else detected_isa().
Isa active_isa();
void set_isa_override(std::optional<Isa> isa);

// Largest |entry| the signed kernel accepts (inputs are widened from 32 bits).
inline constexpr std::int64_t kMaxKernelEntry = (std::int64_t{1} << 31) - 1;

// c[rows x cols] = a[rows x inner] * b[inner x cols], row-major, int64
// accumulation. Preconditions: |entries| <= kMaxKernelEntry and
// inner * max|a| * max|b| < 2^63 (the caller checks this bound).
void matmul_i64(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                std::span<std::int64_t> c, std::size_t rows, std::size_t inner,
                std::size_t cols, Isa isa);

// Same shapes; entries in [0, modulus), modulus < 2^31; result reduced into
// [0, modulus).
void matmul_mod(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                std::span<std::int64_t> c, std::size_t rows, std::size_t inner,
                std::size_t cols, std::uint64_t modulus, Isa isa);

namespace detail {
void matmul_i64_scalar(const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                       std::size_t rows, std::size_t inner, std::size_t cols);
void matmul_i64_avx2(const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                     std::size_t rows, std::size_t inner, std::size_t cols);
// Accumulates a[:, k0:k1] * b[k0:k1, :] into c without reduction.
void accumulate_i64_scalar(const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                           std::size_t rows, std::size_t inner, std::size_t cols,
                           std::size_t k0, std::size_t k1);
void accumulate_i64_avx2(const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                         std::size_t rows, std::size_t inner, std::size_t cols,
                         std::size_t k0, std::size_t k1);
bool avx2_compiled();
}  // namespace detail

}  // namespace paracyclic::kernels
