#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "paracyclic/kernels.hpp"

namespace paracyclic::kernels {

namespace {

// -1: no override, otherwise static_cast<int>(Isa).
std::atomic<int> g_override{-1};

Isa environment_or_detected() {
  static const Isa choice = [] {
    if (const char* env = std::getenv("PARACYCLIC_ISA")) {
      if (std::string(env) == "scalar") return Isa::Scalar;
    }
    return detected_isa();
  }();
  return choice;
}

void check_shapes(std::size_t a_size, std::size_t b_size, std::size_t c_size,
                  std::size_t rows, std::size_t inner, std::size_t cols) {
  if (a_size != rows * inner || b_size != inner * cols || c_size != rows * cols)
    throw std::invalid_argument("kernel buffer sizes do not match the shapes");
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
#if defined(__x86_64__) || defined(_M_X64)
  static const bool has_avx2 = detail::avx2_compiled() && __builtin_cpu_supports("avx2");
  return has_avx2 ? Isa::Avx2 : Isa::Scalar;
#else
  return Isa::Scalar;
#endif
}

Isa active_isa() {
  int forced = g_override.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Isa>(forced);
  return environment_or_detected();
}

void set_isa_override(std::optional<Isa> isa) {
  if (isa && *isa == Isa::Avx2 && detected_isa() != Isa::Avx2)
    throw std::runtime_error("AVX2 is not available on this machine");
  g_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void matmul_i64(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                std::span<std::int64_t> c, std::size_t rows, std::size_t inner,
                std::size_t cols, Isa isa) {
  check_shapes(a.size(), b.size(), c.size(), rows, inner, cols);
  if (isa == Isa::Avx2)
    detail::matmul_i64_avx2(a.data(), b.data(), c.data(), rows, inner, cols);
  else
    detail::matmul_i64_scalar(a.data(), b.data(), c.data(), rows, inner, cols);
}

void matmul_mod(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                std::span<std::int64_t> c, std::size_t rows, std::size_t inner,
                std::size_t cols, std::uint64_t modulus, Isa isa) {
  check_shapes(a.size(), b.size(), c.size(), rows, inner, cols);
  if (modulus < 2 || modulus > static_cast<std::uint64_t>(kMaxKernelEntry))
    throw std::invalid_argument("matmul_mod: modulus out of kernel range");
  const auto m = static_cast<std::int64_t>(modulus);
  // Partial sums stay below 2^63 when at most `chunk` products of size
  // (m-1)^2 are added to a value already reduced below m.
  const std::uint64_t sq = (modulus - 1) * (modulus - 1);
  std::size_t chunk = sq == 0 ? inner : static_cast<std::size_t>((INT64_MAX - m) / sq);
  if (chunk == 0) chunk = 1;

  for (auto& x : c) x = 0;
  for (std::size_t k0 = 0; k0 < inner; k0 += chunk) {
    std::size_t k1 = std::min(inner, k0 + chunk);
    if (isa == Isa::Avx2)
      detail::accumulate_i64_avx2(a.data(), b.data(), c.data(), rows, inner, cols, k0, k1);
    else
      detail::accumulate_i64_scalar(a.data(), b.data(), c.data(), rows, inner, cols, k0, k1);
    for (auto& x : c) x %= m;
  }
}

}  // namespace paracyclic::kernels
