#include <random>
#include <vector>

#include "doctest.h"

#include "paracyclic/kernels.hpp"
#include "paracyclic/matrix.hpp"

using namespace paracyclic;
namespace k = paracyclic::kernels;

namespace {

std::vector<std::int64_t> random_entries(std::mt19937_64& rng, std::size_t n, std::int64_t lo,
                                         std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

struct IsaGuard {
  ~IsaGuard() { k::set_isa_override(std::nullopt); }
};

}  // namespace

TEST_CASE("scalar and AVX2 int64 kernels agree") {
  if (k::detected_isa() != k::Isa::Avx2) {
    MESSAGE("AVX2 not available; scalar path only");
    return;
  }
  std::mt19937_64 rng(2024);
  for (auto [r, n, c] : {std::tuple{1, 1, 1}, {3, 5, 7}, {8, 8, 8}, {17, 9, 13}, {64, 64, 64},
                         {5, 33, 3}}) {
    const auto rows = static_cast<std::size_t>(r), inner = static_cast<std::size_t>(n),
               cols = static_cast<std::size_t>(c);
    // Bound keeps inner * max|a| * max|b| far below 2^63.
    auto a = random_entries(rng, rows * inner, -100000, 100000);
    auto b = random_entries(rng, inner * cols, -100000, 100000);
    std::vector<std::int64_t> c1(rows * cols), c2(rows * cols);
    k::matmul_i64(a, b, c1, rows, inner, cols, k::Isa::Scalar);
    k::matmul_i64(a, b, c2, rows, inner, cols, k::Isa::Avx2);
    CHECK(c1 == c2);
  }
}

TEST_CASE("scalar and AVX2 modular kernels agree") {
  if (k::detected_isa() != k::Isa::Avx2) return;
  std::mt19937_64 rng(77);
  for (std::uint64_t m : {2ull, 7ull, 65521ull, 2147483647ull}) {
    for (std::size_t dim : {1u, 4u, 9u, 40u}) {
      auto a = random_entries(rng, dim * dim, 0, static_cast<std::int64_t>(m) - 1);
      auto b = random_entries(rng, dim * dim, 0, static_cast<std::int64_t>(m) - 1);
      std::vector<std::int64_t> c1(dim * dim), c2(dim * dim);
      k::matmul_mod(a, b, c1, dim, dim, dim, m, k::Isa::Scalar);
      k::matmul_mod(a, b, c2, dim, dim, dim, m, k::Isa::Avx2);
      CHECK(c1 == c2);
      for (auto x : c1) CHECK((x >= 0 && x < static_cast<std::int64_t>(m)));
    }
  }
}

TEST_CASE("matrix products are independent of the dispatched ISA") {
  IsaGuard guard;
  std::mt19937_64 rng(5);
  for (Ring ring : {Ring::integers(), Ring::integers_mod(7), Ring::integers_mod(1000003)}) {
    Matrix a(ring, 20, 30), b(ring, 30, 11);
    auto ea = random_entries(rng, 600, -50, 50), eb = random_entries(rng, 330, -50, 50);
    for (std::size_t i = 0; i < 600; ++i) a.set(i / 30, i % 30, Scalar(static_cast<long>(ea[i])));
    for (std::size_t i = 0; i < 330; ++i) b.set(i / 11, i % 11, Scalar(static_cast<long>(eb[i])));
    k::set_isa_override(k::Isa::Scalar);
    Matrix scalar = a * b;
    k::set_isa_override(k::detected_isa());
    Matrix fast = a * b;
    CHECK(scalar == fast);
    CHECK(scalar == multiply_reference(a, b));
  }
}

TEST_CASE("large entries fall back to exact arithmetic") {
  Ring z = Ring::integers();
  Matrix a(z, 2, 2);
  a.set(0, 0, Scalar(mpz_class("100000000000000000000")));
  a.set(1, 1, Scalar(3));
  Matrix sq = a * a;
  CHECK(sq(0, 0) == Scalar(mpz_class("10000000000000000000000000000000000000000")));
  CHECK(sq == multiply_reference(a, a));
}
