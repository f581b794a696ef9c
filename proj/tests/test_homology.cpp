#include "doctest.h"

#include "paracyclic/homology.hpp"

using namespace paracyclic;

namespace {

const Ring Q = Ring::rationals();
const Ring Z = Ring::integers();

HomologyGroup free_group(int degree, std::size_t r) { return HomologyGroup{degree, r, {}}; }

std::vector<std::size_t> free_ranks(const std::vector<HomologyGroup>& hs) {
  std::vector<std::size_t> out;
  for (const auto& h : hs) out.push_back(h.free_rank);
  return out;
}

}  // namespace

TEST_CASE("group formatting") {
  CHECK(to_string(HomologyGroup{0, 0, {}}) == "0");
  CHECK(to_string(HomologyGroup{0, 1, {}}, "Z") == "Z");
  CHECK(to_string(HomologyGroup{0, 2, {2}}, "Z") == "Z^2 + Z/2");
  CHECK(to_string(HomologyGroup{0, 0, {2, 4}}, "Z") == "Z/2 + Z/4");
}

TEST_CASE("homology of small complexes") {
  SUBCASE("multiplication by 2 on Z") {
    ChainComplex c{Z, {1, 1, 0}, {Matrix::zero(Z, 0, 1), Matrix::from_rows(Z, {{2}}), Matrix::zero(Z, 1, 0)}};
    CHECK(chain_homology(c, 0) == HomologyGroup{0, 0, {2}});
    CHECK(chain_homology(c, 1).is_zero());
  }
  SUBCASE("the same over Q and Z/2") {
    ChainComplex c{Q, {1, 1, 0}, {Matrix::zero(Q, 0, 1), Matrix::from_rows(Q, {{2}}), Matrix::zero(Q, 1, 0)}};
    CHECK(chain_homology(c, 0).is_zero());
    Ring z2 = Ring::integers_mod(2);
    ChainComplex c2{z2, {1, 1, 0}, {Matrix::zero(z2, 0, 1), Matrix::from_rows(z2, {{2}}), Matrix::zero(z2, 1, 0)}};
    CHECK(chain_homology(c2, 0) == free_group(0, 1));
    CHECK(chain_homology(c2, 1) == free_group(1, 1));
  }
  SUBCASE("not a complex") {
    try {
      homology_at(Q, 1, Matrix::from_rows(Q, {{1}}), Matrix::from_rows(Q, {{1}}), 0);
      FAIL("expected NotAComplex");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotAComplex);
    }
  }
  SUBCASE("composite modulus") {
    Ring z6 = Ring::integers_mod(6);
    try {
      homology_at(z6, 1, Matrix::zero(z6, 0, 1), Matrix::zero(z6, 1, 0), 0);
      FAIL("expected UnsupportedRing");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnsupportedRing);
    }
  }
  SUBCASE("the top degree is out of range") {
    ChainComplex c{Q, {1, 1}, {Matrix::zero(Q, 0, 1), Matrix::zero(Q, 1, 1)}};
    CHECK_THROWS_AS(chain_homology(c, 1), Error);
  }
}

TEST_CASE("simplex chains are acyclic above degree 0") {
  TruncatedDuplicialModule m = builtin_module("simplex-1", Z, 4);
  auto h = chain_homology(hochschild_complex(m));
  REQUIRE(h.size() == 4);
  CHECK(h[0] == free_group(0, 1));
  for (int n = 1; n < 4; ++n) CHECK(h[static_cast<std::size_t>(n)].is_zero());
}

TEST_CASE("reconstruction of (Z, Z) with zero differentials") {
  DuchainComplex v = DuchainComplex::zeros(Z, 5, {1, 1, 0, 0, 0, 0});
  auto h = chain_homology(hochschild_complex(duchain_to_duplicial(v, 4)));
  CHECK(free_ranks(h) == std::vector<std::size_t>{1, 1, 0, 0});
  for (const auto& g : h) CHECK(g.torsion.empty());
}

TEST_CASE("Hochschild homology of algebras") {
  auto hq = hochschild_homology(AlgebraSpec::ground(), 3, Q);
  CHECK(free_ranks(hq) == std::vector<std::size_t>{1, 0, 0, 0});
  auto hd = hochschild_homology(AlgebraSpec::dual_numbers(), 3, Q);
  CHECK(hd[0].free_rank == 2);
  CHECK(hd[1].free_rank == 1);
  auto hz = hochschild_homology(AlgebraSpec::dual_numbers(), 2, Z);
  CHECK(hz[0] == free_group(0, 2));
}

TEST_CASE("normalized and full homology agree") {
  for (Ring ring : {Q, Z, Ring::integers_mod(7)})
    for (const auto& name : builtin_names()) {
      CAPTURE(name);
      NormalizationComparison c = normalized_vs_full_homology(builtin_module(name, ring, 4));
      CHECK(c.agree);
      CHECK(c.full == c.normalized);
      CHECK(c.euler_full == c.euler_normalized);
      CHECK(c.witness.passed());
    }
}

TEST_CASE("mixed complexes") {
  SUBCASE("ground ring, b + B, W = 2") {
    MixedComplexHomology h = mixed_complex_homology(builtin_module("ground-ring", Q, 5), MixedFlavor::bB, 2);
    REQUIRE(h.assembled);
    CHECK(h.stable_max == 4);
    REQUIRE(h.groups.size() >= 3);
    CHECK(free_ranks({h.groups.begin(), h.groups.begin() + 3}) == std::vector<std::size_t>{1, 0, 1});
  }
  SUBCASE("W = 0 reproduces Hochschild homology in degree 0") {
    TruncatedDuplicialModule m = builtin_module("dual-numbers", Q, 3);
    MixedComplexHomology h = mixed_complex_homology(m, MixedFlavor::bB, 0);
    REQUIRE(h.assembled);
    REQUIRE(h.groups.size() == 1);
    CHECK(h.groups[0].free_rank == chain_homology(hochschild_complex(m), 0).free_rank);
  }
  SUBCASE("d + D cohomology of the ground ring") {
    MixedComplexHomology h = mixed_complex_homology(builtin_module("ground-ring", Q, 5), MixedFlavor::dD, 2);
    REQUIRE(h.assembled);
    CHECK(h.groups[0].free_rank == 1);
  }
  SUBCASE("paracyclic modules do not assemble") {
    MixedComplexHomology h =
        mixed_complex_homology(builtin_module("scalar-twisted-u", Q, 4), MixedFlavor::bB, 1);
    CHECK_FALSE(h.assembled);
    CHECK_FALSE(h.failure.empty());
    CHECK(h.groups.empty());
  }
  SUBCASE("argument errors") {
    TruncatedDuplicialModule m = builtin_module("ground-ring", Q, 3);
    CHECK_THROWS_AS(mixed_complex_homology(m, MixedFlavor::bB, -1), Error);
    CHECK_THROWS_AS(mixed_complex_homology(simplex_chains(1, 3, Q), MixedFlavor::bB, 1), Error);
    CHECK(parse_mixed_flavor("dD") == MixedFlavor::dD);
    CHECK(to_string(MixedFlavor::bB) == "bB");
    CHECK_THROWS_AS(parse_mixed_flavor("bd"), Error);
  }
}
