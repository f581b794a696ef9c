#include <random>

#include "doctest.h"

#include "paracyclic/constructions.hpp"
#include "paracyclic/dold_kan.hpp"
#include "paracyclic/linalg.hpp"

using namespace paracyclic;

namespace {

const Ring Q = Ring::rationals();

Vector random_vector(std::mt19937& rng, const Ring& ring, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = ring.from_int(static_cast<long>(rng() % 9) - 4);
  return v;
}

std::size_t binomial(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

TEST_CASE("index sequences") {
  CHECK(dk_sequences(0) == std::vector<IndexSequence>{{}});
  CHECK(dk_sequences(2) == std::vector<IndexSequence>{{}, {0}, {1}, {1, 0}});
  for (int n = 0; n <= 6; ++n) CHECK(dk_sequences(n).size() == (std::size_t{1} << n));
  CHECK(to_string(IndexSequence{2, 0}) == "(2,0)");
  CHECK(to_string(IndexSequence{}) == "()");
  // s_{n-1,a} s_I with a already used shifts the larger entries.
  CHECK(prepend_degeneracy(0, {0}) == IndexSequence{1, 0});
  CHECK(prepend_degeneracy(1, {0}) == IndexSequence{1, 0});
  CHECK(prepend_degeneracy(0, {}) == IndexSequence{0});
}

TEST_CASE("prepend_degeneracy matches the degeneracy words") {
  TruncatedDuplicialModule m = builtin_module("simplex-2", Q, 5);
  Operators ops(m);
  for (int n = 1; n <= 4; ++n)
    for (const auto& seq : dk_sequences(n - 1))
      for (int a = 0; a <= n - 1; ++a)
        CHECK(ops.degen(n - 1, a) * degeneracy_word(ops, n - 1, seq) ==
              degeneracy_word(ops, n, prepend_degeneracy(a, seq)));
}

TEST_CASE("decomposition examples on the ground ring") {
  TruncatedDuplicialModule m = builtin_module("ground-ring", Q, 4);
  SUBCASE("degree 0 is normalized") {
    DKDecomposition dec = dk_decompose(m, 0, {Scalar(5)});
    REQUIRE(dec.components.size() == 1);
    CHECK(dec.components.at({}) == Vector{Scalar(5)});
  }
  SUBCASE("degree 1 is entirely degenerate") {
    DKDecomposition dec = dk_decompose(m, 1, {Scalar(3)});
    CHECK(dec.components.at({}) == Vector{Scalar(0)});
    CHECK(dec.components.at({0}) == Vector{Scalar(3)});
    CHECK(dk_reconstruct(m, dec) == Vector{Scalar(3)});
  }
  SUBCASE("a non-normalized component is rejected") {
    DKDecomposition dec;
    dec.degree = 1;
    dec.components[{}] = {Scalar(1)};
    try {
      dk_reconstruct(m, dec);
      FAIL("expected NonNormalizedComponent");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonNormalizedComponent);
    }
  }
}

TEST_CASE("round trips and rank identity") {
  std::mt19937 rng(8);
  for (const std::string name : {"simplex-1", "simplex-2", "dual-numbers", "scalar-twisted-u"}) {
    CAPTURE(name);
    for (Ring ring : {Q, Ring::integers(), Ring::integers_mod(7)}) {
      TruncatedDuplicialModule m = builtin_module(name, ring, 4);
      Operators ops(m);
      DoldKan dk(ops);
      for (int n = 0; n <= 4; ++n) {
        std::size_t total = 0;
        for (int k = 0; k <= n; ++k) total += binomial(n, k) * dk.normalized_rank(n - k);
        CHECK(total == m.rank(n));
        CHECK(dk.basis_map(n) * dk.coordinate_map(n) == ops.id(n));
        for (int trial = 0; trial < 10; ++trial) {
          Vector x = random_vector(rng, ring, m.rank(n));
          DKDecomposition dec = dk_decompose(m, n, x);
          CHECK(dec.degree == n);
          CHECK(dk_reconstruct(m, dec) == x);
        }
      }
    }
  }
}

TEST_CASE("normalized and degenerate parts split each degree") {
  TruncatedDuplicialModule m = builtin_module("dual-numbers", Q, 4);
  Operators ops(m);
  DoldKan dk(ops);
  for (int n = 0; n <= 4; ++n) {
    const Matrix& nb = dk.normalized_basis(n);
    const Matrix& db = dk.degenerate_basis(n);
    CHECK(nb.cols() + db.cols() == m.rank(n));
    CHECK(ops.p(n) * nb == nb);
    CHECK((ops.p(n) * db).is_zero());
    CHECK(dk.normalized_coords(n) * nb == Matrix::identity(Q, nb.cols()));
    for (int i = 1; i <= n; ++i) CHECK((ops.face(n, i) * nb).is_zero());
  }
  // A 2^{n+1}-dimensional tensor power has normalized part of rank 2 * 1^n.
  CHECK(dk.normalized_rank(3) == 2);
}

TEST_CASE("normalization helper matches the class") {
  TruncatedDuplicialModule m = builtin_module("simplex-1", Q, 3);
  Operators ops(m);
  DoldKan dk(ops);
  NormalizationBases nb = normalization(m, 2);
  CHECK(nb.normalized == dk.normalized_basis(2));
  CHECK(nb.degenerate == dk.degenerate_basis(2));
}

TEST_CASE("induced duchain") {
  SUBCASE("ground ring") {
    DuchainComplex v = induced_duchain(builtin_module("ground-ring", Q, 4));
    CHECK(v.ranks == std::vector<std::size_t>{1, 0, 0, 0, 0});
  }
  SUBCASE("scalar twist") {
    DuchainComplex v = induced_duchain(builtin_module("scalar-twisted-u", Q, 4, 3));
    CHECK(v.rank(0) == 1);
    CHECK(v.rank(1) == 1);
    for (int n = 2; n <= 4; ++n) CHECK(v.rank(n) == 0);
  }
  SUBCASE("squares vanish on every built-in with the extra degeneracy") {
    for (const auto& name : builtin_names()) {
      TruncatedDuplicialModule m = builtin_module(name, Q, 4);
      if (!m.has_extra_degeneracy()) continue;
      DuchainComplex v = induced_duchain(m);
      CHECK_NOTHROW(v.validate());
    }
  }
}

TEST_CASE("duchain validation") {
  DuchainComplex v = DuchainComplex::zeros(Q, 2, {1, 1, 1});
  v.b[1] = Matrix::from_rows(Q, {{1}});
  v.b[2] = Matrix::from_rows(Q, {{1}});
  try {
    v.validate();
    FAIL("expected InvalidDuchain");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidDuchain);
  }
  v.b[2] = Matrix::zero(Q, 2, 1);
  CHECK_THROWS_AS(v.validate(), Error);
}
