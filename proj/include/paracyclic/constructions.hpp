#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paracyclic/dold_kan.hpp"
#include "paracyclic/duplicial.hpp"

namespace paracyclic {

// Finite-dimensional unital algebra on basis e_0..e_{dim-1}:
// e_i e_j = sum_l mult[(i * dim + j) * dim + l] e_l. The automorphism
// matrix has sigma(e_j) as its j-th column.
struct AlgebraSpec {
  std::size_t dim = 0;
  Vector unit;
  std::vector<Scalar> mult;
  std::optional<Matrix> automorphism;

  const Scalar& structure(std::size_t i, std::size_t j, std::size_t l) const {
    return mult[(i * dim + j) * dim + l];
  }
  // InvalidAlgebra on bad shapes, a non-unit, non-associativity, or an
  // automorphism that is not an algebra map fixing the unit.
  void validate(const Ring& ring) const;

  static AlgebraSpec ground();
  // Q[x]/(x^2) on the basis (1, x); `twisted` adds sigma(x) = -x.
  static AlgebraSpec dual_numbers(bool twisted = false);
};

// Chains on the standard k-simplex: M_n free on Delta([n],[k]), faces and
// degeneracies by precomposition. Simplicial only (no extra degeneracy).
TruncatedDuplicialModule simplex_chains(int k, int n_max, const Ring& ring);

// Cyclic module of a simplicial module through its normalized chain complex
// with zero extra differential, transported back to the original basis.
TruncatedDuplicialModule promote_simplicial(const TruncatedDuplicialModule& m, int n_max);

// A^{(n+1)} with multiplication faces, unit-inserting degeneracies and the
// rotation t(a_0 ... a_n) = a_1 ... a_n a_0. Rejects a non-identity
// automorphism.
TruncatedDuplicialModule algebra_cyclic_module(const AlgebraSpec& a, int n_max, const Ring& ring);

// Same degeneracies with sigma on the wrapped factor:
// t(a_0 ... a_n) = a_1 ... a_n sigma(a_0), last face sigma^{-1}(a_n) a_0 ...
TruncatedDuplicialModule twisted_paracyclic_module(const AlgebraSpec& a, int n_max,
                                                   const Ring& ring);

// The duplicial module with normalization V: M_n = (+)_I V_{n-|I|} over
// dk_sequences(n). Requires n_max <= V.n_max; t at the top degree is stored
// when V reaches one degree further.
TruncatedDuplicialModule duchain_to_duplicial(const DuchainComplex& v, int n_max);

// V_0 = V_1 = R, b_1 = 1, d_0 = 1 - u: kappa and pi act on N by u.
DuchainComplex scalar_twist_duchain(const Ring& ring, const Scalar& u, int n_max);

// Names accepted by builtin_module: ground-ring, simplex-0, simplex-1,
// simplex-2, dual-numbers, dual-numbers-twisted, scalar-twisted-u.
const std::vector<std::string>& builtin_names();
TruncatedDuplicialModule builtin_module(const std::string& name, const Ring& ring, int n_max,
                                        long u = 2);

}  // namespace paracyclic
