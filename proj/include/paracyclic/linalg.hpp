#pragma once

#include <cstddef>
#include <vector>

#include "paracyclic/matrix.hpp"

namespace paracyclic {

struct SmithForm {
  Matrix left;      // U, unimodular
  Matrix diagonal;  // S = U * M * V
  Matrix right;     // V, unimodular
  // Nonzero diagonal entries d_1 | d_2 | ... in order.
  std::vector<mpz_class> invariant_factors() const;
};

// Smith normal form over Z. Pivots are chosen by smallest absolute value to
// keep intermediate entries small.
SmithForm smith_normal_form(const Matrix& m);

// Rank. Over Z the rank over Q; over Z/m requires m prime.
std::size_t rank(const Matrix& m);

// Basis of the kernel as column vectors. Over Z the basis spans the full
// integer kernel lattice. Over Z/m composite m this throws CompositeModulus.
std::vector<Vector> kernel_basis(const Matrix& m);
Matrix kernel_matrix(const Matrix& m);

// Determinant; over Z/m computed from the integer lift.
Scalar determinant(const Matrix& m);

// Two-sided inverse over the matrix's ring; NotInvertible otherwise (the
// message carries the determinant or the rank).
Matrix invert(const Matrix& m);
bool is_invertible(const Matrix& m);

// L with L * basis = identity, for a matrix whose columns are independent
// and (over Z) span a saturated sublattice.
Matrix left_inverse(const Matrix& basis);

// Reduced row echelon form over a field (Q or prime Z/p). Returns the pivot
// columns through `pivots`.
Matrix row_echelon(const Matrix& m, std::vector<std::size_t>& pivots);

}  // namespace paracyclic
