#pragma once

#include <map>
#include <vector>

#include "paracyclic/duplicial.hpp"

namespace paracyclic {

// Strictly decreasing i_1 > ... > i_k >= 0 with i_1 <= n - 1, naming the
// degeneracy word s_{n-1,i_1} ... s_{n-k,i_k}.
using IndexSequence = std::vector<int>;

// All sequences for degree n: length ascending, then lexicographic.
std::vector<IndexSequence> dk_sequences(int n);

// Canonical form of s_{n-1,a} applied after the word of `seq` (a degree n-1
// sequence), using s_{n,j} s_{n-1,k} = s_{n,k+1} s_{n-1,j} for j <= k.
IndexSequence prepend_degeneracy(int a, const IndexSequence& seq);

std::string to_string(const IndexSequence& seq);

struct DKDecomposition {
  int degree = 0;
  // Components in ambient coordinates of M_{n-k}.
  std::map<IndexSequence, Vector> components;
};

// A graded module with two differentials: b[n] : V_n -> V_{n-1} for
// 0 <= n <= n_max (b[0] has zero rows) and d[n] : V_n -> V_{n+1} for
// 0 <= n < n_max.
struct DuchainComplex {
  Ring ring = Ring::rationals();
  int n_max = 0;
  std::vector<std::size_t> ranks;
  std::vector<Matrix> b;
  std::vector<Matrix> d;

  static DuchainComplex zeros(Ring ring, int n_max, std::vector<std::size_t> ranks);
  std::size_t rank(int n) const {
    return (n < 0 || n > n_max) ? 0 : ranks[static_cast<std::size_t>(n)];
  }
  // ShapeMismatch for bad shapes, InvalidDuchain when b^2 or d^2 is nonzero.
  void validate() const;
};

// Normalized chains, degenerate chains and the Dold-Kan decomposition of
// one module. Built on a shared Operators object.
class DoldKan {
 public:
  explicit DoldKan(const Operators& ops) : ops_(ops) {}

  const Operators& ops() const { return ops_; }

  // Columns span N_n = image p_n and D_n = kernel p_n.
  const Matrix& normalized_basis(int n) const;
  const Matrix& degenerate_basis(int n) const;
  // L with L * normalized_basis(n) = 1.
  const Matrix& normalized_coords(int n) const;
  std::size_t normalized_rank(int n) const { return normalized_basis(n).cols(); }

  // C_I : M_n -> M_{n-k} with x = sum_I S_I C_I x, indexed like
  // dk_sequences(n).
  const std::vector<Matrix>& component_maps(int n) const;

  // M_n -> (+)_I N_{n-k} in normalized coordinates, and its inverse.
  const Matrix& coordinate_map(int n) const;
  const Matrix& basis_map(int n) const;

  // Restriction of an endomorphism of M_n preserving N_n, in N coordinates.
  Matrix restrict_to_normalized(const Matrix& op, int n) const;

 private:
  void build_normalization(int n) const;

  const Operators& ops_;
  mutable std::mutex mutex_;
  mutable std::map<int, Matrix> normalized_, degenerate_, coords_, coordinate_map_, basis_map_;
  mutable std::map<int, std::vector<Matrix>> components_;
};

struct NormalizationBases {
  Matrix normalized;
  Matrix degenerate;
};
NormalizationBases normalization(const TruncatedDuplicialModule& m, int n);

DKDecomposition dk_decompose(const TruncatedDuplicialModule& m, int n, const Vector& x);
// Throws NonNormalizedComponent if a component is not killed by the inner
// faces.
Vector dk_reconstruct(const TruncatedDuplicialModule& m, const DKDecomposition& dec);

// (N(M), b restricted, p d restricted) in normalized coordinates. Throws
// InducedSquareNonzero if either induced differential fails to square to 0.
DuchainComplex induced_duchain(const TruncatedDuplicialModule& m);
DuchainComplex induced_duchain(const DoldKan& dk);

}  // namespace paracyclic
