#pragma once

#include <string>
#include <vector>

#include "paracyclic/constructions.hpp"
#include "paracyclic/duplicial.hpp"

namespace paracyclic {

struct HomologyGroup {
  int degree = 0;
  std::size_t free_rank = 0;
  // Invariant factors > 1, each dividing the next; empty over a field.
  std::vector<mpz_class> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

// "Z^2 + Z/2"-style, the free part named by the ring ("R" when omitted).
std::string to_string(const HomologyGroup& h, const std::string& ring_name = "R");

// C_0 <- C_1 <- ... <- C_top with diff[n] : C_n -> C_{n-1} (diff[0] has no
// rows).
struct ChainComplex {
  Ring ring = Ring::rationals();
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diff;

  int top() const { return static_cast<int>(ranks.size()) - 1; }
};

// ker(outgoing) / im(incoming) at a module of the given rank. NotAComplex
// when outgoing * incoming != 0; UnsupportedRing over composite Z/m.
HomologyGroup homology_at(const Ring& ring, std::size_t rank, const Matrix& outgoing,
                          const Matrix& incoming, int degree);

// H_n for 0 <= n < top (H_top would depend on the missing next differential).
HomologyGroup chain_homology(const ChainComplex& c, int n);
std::vector<HomologyGroup> chain_homology(const ChainComplex& c);

// (M, b) in degrees 0..n_max and its normalized subcomplex (N(M), b) in
// normalized coordinates.
ChainComplex hochschild_complex(const TruncatedDuplicialModule& m);
ChainComplex normalized_complex(const TruncatedDuplicialModule& m);

struct NormalizationComparison {
  std::vector<HomologyGroup> full;
  std::vector<HomologyGroup> normalized;
  bool agree = false;
  // Alternating sums of the free ranks over the compared degrees.
  long euler_full = 0;
  long euler_normalized = 0;
  // b phi + phi b = p - 1 at every degree below n_max.
  IdentityReport witness;
};

NormalizationComparison normalized_vs_full_homology(const TruncatedDuplicialModule& m);

// HH_0..HH_up_to of the algebra's cyclic (or twisted paracyclic) module
// under b.
std::vector<HomologyGroup> hochschild_homology(const AlgebraSpec& a, int up_to, const Ring& ring);

enum class MixedFlavor { bB, dD };
std::string to_string(MixedFlavor f);
MixedFlavor parse_mixed_flavor(const std::string& text);

struct MixedComplexHomology {
  MixedFlavor flavor = MixedFlavor::bB;
  int weight_cutoff = 0;
  // Groups are reported for degrees 0..stable_max only.
  int stable_max = -1;
  bool assembled = false;
  std::string failure;  // why assembly was refused
  std::vector<HomologyGroup> groups;
};

// Columns w = 0..W of N_{n-2w} in total degree n. bB: differential b + B,
// B moving from column w to w-1, homology. dD: differential d + D, D moving
// from column w to w+1, cohomology. Stable for n <= min(2W, n_max - 1).
// When the total differential does not square to zero nothing is computed
// and `failure` names the offending degree.
MixedComplexHomology mixed_complex_homology(const TruncatedDuplicialModule& m, MixedFlavor flavor,
                                            int weight_cutoff);

}  // namespace paracyclic
