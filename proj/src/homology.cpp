#include "paracyclic/homology.hpp"

#include <algorithm>

#include "paracyclic/dold_kan.hpp"
#include "paracyclic/error.hpp"
#include "paracyclic/linalg.hpp"

namespace paracyclic {

namespace {

void require_supported(const Ring& ring) {
  if (ring.kind() == Ring::Kind::IntegersMod && !ring.is_prime_field())
    throw Error(ErrorKind::UnsupportedRing, "homology over " + ring.name() + " (composite modulus)");
}

void put_block(Matrix& target, std::size_t r0, std::size_t c0, const Matrix& block) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c)
      if (block(r, c) != 0) target.set(r0 + r, c0 + c, block(r, c));
}

// X restricted and corestricted to normalized chains: L_to p_to X Nb_from.
Matrix on_normalized(const DoldKan& dk, const Matrix& x, int to, int from) {
  const Operators& ops = dk.ops();
  return dk.normalized_coords(to) * ops.p(to) * x * dk.normalized_basis(from);
}

}  // namespace

std::string to_string(const HomologyGroup& h, const std::string& ring_name) {
  std::string out;
  if (h.free_rank == 1) out = ring_name;
  if (h.free_rank > 1) out = ring_name + "^" + std::to_string(h.free_rank);
  for (const auto& t : h.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  return out.empty() ? "0" : out;
}

HomologyGroup homology_at(const Ring& ring, std::size_t rank_n, const Matrix& outgoing,
                          const Matrix& incoming, int degree) {
  require_supported(ring);
  if (outgoing.cols() != rank_n || incoming.rows() != rank_n)
    throw Error(ErrorKind::ShapeMismatch, "differentials around degree " + std::to_string(degree));
  if (!(outgoing * incoming).is_zero())
    throw Error(ErrorKind::NotAComplex,
                "consecutive differentials compose to nonzero at degree " + std::to_string(degree));

  HomologyGroup h;
  h.degree = degree;
  const std::size_t r_out = rank(outgoing), r_in = rank(incoming);
  h.free_rank = rank_n - r_out - r_in;
  if (ring.kind() == Ring::Kind::Integers) {
    for (mpz_class f : smith_normal_form(incoming).invariant_factors()) {
      f = abs(f);
      if (f > 1) h.torsion.push_back(f);
    }
  }
  return h;
}

HomologyGroup chain_homology(const ChainComplex& c, int n) {
  if (n < 0 || n >= c.top())
    throw Error(ErrorKind::DegreeOutOfRange,
                "homology at degree " + std::to_string(n) + " needs the differential out of degree " +
                    std::to_string(n + 1));
  const auto un = static_cast<std::size_t>(n);
  return homology_at(c.ring, c.ranks[un], c.diff[un], c.diff[un + 1], n);
}

std::vector<HomologyGroup> chain_homology(const ChainComplex& c) {
  std::vector<HomologyGroup> out;
  for (int n = 0; n < c.top(); ++n) out.push_back(chain_homology(c, n));
  return out;
}

ChainComplex hochschild_complex(const TruncatedDuplicialModule& m) {
  Operators ops(m);
  ChainComplex c;
  c.ring = m.ring;
  c.ranks = m.ranks;
  for (int n = 0; n <= m.n_max; ++n) c.diff.push_back(ops.b(n));
  return c;
}

ChainComplex normalized_complex(const TruncatedDuplicialModule& m) {
  require_supported(m.ring);
  Operators ops(m);
  DoldKan dk(ops);
  ChainComplex c;
  c.ring = m.ring;
  for (int n = 0; n <= m.n_max; ++n) {
    c.ranks.push_back(dk.normalized_rank(n));
    c.diff.push_back(n == 0 ? Matrix(m.ring, 0, dk.normalized_rank(0))
                            : on_normalized(dk, ops.b(n), n - 1, n));
  }
  return c;
}

NormalizationComparison normalized_vs_full_homology(const TruncatedDuplicialModule& m) {
  NormalizationComparison out;
  out.full = chain_homology(hochschild_complex(m));
  out.normalized = chain_homology(normalized_complex(m));
  out.agree = out.full == out.normalized;
  long sign = 1;
  for (std::size_t i = 0; i < out.full.size(); ++i, sign = -sign) {
    out.euler_full += sign * static_cast<long>(out.full[i].free_rank);
    out.euler_normalized += sign * static_cast<long>(out.normalized[i].free_rank);
  }
  Operators ops(m);
  for (int n = 0; n < m.n_max; ++n)
    out.witness.record("em-homotopy", n, ops.b(n + 1) * ops.phi(n) + ops.phi(n - 1) * ops.b(n),
                       ops.p(n) - ops.id(n));
  return out;
}

std::vector<HomologyGroup> hochschild_homology(const AlgebraSpec& a, int up_to, const Ring& ring) {
  if (up_to < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative homology degree");
  const bool twisted = a.automorphism && !a.automorphism->is_identity();
  TruncatedDuplicialModule m = twisted ? twisted_paracyclic_module(a, up_to + 1, ring)
                                       : algebra_cyclic_module(a, up_to + 1, ring);
  return chain_homology(hochschild_complex(m));
}

std::string to_string(MixedFlavor f) { return f == MixedFlavor::bB ? "bB" : "dD"; }

MixedFlavor parse_mixed_flavor(const std::string& text) {
  if (text == "bB") return MixedFlavor::bB;
  if (text == "dD") return MixedFlavor::dD;
  throw Error(ErrorKind::ParseError, "mixed complex flavor must be bB or dD, got " + text);
}

MixedComplexHomology mixed_complex_homology(const TruncatedDuplicialModule& m, MixedFlavor flavor,
                                            int weight_cutoff) {
  if (weight_cutoff < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative weight cutoff");
  require_supported(m.ring);
  if (!m.has_extra_degeneracy())
    throw Error(ErrorKind::NotDuplicial, "mixed complexes need the extra degeneracy");

  MixedComplexHomology out;
  out.flavor = flavor;
  out.weight_cutoff = weight_cutoff;
  out.stable_max = std::min(2 * weight_cutoff, m.n_max - 1);
  if (out.stable_max < 0) {
    out.assembled = true;
    return out;
  }

  Operators ops(m);
  DoldKan dk(ops);
  const Ring& ring = m.ring;
  const int W = weight_cutoff;
  // Total degrees 0..stable_max + 1 are enough for both flavors.
  const int top = out.stable_max + 1;

  auto columns = [&](int n) {
    std::vector<int> ws;
    for (int w = 0; w <= W && n - 2 * w >= 0; ++w) ws.push_back(w);
    return ws;
  };
  auto offsets = [&](int n, std::size_t& total) {
    std::vector<std::size_t> off;
    total = 0;
    for (int w : columns(n)) {
      off.push_back(total);
      total += dk.normalized_rank(n - 2 * w);
    }
    return off;
  };
  std::vector<std::size_t> tot_rank(static_cast<std::size_t>(top) + 1);
  std::vector<std::vector<std::size_t>> tot_off(static_cast<std::size_t>(top) + 1);
  for (int n = 0; n <= top; ++n)
    tot_off[static_cast<std::size_t>(n)] = offsets(n, tot_rank[static_cast<std::size_t>(n)]);
  auto rk = [&](int n) { return n < 0 ? std::size_t{0} : tot_rank[static_cast<std::size_t>(n)]; };
  auto off = [&](int n, int w) { return tot_off[static_cast<std::size_t>(n)][static_cast<std::size_t>(w)]; };

  // diff[n] : Tot_n -> Tot_{n-1} (bB) or Tot_n -> Tot_{n+1} (dD).
  std::vector<Matrix> diff;
  if (flavor == MixedFlavor::bB) {
    for (int n = 0; n <= top; ++n) {
      Matrix t(ring, rk(n - 1), rk(n));
      for (int w : columns(n)) {
        const int k = n - 2 * w;
        if (k >= 1) put_block(t, off(n - 1, w), off(n, w), on_normalized(dk, ops.b(k), k - 1, k));
        if (w >= 1) put_block(t, off(n - 1, w - 1), off(n, w),
                              on_normalized(dk, ops.connes_B(k), k + 1, k));
      }
      diff.push_back(std::move(t));
    }
    for (int n = 1; n <= top; ++n)
      if (!(diff[static_cast<std::size_t>(n - 1)] * diff[static_cast<std::size_t>(n)]).is_zero()) {
        out.failure = "(b+B)^2 != 0 from total degree " + std::to_string(n) +
                      ": bB + Bb = 1 - pi is nonzero on normalized chains";
        return out;
      }
    out.assembled = true;
    for (int n = 0; n <= out.stable_max; ++n)
      out.groups.push_back(homology_at(ring, rk(n), diff[static_cast<std::size_t>(n)],
                                       diff[static_cast<std::size_t>(n + 1)], n));
    return out;
  }

  for (int n = 0; n <= out.stable_max; ++n) {
    Matrix t(ring, rk(n + 1), rk(n));
    for (int w : columns(n)) {
      const int k = n - 2 * w;
      put_block(t, off(n + 1, w), off(n, w), on_normalized(dk, ops.d(k), k + 1, k));
      if (w + 1 <= W && k >= 1)
        put_block(t, off(n + 1, w + 1), off(n, w), on_normalized(dk, ops.gs_D(k), k - 1, k));
    }
    diff.push_back(std::move(t));
  }
  for (int n = 1; n <= out.stable_max; ++n)
    if (!(diff[static_cast<std::size_t>(n)] * diff[static_cast<std::size_t>(n - 1)]).is_zero()) {
      out.failure = "(d+D)^2 != 0 into total degree " + std::to_string(n + 1) +
                    ": dD + Dd = 1 - pi is nonzero on normalized chains";
      return out;
    }
  out.assembled = true;
  for (int n = 0; n <= out.stable_max; ++n) {
    Matrix incoming = n == 0 ? Matrix(ring, rk(0), 0) : diff[static_cast<std::size_t>(n - 1)];
    out.groups.push_back(homology_at(ring, rk(n), diff[static_cast<std::size_t>(n)], incoming, n));
  }
  return out;
}

}  // namespace paracyclic
