#include "paracyclic/constructions.hpp"

#include <algorithm>
#include <map>

#include "paracyclic/index_category.hpp"
#include "paracyclic/linalg.hpp"

namespace paracyclic {

namespace {

// Row-major multi-index over `slots` factors of dimension k; slot 0 is most
// significant.
struct TensorSpace {
  std::size_t k;
  std::size_t slots;

  std::size_t size() const {
    std::size_t s = 1;
    for (std::size_t i = 0; i < slots; ++i) s *= k;
    return s;
  }
  std::vector<std::size_t> decode(std::size_t idx) const {
    std::vector<std::size_t> a(slots);
    for (std::size_t s = slots; s-- > 0;) {
      a[s] = idx % k;
      idx /= k;
    }
    return a;
  }
  std::size_t encode(const std::vector<std::size_t>& a) const {
    std::size_t idx = 0;
    for (auto v : a) idx = idx * k + v;
    return idx;
  }
};

AlgebraSpec normalized_in(const AlgebraSpec& a, const Ring& ring) {
  AlgebraSpec out = a;
  for (auto& v : out.unit) v = ring.normalize(v);
  for (auto& v : out.mult) v = ring.normalize(v);
  if (out.automorphism)
    out.automorphism = Matrix::from_entries(ring, a.automorphism->rows(), a.automorphism->cols(),
                                            a.automorphism->entries());
  return out;
}

bool is_identity_automorphism(const AlgebraSpec& a) {
  return !a.automorphism || a.automorphism->is_identity();
}

// Shared builder for untwisted and twisted tensor modules; sigma and its
// inverse act on the wrapped factor.
TruncatedDuplicialModule tensor_module(const AlgebraSpec& raw, int n_max, const Ring& ring,
                                       bool store_inverse) {
  if (n_max < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative n_max");
  AlgebraSpec a = normalized_in(raw, ring);
  a.validate(ring);
  const std::size_t k = a.dim;
  Matrix sigma = a.automorphism ? *a.automorphism : Matrix::identity(ring, k);
  Matrix sigma_inv;
  try {
    sigma_inv = invert(sigma);
  } catch (const Error& e) {
    throw Error(ErrorKind::NonInvertibleAutomorphism,
                std::string("automorphism is not invertible over ") + ring.name() + ": " + e.what());
  }

  std::vector<std::size_t> ranks;
  for (int n = 0; n <= n_max; ++n) ranks.push_back(TensorSpace{k, static_cast<std::size_t>(n) + 1}.size());
  TruncatedDuplicialModule m = TruncatedDuplicialModule::zeros(ring, n_max, ranks, true);

  for (int n = 0; n <= n_max; ++n) {
    TensorSpace src{k, static_cast<std::size_t>(n) + 1};
    TensorSpace down{k, static_cast<std::size_t>(n)};
    TensorSpace up{k, static_cast<std::size_t>(n) + 2};
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t col = 0; col < src.size(); ++col) {
      const std::vector<std::size_t> x = src.decode(col);
      // Faces.
      for (int i = 0; i < n && n >= 1; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
          const Scalar& c = a.structure(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i) + 1], l);
          if (c == 0) continue;
          std::vector<std::size_t> y;
          for (int s = 0; s < i; ++s) y.push_back(x[static_cast<std::size_t>(s)]);
          y.push_back(l);
          for (int s = i + 2; s <= n; ++s) y.push_back(x[static_cast<std::size_t>(s)]);
          m.face[un][static_cast<std::size_t>(i)].add_to(down.encode(y), col, c);
        }
      }
      if (n >= 1) {
        // sigma^{-1}(x_n) x_0 x_1 ... x_{n-1}
        for (std::size_t c = 0; c < k; ++c) {
          const Scalar& sc = sigma_inv(c, x[un]);
          if (sc == 0) continue;
          for (std::size_t l = 0; l < k; ++l) {
            const Scalar& mc = a.structure(c, x[0], l);
            if (mc == 0) continue;
            std::vector<std::size_t> y{l};
            for (int s = 1; s < n; ++s) y.push_back(x[static_cast<std::size_t>(s)]);
            m.face[un][un].add_to(down.encode(y), col, sc * mc);
          }
        }
      }
      if (n == n_max) continue;
      // Inner degeneracies: the unit after slot i.
      for (int i = 0; i <= n; ++i) {
        for (std::size_t u = 0; u < k; ++u) {
          if (a.unit[u] == 0) continue;
          std::vector<std::size_t> y(x.begin(), x.begin() + i + 1);
          y.push_back(u);
          y.insert(y.end(), x.begin() + i + 1, x.end());
          m.degen[un][static_cast<std::size_t>(i)].add_to(up.encode(y), col, a.unit[u]);
        }
      }
      // Extra degeneracy: 1 x_1 ... x_n sigma(x_0).
      for (std::size_t u = 0; u < k; ++u) {
        if (a.unit[u] == 0) continue;
        for (std::size_t c = 0; c < k; ++c) {
          const Scalar& sc = sigma(c, x[0]);
          if (sc == 0) continue;
          std::vector<std::size_t> y{u};
          y.insert(y.end(), x.begin() + 1, x.end());
          y.push_back(c);
          m.degen[un][un + 1].add_to(up.encode(y), col, a.unit[u] * sc);
        }
      }
    }
    // t = x_1 ... x_n sigma(x_0) and its inverse sigma^{-1}(x_n) x_0 ... x_{n-1}.
    Matrix t(ring, src.size(), src.size());
    Matrix t_inv(ring, src.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const std::vector<std::size_t> x = src.decode(col);
      for (std::size_t c = 0; c < k; ++c) {
        if (sigma(c, x[0]) != 0) {
          std::vector<std::size_t> y(x.begin() + 1, x.end());
          y.push_back(c);
          t.add_to(src.encode(y), col, sigma(c, x[0]));
        }
        if (sigma_inv(c, x[un]) != 0) {
          std::vector<std::size_t> y{c};
          y.insert(y.end(), x.begin(), x.end() - 1);
          t_inv.add_to(src.encode(y), col, sigma_inv(c, x[un]));
        }
      }
    }
    m.t[un] = t;
    if (store_inverse) m.t_inv[un] = t_inv;
  }
  return m;
}

// Delta epimorphism [n] -> [n-k] with repeat positions seq.
IndexMorphism epi_of(int n, const IndexSequence& seq) {
  std::vector<std::int64_t> values;
  for (int j = 0; j <= n; ++j) {
    int below = static_cast<int>(std::count_if(seq.begin(), seq.end(), [j](int i) { return i < j; }));
    values.push_back(j - below);
  }
  return IndexMorphism(n, n - static_cast<int>(seq.size()), values);
}

IndexSequence descending(std::vector<int> ascending) {
  std::reverse(ascending.begin(), ascending.end());
  return ascending;
}

// Places `block` (rows of V_{to}, cols of V_{from}) at the given sequence
// blocks, scaled by sign.
struct BlockLayout {
  std::vector<IndexSequence> seqs;
  std::map<IndexSequence, std::size_t> offset;
  std::size_t total = 0;
};

BlockLayout layout(const DuchainComplex& v, int n) {
  BlockLayout out;
  out.seqs = dk_sequences(n);
  for (const auto& s : out.seqs) {
    out.offset[s] = out.total;
    out.total += v.rank(n - static_cast<int>(s.size()));
  }
  return out;
}

void add_block(Matrix& target, std::size_t r0, std::size_t c0, const Matrix& block, int sign) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c)
      if (block(r, c) != 0) target.add_to(r0 + r, c0 + c, sign > 0 ? block(r, c) : Scalar(-block(r, c)));
}

TruncatedDuplicialModule reconstruct_raw(const DuchainComplex& v, int n_max) {
  const Ring& ring = v.ring;
  std::vector<BlockLayout> lay;
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= n_max; ++n) {
    lay.push_back(layout(v, n));
    ranks.push_back(lay.back().total);
  }
  TruncatedDuplicialModule m = TruncatedDuplicialModule::zeros(ring, n_max, ranks, true);

  for (int n = 0; n <= n_max; ++n) {
    const BlockLayout& here = lay[static_cast<std::size_t>(n)];
    for (const auto& seq : here.seqs) {
      const int k = static_cast<int>(seq.size());
      const int deg = n - k;
      const std::size_t dim = v.rank(deg);
      if (dim == 0) continue;
      const std::size_t col0 = here.offset.at(seq);
      const Matrix id = Matrix::identity(ring, dim);
      const IndexMorphism epi = epi_of(n, seq);

      // Faces: precompose the epimorphism with eps_i and factor.
      for (int i = 0; i <= n && n >= 1; ++i) {
        IndexMorphism g = compose(epi, generator(GeneratorKind::Face, n, i));
        EpiMonoData data = epi_mono_data(g);
        IndexSequence target = descending(data.repeats);
        const BlockLayout& below = lay[static_cast<std::size_t>(n - 1)];
        Matrix& f = m.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
        if (data.missing.empty()) {
          add_block(f, below.offset.at(target), col0, id, 1);
        } else if (data.missing.size() == 1 && data.missing[0] == 0) {
          if (v.rank(deg - 1) > 0)
            add_block(f, below.offset.at(target), col0, v.b[static_cast<std::size_t>(deg)], 1);
        }
        // A missing value c >= 1 is an inner face of V: zero.
      }
      if (n == n_max) continue;
      const BlockLayout& above = lay[static_cast<std::size_t>(n + 1)];
      for (int j = 0; j <= n; ++j) {
        IndexMorphism g = compose(epi, generator(GeneratorKind::Degeneracy, n, j));
        IndexSequence target = descending(epi_mono_data(g).repeats);
        add_block(m.degen[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)],
                  above.offset.at(target), col0, id, 1);
      }
      // s_{n,n+1} = (-1)^n sigma_n with
      // sigma_n(S_I x) = -(-1)^k S_I d x + sum_{j not in I, j <= n} (-1)^{j - l(j)} S_{I+j} x.
      Matrix& extra = m.degen[static_cast<std::size_t>(n)][static_cast<std::size_t>(n) + 1];
      const int outer = (n % 2 == 0) ? 1 : -1;
      if (v.rank(deg + 1) > 0)
        add_block(extra, above.offset.at(seq), col0, v.d[static_cast<std::size_t>(deg)],
                  -outer * ((k % 2 == 0) ? 1 : -1));
      for (int j = 0; j <= n; ++j) {
        if (std::find(seq.begin(), seq.end(), j) != seq.end()) continue;
        int larger = static_cast<int>(std::count_if(seq.begin(), seq.end(), [j](int i) { return i > j; }));
        IndexSequence target = seq;
        target.insert(target.begin() + larger, j);
        add_block(extra, above.offset.at(target), col0, id, outer * (((j - larger) % 2 == 0) ? 1 : -1));
      }
    }
  }
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------

void AlgebraSpec::validate(const Ring& ring) const {
  auto bad = [](const std::string& why) { throw Error(ErrorKind::InvalidAlgebra, why); };
  if (dim == 0) bad("dimension must be positive");
  if (unit.size() != dim) bad("unit has the wrong length");
  if (mult.size() != dim * dim * dim) bad("structure constants must be dim^3");
  if (automorphism && (automorphism->rows() != dim || automorphism->cols() != dim))
    bad("automorphism must be dim x dim");
  auto N = [&](const Scalar& v) { return ring.normalize(v); };
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t l = 0; l < dim; ++l) {
      Scalar left = 0, right = 0;
      for (std::size_t u = 0; u < dim; ++u) {
        left += unit[u] * structure(u, j, l);
        right += unit[u] * structure(j, u, l);
      }
      Scalar want = (j == l) ? 1 : 0;
      if (N(left) != N(want) || N(right) != N(want))
        bad("unit is not a two-sided identity on e_" + std::to_string(j));
    }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t l = 0; l < dim; ++l)
        for (std::size_t c = 0; c < dim; ++c) {
          Scalar lhs = 0, rhs = 0;
          for (std::size_t a = 0; a < dim; ++a) {
            lhs += structure(i, j, a) * structure(a, l, c);
            rhs += structure(j, l, a) * structure(i, a, c);
          }
          if (N(lhs) != N(rhs))
            bad("product is not associative on (" + std::to_string(i) + "," + std::to_string(j) +
                "," + std::to_string(l) + ")");
        }
  if (!automorphism) return;
  const Matrix& s = *automorphism;
  for (std::size_t c = 0; c < dim; ++c) {
    Scalar image = 0;
    for (std::size_t u = 0; u < dim; ++u) image += s(c, u) * unit[u];
    if (N(image) != N(unit[c])) bad("automorphism does not fix the unit");
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t c = 0; c < dim; ++c) {
        Scalar lhs = 0, rhs = 0;
        for (std::size_t a = 0; a < dim; ++a) lhs += structure(i, j, a) * s(c, a);
        for (std::size_t p = 0; p < dim; ++p)
          for (std::size_t q = 0; q < dim; ++q) rhs += s(p, i) * s(q, j) * structure(p, q, c);
        if (N(lhs) != N(rhs)) bad("automorphism is not multiplicative");
      }
}

AlgebraSpec AlgebraSpec::ground() {
  AlgebraSpec a;
  a.dim = 1;
  a.unit = {1};
  a.mult = {1};
  return a;
}

AlgebraSpec AlgebraSpec::dual_numbers(bool twisted) {
  AlgebraSpec a;
  a.dim = 2;
  a.unit = {1, 0};
  // 1*1 = 1, 1*x = x, x*1 = x, x*x = 0
  a.mult = {1, 0, 0, 1, 0, 1, 0, 0};
  if (twisted) a.automorphism = Matrix::from_rows(Ring::rationals(), {{1, 0}, {0, -1}});
  return a;
}

TruncatedDuplicialModule simplex_chains(int k, int n_max, const Ring& ring) {
  if (k < 0 || n_max < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative simplex parameters");
  std::vector<std::vector<IndexMorphism>> basis;
  std::vector<std::map<std::vector<std::int64_t>, std::size_t>> where;
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= n_max; ++n) {
    basis.push_back(enumerate_delta(n, k));
    where.emplace_back();
    for (std::size_t idx = 0; idx < basis.back().size(); ++idx)
      where.back()[basis.back()[idx].values()] = idx;
    ranks.push_back(basis.back().size());
  }
  TruncatedDuplicialModule m = TruncatedDuplicialModule::zeros(ring, n_max, ranks, false);
  const Scalar one = ring.from_int(1);
  for (int n = 0; n <= n_max; ++n) {
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t col = 0; col < basis[un].size(); ++col) {
      const IndexMorphism& f = basis[un][col];
      for (int i = 0; i <= n && n >= 1; ++i) {
        IndexMorphism g = compose(f, generator(GeneratorKind::Face, n, i));
        m.face[un][static_cast<std::size_t>(i)].set(where[un - 1].at(g.values()), col, one);
      }
      if (n == n_max) continue;
      for (int i = 0; i <= n; ++i) {
        IndexMorphism g = compose(f, generator(GeneratorKind::Degeneracy, n, i));
        m.degen[un][static_cast<std::size_t>(i)].set(where[un + 1].at(g.values()), col, one);
      }
    }
  }
  return m;
}

TruncatedDuplicialModule promote_simplicial(const TruncatedDuplicialModule& input, int n_max) {
  if (n_max < 0 || n_max > input.n_max)
    throw Error(ErrorKind::DegreeOutOfRange, "promotion degree exceeds the module");
  const int build = std::min(n_max + 1, input.n_max);
  TruncatedDuplicialModule s = truncate(input, build);
  // Only the simplicial part is used.
  for (int n = 0; n < s.n_max; ++n) s.degen[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
  for (auto& t : s.t) t.reset();
  for (auto& t : s.t_inv) t.reset();
  IdentityReport rel = validate_relations(s);
  if (!rel.passed())
    throw Error(ErrorKind::NotDuplicial, "simplicial relations fail; cannot promote");

  Operators ops(s);
  DoldKan dk(ops);
  DuchainComplex v = induced_duchain(dk);
  TruncatedDuplicialModule g = reconstruct_raw(v, build);
  TruncatedDuplicialModule out = TruncatedDuplicialModule::zeros(s.ring, build, s.ranks, true);
  for (int n = 0; n <= build; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const Matrix& phi = dk.coordinate_map(n);
    for (int i = 0; i <= n && n >= 1; ++i)
      out.face[un][static_cast<std::size_t>(i)] =
          dk.basis_map(n - 1) * g.face[un][static_cast<std::size_t>(i)] * phi;
    if (n == build) continue;
    for (int i = 0; i <= n + 1; ++i)
      out.degen[un][static_cast<std::size_t>(i)] =
          dk.basis_map(n + 1) * g.degen[un][static_cast<std::size_t>(i)] * phi;
  }
  return truncate(out, n_max);
}

TruncatedDuplicialModule algebra_cyclic_module(const AlgebraSpec& a, int n_max, const Ring& ring) {
  if (!is_identity_automorphism(a))
    throw Error(ErrorKind::InvalidAlgebra,
                "the cyclic module of an algebra takes no automorphism; use the twisted builder");
  AlgebraSpec plain = a;
  plain.automorphism.reset();
  return tensor_module(plain, n_max, ring, true);
}

TruncatedDuplicialModule twisted_paracyclic_module(const AlgebraSpec& a, int n_max,
                                                   const Ring& ring) {
  if (!a.automorphism) throw Error(ErrorKind::InvalidAlgebra, "twisted module needs an automorphism");
  return tensor_module(a, n_max, ring, true);
}

TruncatedDuplicialModule duchain_to_duplicial(const DuchainComplex& v, int n_max) {
  v.validate();
  if (n_max < 0 || n_max > v.n_max)
    throw Error(ErrorKind::DegreeOutOfRange,
                "reconstruction degree " + std::to_string(n_max) + " exceeds the duchain");
  const int build = std::min(n_max + 1, v.n_max);
  return truncate(reconstruct_raw(v, build), n_max);
}

DuchainComplex scalar_twist_duchain(const Ring& ring, const Scalar& u, int n_max) {
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n_max) + 1, 0);
  ranks[0] = 1;
  if (n_max >= 1) ranks[1] = 1;
  DuchainComplex v = DuchainComplex::zeros(ring, n_max, ranks);
  if (n_max >= 1) {
    v.b[1].set(0, 0, ring.from_int(1));
    v.d[0].set(0, 0, ring.normalize(Scalar(1) - u));
  }
  return v;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"ground-ring", "simplex-0",   "simplex-1",
                                              "simplex-2",   "dual-numbers", "dual-numbers-twisted",
                                              "scalar-twisted-u"};
  return names;
}

TruncatedDuplicialModule builtin_module(const std::string& name, const Ring& ring, int n_max,
                                        long u) {
  if (n_max < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative max degree");
  if (name == "ground-ring") return algebra_cyclic_module(AlgebraSpec::ground(), n_max, ring);
  if (name.rfind("simplex-", 0) == 0) {
    int k = std::stoi(name.substr(8));
    if (k < 0 || k > 2) throw Error(ErrorKind::ParseError, "unknown built-in " + name);
    return promote_simplicial(simplex_chains(k, n_max + 1, ring), n_max);
  }
  if (name == "dual-numbers") return algebra_cyclic_module(AlgebraSpec::dual_numbers(), n_max, ring);
  if (name == "dual-numbers-twisted")
    return twisted_paracyclic_module(AlgebraSpec::dual_numbers(true), n_max, ring);
  if (name == "scalar-twisted-u")
    return duchain_to_duplicial(scalar_twist_duchain(ring, Scalar(u), n_max + 1), n_max);
  throw Error(ErrorKind::ParseError, "unknown built-in module '" + name + "'");
}

}  // namespace paracyclic
