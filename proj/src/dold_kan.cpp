#include "paracyclic/dold_kan.hpp"

#include <algorithm>
#include <sstream>

#include "paracyclic/linalg.hpp"

namespace paracyclic {

namespace {

void combinations(int n, int k, int start, IndexSequence& cur, std::vector<IndexSequence>& out) {
  if (static_cast<int>(cur.size()) == k) {
    IndexSequence desc(cur.rbegin(), cur.rend());
    out.push_back(desc);
    return;
  }
  for (int v = start; v < n; ++v) {
    cur.push_back(v);
    combinations(n, k, v + 1, cur, out);
    cur.pop_back();
  }
}

template <class Map, class F>
const typename Map::mapped_type& cached(std::mutex& mu, Map& map, int key, F&& compute) {
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = map.find(key);
    if (it != map.end()) return it->second;
  }
  auto value = compute();
  std::lock_guard<std::mutex> lock(mu);
  return map.emplace(key, std::move(value)).first->second;
}

}  // namespace

std::vector<IndexSequence> dk_sequences(int n) {
  std::vector<IndexSequence> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<IndexSequence> level;
    IndexSequence cur;
    combinations(n, k, 0, cur, level);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

IndexSequence prepend_degeneracy(int a, const IndexSequence& seq) {
  IndexSequence out;
  for (int j : seq)
    if (j >= a) out.push_back(j + 1);
  out.push_back(a);
  for (int j : seq)
    if (j < a) out.push_back(j);
  return out;
}

std::string to_string(const IndexSequence& seq) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? "," : "") << seq[i];
  out << ")";
  return out.str();
}

// ---------------------------------------------------------------------------

DuchainComplex DuchainComplex::zeros(Ring ring, int n_max, std::vector<std::size_t> ranks) {
  if (n_max < 0 || ranks.size() != static_cast<std::size_t>(n_max) + 1)
    throw Error(ErrorKind::ShapeMismatch, "duchain ranks must list degrees 0..n_max");
  DuchainComplex v;
  v.ring = ring;
  v.n_max = n_max;
  v.ranks = std::move(ranks);
  for (int n = 0; n <= n_max; ++n) v.b.emplace_back(ring, v.rank(n - 1), v.rank(n));
  for (int n = 0; n < n_max; ++n) v.d.emplace_back(ring, v.rank(n + 1), v.rank(n));
  return v;
}

void DuchainComplex::validate() const {
  if (n_max < 0 || ranks.size() != static_cast<std::size_t>(n_max) + 1 ||
      b.size() != ranks.size() || d.size() != static_cast<std::size_t>(n_max))
    throw Error(ErrorKind::ShapeMismatch, "duchain lists have inconsistent lengths");
  for (int n = 0; n <= n_max; ++n) {
    const Matrix& bn = b[static_cast<std::size_t>(n)];
    if (bn.rows() != rank(n - 1) || bn.cols() != rank(n) || !(bn.ring() == ring))
      throw Error(ErrorKind::ShapeMismatch, "duchain b[" + std::to_string(n) + "] shape");
    if (n < n_max) {
      const Matrix& dn = d[static_cast<std::size_t>(n)];
      if (dn.rows() != rank(n + 1) || dn.cols() != rank(n) || !(dn.ring() == ring))
        throw Error(ErrorKind::ShapeMismatch, "duchain d[" + std::to_string(n) + "] shape");
    }
  }
  for (int n = 2; n <= n_max; ++n)
    if (!(b[static_cast<std::size_t>(n - 1)] * b[static_cast<std::size_t>(n)]).is_zero())
      throw Error(ErrorKind::InvalidDuchain, "b^2 != 0 at degree " + std::to_string(n));
  for (int n = 0; n + 1 < n_max; ++n)
    if (!(d[static_cast<std::size_t>(n + 1)] * d[static_cast<std::size_t>(n)]).is_zero())
      throw Error(ErrorKind::InvalidDuchain, "d^2 != 0 at degree " + std::to_string(n));
}

// ---------------------------------------------------------------------------

void DoldKan::build_normalization(int n) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (normalized_.count(n)) return;
  }
  const Matrix& p = ops_.p(n);
  Matrix normalized = kernel_matrix(ops_.id(n) - p);
  Matrix degenerate = kernel_matrix(p);
  Matrix coords = left_inverse(normalized);
  std::lock_guard<std::mutex> lock(mutex_);
  normalized_.emplace(n, std::move(normalized));
  degenerate_.emplace(n, std::move(degenerate));
  coords_.emplace(n, std::move(coords));
}

const Matrix& DoldKan::normalized_basis(int n) const {
  build_normalization(n);
  std::lock_guard<std::mutex> lock(mutex_);
  return normalized_.at(n);
}

const Matrix& DoldKan::degenerate_basis(int n) const {
  build_normalization(n);
  std::lock_guard<std::mutex> lock(mutex_);
  return degenerate_.at(n);
}

const Matrix& DoldKan::normalized_coords(int n) const {
  build_normalization(n);
  std::lock_guard<std::mutex> lock(mutex_);
  return coords_.at(n);
}

const std::vector<Matrix>& DoldKan::component_maps(int n) const {
  return cached(mutex_, components_, n, [&] {
    std::vector<IndexSequence> seqs = dk_sequences(n);
    std::map<IndexSequence, std::size_t> where;
    for (std::size_t s = 0; s < seqs.size(); ++s) where[seqs[s]] = s;
    std::vector<Matrix> out;
    for (const auto& seq : seqs)
      out.emplace_back(ops_.ring(), ops_.rank(n - static_cast<int>(seq.size())), ops_.rank(n));
    out[0] = ops_.p(n);
    if (n == 0) return out;
    // x = p_n x + sum_i s_{n-1,i-1} d_{n,i} p_{n,i} x, recursively.
    const std::vector<Matrix>& lower = component_maps(n - 1);
    std::vector<IndexSequence> lower_seqs = dk_sequences(n - 1);
    for (int i = 1; i <= n; ++i) {
      Matrix step = ops_.face(n, i) * ops_.p(n, i);
      for (std::size_t s = 0; s < lower_seqs.size(); ++s) {
        if (lower[s].is_zero()) continue;
        IndexSequence target = prepend_degeneracy(i - 1, lower_seqs[s]);
        out[where.at(target)] += lower[s] * step;
      }
    }
    return out;
  });
}

const Matrix& DoldKan::coordinate_map(int n) const {
  return cached(mutex_, coordinate_map_, n, [&] {
    std::vector<IndexSequence> seqs = dk_sequences(n);
    const std::vector<Matrix>& comps = component_maps(n);
    Matrix out(ops_.ring(), 0, ops_.rank(n));
    for (std::size_t s = 0; s < seqs.size(); ++s) {
      int m = n - static_cast<int>(seqs[s].size());
      out = vstack(out, normalized_coords(m) * comps[s]);
    }
    return out;
  });
}

const Matrix& DoldKan::basis_map(int n) const {
  return cached(mutex_, basis_map_, n, [&] {
    Matrix out(ops_.ring(), ops_.rank(n), 0);
    for (const auto& seq : dk_sequences(n)) {
      int m = n - static_cast<int>(seq.size());
      out = hstack(out, degeneracy_word(ops_, n, seq) * normalized_basis(m));
    }
    return out;
  });
}

Matrix DoldKan::restrict_to_normalized(const Matrix& op, int n) const {
  return normalized_coords(n) * op * normalized_basis(n);
}

NormalizationBases normalization(const TruncatedDuplicialModule& m, int n) {
  Operators ops(m);
  DoldKan dk(ops);
  if (n < 0 || n > m.n_max)
    throw Error(ErrorKind::DegreeOutOfRange, "normalization degree " + std::to_string(n));
  return {dk.normalized_basis(n), dk.degenerate_basis(n)};
}

DKDecomposition dk_decompose(const TruncatedDuplicialModule& m, int n, const Vector& x) {
  if (n < 0 || n > m.n_max)
    throw Error(ErrorKind::DegreeOutOfRange, "decomposition degree " + std::to_string(n));
  if (x.size() != m.rank(n))
    throw Error(ErrorKind::ShapeMismatch, "element length does not match rank");
  Operators ops(m);
  DoldKan dk(ops);
  DKDecomposition out;
  out.degree = n;
  std::vector<IndexSequence> seqs = dk_sequences(n);
  const std::vector<Matrix>& comps = dk.component_maps(n);
  for (std::size_t s = 0; s < seqs.size(); ++s) out.components[seqs[s]] = comps[s] * x;
  return out;
}

Vector dk_reconstruct(const TruncatedDuplicialModule& m, const DKDecomposition& dec) {
  const int n = dec.degree;
  if (n < 0 || n > m.n_max)
    throw Error(ErrorKind::DegreeOutOfRange, "decomposition degree " + std::to_string(n));
  Operators ops(m);
  Vector out(m.rank(n));
  for (const auto& [seq, comp] : dec.components) {
    const int k = static_cast<int>(seq.size());
    const int deg = n - k;
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (seq[i] < 0 || seq[i] > n - 1 - static_cast<int>(i) ||
          (i > 0 && seq[i] >= seq[i - 1]))
        throw Error(ErrorKind::IndexOutOfRange, "not a degree " + std::to_string(n) +
                                                    " index sequence: " + to_string(seq));
    if (comp.size() != m.rank(deg))
      throw Error(ErrorKind::ShapeMismatch, "component " + to_string(seq) + " has wrong length");
    for (int i = 1; i <= deg; ++i) {
      Vector image = ops.face(deg, i) * comp;
      if (std::any_of(image.begin(), image.end(), [](const Scalar& v) { return v != 0; }))
        throw Error(ErrorKind::NonNormalizedComponent,
                    "component " + to_string(seq) + " is not killed by face " + std::to_string(i));
    }
    Vector lifted = degeneracy_word(ops, n, seq) * comp;
    for (std::size_t r = 0; r < out.size(); ++r) out[r] = m.ring.add(out[r], lifted[r]);
  }
  return out;
}

DuchainComplex induced_duchain(const DoldKan& dk) {
  const Operators& ops = dk.ops();
  const TruncatedDuplicialModule& m = ops.module();
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= m.n_max; ++n) ranks.push_back(dk.normalized_rank(n));
  DuchainComplex v = DuchainComplex::zeros(m.ring, m.n_max, ranks);
  for (int n = 1; n <= m.n_max; ++n)
    v.b[static_cast<std::size_t>(n)] =
        dk.normalized_coords(n - 1) * ops.b(n) * dk.normalized_basis(n);
  if (m.has_extra_degeneracy())
    for (int n = 0; n < m.n_max; ++n)
      v.d[static_cast<std::size_t>(n)] =
          dk.normalized_coords(n + 1) * ops.p(n + 1) * ops.d(n) * dk.normalized_basis(n);
  for (int n = 2; n <= m.n_max; ++n)
    if (!(v.b[static_cast<std::size_t>(n - 1)] * v.b[static_cast<std::size_t>(n)]).is_zero())
      throw Error(ErrorKind::InducedSquareNonzero, "induced b^2 != 0 at degree " + std::to_string(n));
  for (int n = 0; n + 1 < m.n_max; ++n)
    if (!(v.d[static_cast<std::size_t>(n + 1)] * v.d[static_cast<std::size_t>(n)]).is_zero())
      throw Error(ErrorKind::InducedSquareNonzero, "induced d^2 != 0 at degree " + std::to_string(n));
  return v;
}

DuchainComplex induced_duchain(const TruncatedDuplicialModule& m) {
  Operators ops(m);
  DoldKan dk(ops);
  return induced_duchain(dk);
}

}  // namespace paracyclic
