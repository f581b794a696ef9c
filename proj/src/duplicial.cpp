#include "paracyclic/duplicial.hpp"

#include <algorithm>

namespace paracyclic {

TruncatedDuplicialModule TruncatedDuplicialModule::zeros(Ring ring, int n_max,
                                                         std::vector<std::size_t> ranks,
                                                         bool duplicial) {
  if (n_max < 0 || ranks.size() != static_cast<std::size_t>(n_max) + 1)
    throw Error(ErrorKind::ShapeMismatch, "ranks must list degrees 0..n_max");
  TruncatedDuplicialModule m;
  m.ring = ring;
  m.n_max = n_max;
  m.ranks = std::move(ranks);
  m.face.resize(static_cast<std::size_t>(n_max) + 1);
  m.degen.resize(static_cast<std::size_t>(n_max));
  m.t.resize(static_cast<std::size_t>(n_max) + 1);
  m.t_inv.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i <= n; ++i) m.face[n].push_back(Matrix(ring, m.rank(n - 1), m.rank(n)));
  for (int n = 0; n < n_max; ++n)
    for (int i = 0; i <= n + (duplicial ? 1 : 0); ++i)
      m.degen[n].push_back(Matrix(ring, m.rank(n + 1), m.rank(n)));
  return m;
}

bool TruncatedDuplicialModule::has_extra_degeneracy() const {
  for (int n = 0; n < n_max; ++n)
    if (degen[static_cast<std::size_t>(n)].size() != static_cast<std::size_t>(n) + 2) return false;
  return true;
}

void TruncatedDuplicialModule::check_shapes() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::ShapeMismatch, what); };
  if (n_max < 0) fail("negative n_max");
  const auto top = static_cast<std::size_t>(n_max);
  if (ranks.size() != top + 1) fail("ranks must list degrees 0..n_max");
  if (face.size() != top + 1) fail("face list must have n_max + 1 entries");
  if (degen.size() != top) fail("degeneracy list must have n_max entries");
  if (t.size() != top + 1 || t_inv.size() != top + 1) fail("t lists must have n_max + 1 entries");
  if (!face[0].empty()) fail("degree 0 has no faces");
  bool extra = has_extra_degeneracy();
  for (int n = 0; n <= n_max; ++n) {
    const auto un = static_cast<std::size_t>(n);
    auto shape_ok = [&](const Matrix& x, std::size_t r, std::size_t c) {
      return x.rows() == r && x.cols() == c && x.ring() == ring;
    };
    if (n >= 1) {
      if (face[un].size() != un + 1) fail("degree " + std::to_string(n) + " needs n+1 faces");
      for (std::size_t i = 0; i <= un; ++i)
        if (!shape_ok(face[un][i], rank(n - 1), rank(n)))
          fail("face[" + std::to_string(n) + "][" + std::to_string(i) + "] has the wrong shape");
    }
    if (n < n_max) {
      std::size_t want = un + (extra ? 2 : 1);
      if (degen[un].size() != want)
        fail("degree " + std::to_string(n) + " has " + std::to_string(degen[un].size()) +
             " degeneracies");
      for (std::size_t i = 0; i < want; ++i)
        if (!shape_ok(degen[un][i], rank(n + 1), rank(n)))
          fail("degen[" + std::to_string(n) + "][" + std::to_string(i) + "] has the wrong shape");
    }
    if (t[un] && !shape_ok(*t[un], rank(n), rank(n))) fail("t[" + std::to_string(n) + "] shape");
    if (t_inv[un] && !shape_ok(*t_inv[un], rank(n), rank(n)))
      fail("t_inv[" + std::to_string(n) + "] shape");
  }
}

TruncatedDuplicialModule truncate(const TruncatedDuplicialModule& m, int n_max) {
  if (n_max < 0 || n_max > m.n_max)
    throw Error(ErrorKind::DegreeOutOfRange, "cannot truncate to degree " + std::to_string(n_max));
  TruncatedDuplicialModule out;
  out.ring = m.ring;
  out.n_max = n_max;
  const auto keep = static_cast<std::size_t>(n_max);
  out.ranks.assign(m.ranks.begin(), m.ranks.begin() + static_cast<long>(keep) + 1);
  out.face.assign(m.face.begin(), m.face.begin() + static_cast<long>(keep) + 1);
  out.degen.assign(m.degen.begin(), m.degen.begin() + static_cast<long>(keep));
  out.t.assign(m.t.begin(), m.t.begin() + static_cast<long>(keep) + 1);
  out.t_inv.assign(m.t_inv.begin(), m.t_inv.begin() + static_cast<long>(keep) + 1);
  if (!out.t[keep] && n_max < m.n_max && m.has_extra_degeneracy()) {
    Operators ops(m);
    out.t[keep] = ops.t(n_max);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {
enum Op {
  kB, kD, kT, kTT, kKappa, kKappaBD, kPi, kPiDef, kConnes, kGS, kP, kPhi, kSigma
};
}

template <class F>
const Matrix& Operators::memo(int op, int n, int i, F&& compute) const {
  Key key{op, n, i};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  // Computed outside the lock: compute() recurses into memo().
  Matrix value = compute();
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.emplace(key, std::move(value)).first->second;
}

void Operators::require(bool ok, const std::string& what, int n) const {
  if (!ok)
    throw Error(ErrorKind::DegreeOutOfRange,
                what + " is not defined at degree " + std::to_string(n) + " (n_max = " +
                    std::to_string(m_.n_max) + ")");
}

Matrix Operators::id(int n) const { return Matrix::identity(m_.ring, rank(n)); }

Matrix Operators::zero(int to, int from) const { return Matrix(m_.ring, rank(to), rank(from)); }

const Matrix& Operators::face(int n, int i) const {
  if (n < 1 || n > m_.n_max || i < 0 || i > n)
    throw Error(ErrorKind::IndexOutOfRange,
                "face (" + std::to_string(n) + "," + std::to_string(i) + ") out of range");
  return m_.face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

const Matrix& Operators::degen(int n, int i) const {
  if (n < 0 || n >= m_.n_max || i < 0 ||
      static_cast<std::size_t>(i) >= m_.degen[static_cast<std::size_t>(n)].size()) {
    if (n >= 0 && n < m_.n_max && i == n + 1)
      throw Error(ErrorKind::NotDuplicial, "module has no extra degeneracy");
    throw Error(ErrorKind::IndexOutOfRange,
                "degeneracy (" + std::to_string(n) + "," + std::to_string(i) + ") out of range");
  }
  return m_.degen[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

const Matrix& Operators::b(int n) const {
  require(n >= 0 && n <= m_.n_max, "b", n);
  return memo(kB, n, 0, [&] {
    Matrix out = zero(n - 1, n);
    for (int i = 0; i <= n && n >= 1; ++i) {
      if (i % 2 == 0)
        out += face(n, i);
      else
        out -= face(n, i);
    }
    return out;
  });
}

const Matrix& Operators::d(int n) const {
  require(n >= -1 && n < m_.n_max, "d", n);
  return memo(kD, n, 0, [&] {
    Matrix out = zero(n + 1, n);
    for (int i = 0; i <= n + 1 && n >= 0; ++i) {
      if (i % 2 == 0)
        out += degen(n, i);
      else
        out -= degen(n, i);
    }
    return out;
  });
}

const Matrix& Operators::delta(int n) const { return face(n, 0); }

const Matrix& Operators::sigma(int n) const {
  require(n >= 0 && n < m_.n_max, "sigma", n);
  return memo(kSigma, n, 0, [&] {
    return n % 2 == 0 ? degen(n, n + 1) : -degen(n, n + 1);
  });
}

bool Operators::has_t(int n) const {
  if (n < 0 || n > m_.n_max) return false;
  if (m_.t[static_cast<std::size_t>(n)]) return true;
  return n < m_.n_max && m_.has_extra_degeneracy();
}

const Matrix& Operators::t(int n) const {
  if (n >= 0 && n <= m_.n_max && m_.t[static_cast<std::size_t>(n)])
    return *m_.t[static_cast<std::size_t>(n)];
  if (!has_t(n))
    throw Error(ErrorKind::TNotAvailable,
                "t is neither stored nor derivable at degree " + std::to_string(n));
  return memo(kT, n, 0, [&] { return face(n + 1, 0) * degen(n, n + 1); });
}

const Matrix& Operators::T(int n) const {
  const Matrix& tn = t(n);
  return memo(kTT, n, 0, [&] { return tn.pow(static_cast<unsigned>(n + 1)); });
}

const Matrix& Operators::kappa(int n) const {
  require(n >= 0 && n < m_.n_max, "kappa", n);
  return memo(kKappa, n, 0, [&] {
    Matrix out = face(n + 1, 0) * degen(n, n + 1);
    if (n > 0) out -= degen(n - 1, n) * face(n, 0);
    return n % 2 == 0 ? out : -out;
  });
}

const Matrix& Operators::kappa_from_bd(int n) const {
  require(n >= 0 && n < m_.n_max, "kappa", n);
  return memo(kKappaBD, n, 0, [&] { return id(n) - b(n + 1) * d(n) - d(n - 1) * b(n); });
}

const Matrix& Operators::pi(int n) const {
  require(n >= 0 && n < m_.n_max, "pi", n);
  return memo(kPi, n, 0, [&] {
    // kappa^n - b kappa^n d with the middle kappa moved past b, so only
    // degrees n and n+1 are needed.
    Matrix k = kappa(n).pow(static_cast<unsigned>(n));
    return k - k * b(n + 1) * d(n);
  });
}

const Matrix& Operators::pi_defining(int n) const {
  require(n >= 0 && n + 1 < m_.n_max, "pi (defining formula)", n);
  return memo(kPiDef, n, 0, [&] {
    Matrix out = face(n + 1, 0) * kappa(n + 1).pow(static_cast<unsigned>(n)) * degen(n, n + 1);
    return n % 2 == 0 ? out : -out;
  });
}

const Matrix& Operators::connes_B(int n) const {
  require(n >= -1 && n < m_.n_max, "B", n);
  return memo(kConnes, n, 0, [&] {
    if (n < 0) return zero(0, -1);
    Matrix sum = zero(n, n);
    Matrix power = id(n);
    for (int i = 0; i <= n; ++i) {
      sum += power;
      if (i < n) power = power * kappa(n);
    }
    return d(n) * sum;
  });
}

const Matrix& Operators::gs_D(int n) const {
  require(n >= 0 && (n == 0 || n < m_.n_max), "D", n);
  return memo(kGS, n, 0, [&] {
    if (n == 0) return zero(-1, 0);
    Matrix sum = zero(n, n);
    Matrix power = id(n);
    for (int i = 0; i < n; ++i) {
      sum += power;
      if (i + 1 < n) power = power * kappa(n);
    }
    return b(n) * sum;
  });
}

const Matrix& Operators::p(int n, int i) const {
  require(n >= 0 && n <= m_.n_max, "p", n);
  if (i < 0 || i > n)
    throw Error(ErrorKind::IndexOutOfRange, "p_{n,i} needs 0 <= i <= n");
  return memo(kP, n, i, [&] {
    if (i == n) return id(n);
    return (id(n) - degen(n - 1, i) * face(n, i + 1)) * p(n, i + 1);
  });
}

const Matrix& Operators::phi(int n) const {
  require(n >= -1 && n < m_.n_max, "phi", n);
  return memo(kPhi, n, 0, [&] {
    if (n < 0) return zero(0, -1);
    Matrix out = zero(n + 1, n);
    for (int i = 0; i <= n; ++i) {
      Matrix term = degen(n, i) * p(n, i);
      if (i % 2 == 0)
        out += term;
      else
        out -= term;
    }
    return out;
  });
}

Matrix Operators::Pi(int n, int p, int q) const {
  if (n < 1 || n > m_.n_max || p < 0 || p >= q || q > n)
    throw Error(ErrorKind::IndexOutOfRange, "Pi_{p,q} needs 0 <= p < q <= n <= n_max");
  Matrix out = degen(n - 1, p) * face(n, q);
  return (q - p) % 2 == 0 ? out : -out;
}

Matrix b_op(const TruncatedDuplicialModule& m, int n) { return Operators(m).b(n); }
Matrix d_op(const TruncatedDuplicialModule& m, int n) { return Operators(m).d(n); }
Matrix delta_op(const TruncatedDuplicialModule& m, int n) { return Operators(m).delta(n); }
Matrix sigma_op(const TruncatedDuplicialModule& m, int n) { return Operators(m).sigma(n); }
Matrix T_op(const TruncatedDuplicialModule& m, int n) { return Operators(m).T(n); }
Matrix karoubi(const TruncatedDuplicialModule& m, int n) { return Operators(m).kappa(n); }
Matrix dwyer_kan(const TruncatedDuplicialModule& m, int n) { return Operators(m).pi(n); }
Matrix connes_B(const TruncatedDuplicialModule& m, int n) { return Operators(m).connes_B(n); }
Matrix gs_D(const TruncatedDuplicialModule& m, int n) { return Operators(m).gs_D(n); }
Matrix em_homotopy_phi(const TruncatedDuplicialModule& m, int n) { return Operators(m).phi(n); }
Matrix dold_puppe(const TruncatedDuplicialModule& m, int n, int i) { return Operators(m).p(n, i); }
Matrix pi_pq(const TruncatedDuplicialModule& m, int n, int p, int q) {
  return Operators(m).Pi(n, p, q);
}

Matrix degeneracy_word(const Operators& ops, int n, const std::vector<int>& seq) {
  const int k = static_cast<int>(seq.size());
  Matrix out = ops.id(n - k);
  // Rightmost factor s_{n-k,i_k} acts first.
  for (int pos = k - 1; pos >= 0; --pos) {
    const int deg = n - 1 - pos;
    out = ops.degen(deg, seq[static_cast<std::size_t>(pos)]) * out;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

IdentityResult& IdentityReport::slot(const std::string& identity, int degree, bool probe) {
  auto key = std::make_pair(identity, degree);
  auto it = index_.find(key);
  if (it != index_.end()) return entries_[it->second];
  index_.emplace(key, entries_.size());
  IdentityResult r;
  r.identity = identity;
  r.degree = degree;
  r.probe = probe;
  entries_.push_back(std::move(r));
  return entries_.back();
}

void IdentityReport::record(const std::string& identity, int degree, const Matrix& lhs,
                            const Matrix& rhs, const std::string& instance, bool probe) {
  IdentityResult& r = slot(identity, degree, probe);
  if (r.status == CheckStatus::Skipped) r.status = CheckStatus::Pass;
  bool same_shape = lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols();
  if (same_shape && lhs == rhs) return;
  if (r.status == CheckStatus::Fail) return;  // keep the first witness
  r.status = CheckStatus::Fail;
  if (same_shape) {
    r.witness = lhs - rhs;
    r.detail = instance;
  } else {
    r.detail = instance + (instance.empty() ? "" : ": ") + "shape " + std::to_string(lhs.rows()) +
               "x" + std::to_string(lhs.cols()) + " vs " + std::to_string(rhs.rows()) + "x" +
               std::to_string(rhs.cols());
  }
}

void IdentityReport::record_bool(const std::string& identity, int degree, bool ok,
                                 const std::string& detail, bool probe) {
  IdentityResult& r = slot(identity, degree, probe);
  if (r.status == CheckStatus::Fail) return;
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  r.detail = detail;
}

void IdentityReport::skip(const std::string& identity, int degree, const std::string& reason,
                          bool probe) {
  IdentityResult& r = slot(identity, degree, probe);
  r.status = CheckStatus::Skipped;
  r.detail = reason;
}

void IdentityReport::note(const std::string& identity, int degree, const std::string& detail) {
  auto it = index_.find({identity, degree});
  if (it == index_.end()) return;
  IdentityResult& r = entries_[it->second];
  if (r.status != CheckStatus::Fail) r.detail = detail;
}

void IdentityReport::append(const IdentityReport& other) {
  for (const auto& e : other.entries_) {
    IdentityResult& r = slot(e.identity, e.degree, e.probe);
    r = e;
  }
}

std::vector<IdentityResult> IdentityReport::sorted() const {
  std::vector<IdentityResult> out = entries_;
  std::stable_sort(out.begin(), out.end(), [](const IdentityResult& a, const IdentityResult& b) {
    return std::tie(a.identity, a.degree) < std::tie(b.identity, b.degree);
  });
  return out;
}

const IdentityResult* IdentityReport::find(const std::string& identity, int degree) const {
  auto it = index_.find({identity, degree});
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::size_t IdentityReport::failures() const {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](const auto& e) {
    return !e.probe && e.status == CheckStatus::Fail;
  }));
}

bool IdentityReport::all_entries(const std::string& identity, CheckStatus status) const {
  bool any = false;
  for (const auto& e : entries_) {
    if (e.identity != identity) continue;
    any = true;
    if (e.status != status) return false;
  }
  return any;
}

// ---------------------------------------------------------------------------

IdentityReport validate_relations(const TruncatedDuplicialModule& m) {
  m.check_shapes();
  Operators ops(m);
  IdentityReport rep;
  const int N = m.n_max;
  const bool extra = m.has_extra_degeneracy();
  auto tag = [](const char* name, int a, int b) {
    return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };

  for (int n = 1; n <= N; ++n) {
    if (n == N) {
      rep.skip("face-face", n, "needs degree " + std::to_string(n + 1));
      continue;
    }
    for (int j = 0; j <= n; ++j)
      for (int k = j; k <= n; ++k)
        rep.record("face-face", n, ops.face(n, k) * ops.face(n + 1, j),
                   ops.face(n, j) * ops.face(n + 1, k + 1), tag("j,k=", j, k));
  }

  for (int n = 0; n <= N; ++n) {
    if (n == N) {
      rep.skip("face-degeneracy", n, "needs degree " + std::to_string(n + 1));
      continue;
    }
    const int kmax = extra ? n + 1 : n;
    for (int j = 0; j <= n + 1; ++j)
      for (int k = 0; k <= kmax; ++k) {
        const int diff = k - j;
        Matrix lhs = ops.face(n + 1, j) * ops.degen(n, k);
        if (diff == n + 1) {
          // This instance defines t; consistency with a stored t is below.
          continue;
        } else if (diff >= 1) {
          rep.record("face-degeneracy", n, lhs, ops.degen(n - 1, k - 1) * ops.face(n, j),
                     tag("j,k=", j, k));
        } else if (diff >= -1) {
          rep.record("face-degeneracy", n, lhs, ops.id(n), tag("j,k=", j, k));
        } else {
          rep.record("face-degeneracy", n, lhs, ops.degen(n - 1, k) * ops.face(n, j - 1),
                     tag("j,k=", j, k));
        }
      }
  }

  for (int n = 1; n <= N; ++n) {
    if (n == N) {
      rep.skip("degeneracy-degeneracy", n, "needs degree " + std::to_string(n + 1));
      continue;
    }
    const int kmax = extra ? n : n - 1;
    for (int j = 0; j <= kmax; ++j)
      for (int k = j; k <= kmax; ++k)
        rep.record("degeneracy-degeneracy", n, ops.degen(n, j) * ops.degen(n - 1, k),
                   ops.degen(n, k + 1) * ops.degen(n - 1, j), tag("j,k=", j, k));
  }

  if (!extra) return rep;

  for (int n = 0; n <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    if (m.t[un]) {
      if (n < N)
        rep.record("t-consistency", n, *m.t[un], ops.face(n + 1, 0) * ops.degen(n, n + 1));
      else
        rep.skip("t-consistency", n, "stored top-degree t cannot be compared");
    }
    if (m.t_inv[un] && ops.has_t(n)) {
      rep.record("t-inverse", n, ops.t(n) * *m.t_inv[un], ops.id(n), "t t^-1");
      rep.record("t-inverse", n, *m.t_inv[un] * ops.t(n), ops.id(n), "t^-1 t");
    }
  }

  for (int n = 1; n <= N; ++n) {
    if (!ops.has_t(n)) {
      rep.skip("face-t", n, "t not available at degree " + std::to_string(n));
      continue;
    }
    for (int i = 0; i < n; ++i)
      rep.record("face-t", n, ops.face(n, i) * ops.t(n), ops.t(n - 1) * ops.face(n, i + 1),
                 "i=" + std::to_string(i));
    rep.record("face-t", n, ops.face(n, n) * ops.t(n), ops.face(n, 0), "i=n");
  }

  for (int n = 0; n < N; ++n) {
    if (!ops.has_t(n + 1)) {
      rep.skip("t-degeneracy", n, "t not available at degree " + std::to_string(n + 1));
      continue;
    }
    rep.record("t-degeneracy", n, ops.t(n + 1) * ops.degen(n, 0), ops.degen(n, n + 1), "i=0");
    for (int i = 1; i <= n + 1; ++i)
      rep.record("t-degeneracy", n, ops.t(n + 1) * ops.degen(n, i),
                 ops.degen(n, i - 1) * ops.t(n), "i=" + std::to_string(i));
  }
  return rep;
}

}  // namespace paracyclic
