#include "paracyclic/identities.hpp"

#include <algorithm>

#include "paracyclic/dold_kan.hpp"
#include "paracyclic/linalg.hpp"

namespace paracyclic {

namespace {

bool kernels_available(const Ring& r) {
  return r.kind() != Ring::Kind::IntegersMod || r.is_prime_field();
}

std::string idx(const char* name, int v) { return std::string(name) + "=" + std::to_string(v); }

std::string idx2(const char* a, int x, const char* b, int y) {
  return idx(a, x) + "," + idx(b, y);
}

Matrix signed_matrix(const Matrix& m, int sign) { return sign > 0 ? m : -m; }

int parity(int k) { return (k % 2 == 0) ? 1 : -1; }

// Power with a -1 exponent allowed (the inverse).
Matrix power_or_inverse(const Matrix& m, int e) {
  if (e >= 0) return m.pow(static_cast<unsigned>(e));
  return invert(m).pow(static_cast<unsigned>(-e));
}

class Suite {
 public:
  explicit Suite(const TruncatedDuplicialModule& m) : m_(m), ops_(m), dk_(ops_), N_(m.n_max) {}

  IdentityReport run() {
    rep_ = validate_relations(m_);
    simplicial();
    if (m_.has_extra_degeneracy()) {
      differentials();
      karoubi();
      dwyer_kan();
      homotopies();
      pi_and_T();
      decomposition();
      worked_example();
      equivalence();
    }
    return rep_;
  }

 private:
  void skip_top(const std::string& name, int n, int need) {
    rep_.skip(name, n, "needs degree " + std::to_string(need));
  }

  void simplicial() {
    for (int n = 2; n <= N_; ++n)
      rep_.record("b-squared", n, ops_.b(n - 1) * ops_.b(n), ops_.zero(n - 2, n));
    for (int n = 0; n <= N_; ++n) {
      const Matrix& p = ops_.p(n);
      rep_.record("p-idempotent", n, p * p, p);
      for (int i = 0; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
          rep_.record("face-kills-partial-p", n, ops_.face(n, k) * ops_.p(n, i),
                      ops_.zero(n - 1, n), idx2("i", i, "k", k));
      for (int k = 0; k < n; ++k)
        rep_.record("p-kills-degeneracies", n, p * ops_.degen(n - 1, k), ops_.zero(n, n - 1),
                    idx("k", k));
      if (n >= 1) rep_.record("b-commutes-p", n, ops_.b(n) * p, ops_.p(n - 1) * ops_.b(n));
      if (kernels_available(m_.ring)) {
        std::size_t rn = dk_.normalized_basis(n).cols(), rd = dk_.degenerate_basis(n).cols();
        rep_.record_bool("normalized-plus-degenerate-rank", n, rn + rd == m_.rank(n),
                         std::to_string(rn) + " + " + std::to_string(rd) + " vs " +
                             std::to_string(m_.rank(n)));
      }
    }
  }

  void differentials() {
    for (int n = 0; n < N_; ++n) {
      if (n + 1 < N_)
        rep_.record("d-squared", n, ops_.d(n + 1) * ops_.d(n), ops_.zero(n + 2, n));
      else
        skip_top("d-squared", n, n + 2);
      Matrix rhs = -ops_.d(n);
      for (int i = 0; i <= n; ++i) rhs += signed_matrix(ops_.degen(n, i), parity(i));
      rep_.record("sigma-rearrangement", n, ops_.sigma(n), rhs);
    }
    skip_top("sigma-rearrangement", N_, N_ + 1);
  }

  void karoubi() {
    for (int n = 0; n <= N_; ++n) {
      if (n == N_) {
        for (const char* name : {"kappa-formula", "kappa-factorization", "kappa-commutes-b",
                                 "face-kappa"})
          skip_top(name, n, n + 1);
        continue;
      }
      const Matrix& k = ops_.kappa(n);
      rep_.record("kappa-formula", n, k, ops_.kappa_from_bd(n));
      Matrix one_bd = ops_.id(n) - ops_.b(n + 1) * ops_.d(n);
      Matrix one_db = ops_.id(n) - ops_.d(n - 1) * ops_.b(n);
      rep_.record("kappa-factorization", n, one_bd * one_db, k, "(1-bd)(1-db)");
      rep_.record("kappa-factorization", n, one_db * one_bd, k, "(1-db)(1-bd)");
      if (n >= 1) {
        rep_.record("kappa-commutes-b", n, ops_.b(n) * k, ops_.kappa(n - 1) * ops_.b(n));
        rep_.record("face-kappa", n, ops_.face(n, 0) * k,
                    ops_.kappa(n - 1) * (ops_.face(n, 0) - ops_.face(n, 1)), "i=0");
        for (int i = 1; i < n; ++i)
          rep_.record("face-kappa", n, ops_.face(n, i) * k,
                      -(ops_.kappa(n - 1) * ops_.face(n, i + 1)), idx("i", i));
        rep_.record("face-kappa", n, ops_.face(n, n) * k, ops_.zero(n - 1, n), "i=n");
      }
      if (n + 1 < N_) {
        rep_.record("kappa-commutes-d", n, ops_.d(n) * k, ops_.kappa(n + 1) * ops_.d(n));
        const Matrix& k1 = ops_.kappa(n + 1);
        rep_.record("kappa-degeneracy", n, k1 * ops_.degen(n, 0), ops_.zero(n + 1, n), "i=0");
        for (int i = 1; i <= n; ++i)
          rep_.record("kappa-degeneracy", n, k1 * ops_.degen(n, i),
                      -(ops_.degen(n, i - 1) * k), idx("i", i));
        rep_.record("kappa-degeneracy", n, k1 * ops_.degen(n, n + 1),
                    (ops_.degen(n, n + 1) - ops_.degen(n, n)) * k, "i=n+1");
      } else {
        skip_top("kappa-commutes-d", n, n + 2);
        skip_top("kappa-degeneracy", n, n + 2);
      }
    }
  }

  void dwyer_kan() {
    for (int n = 0; n <= N_; ++n) {
      if (n == N_) {
        for (const char* name : {"pi-formula", "pi-factorization", "pi-commutes-b"})
          skip_top(name, n, n + 1);
        continue;
      }
      const Matrix& pi = ops_.pi(n);
      if (n + 1 < N_) {
        rep_.record("pi-formula", n, pi, ops_.pi_defining(n), "defining formula");
        const Matrix k1 = ops_.kappa(n + 1).pow(static_cast<unsigned>(n));
        rep_.record("pi-formula", n, pi,
                    ops_.kappa(n).pow(static_cast<unsigned>(n)) - ops_.b(n + 1) * k1 * ops_.d(n),
                    "kappa^n - b kappa^n d");
      } else
        skip_top("pi-formula", n, n + 2);
      Matrix one_bd = ops_.id(n) - ops_.b(n + 1) * ops_.d(n);
      Matrix one_db = ops_.id(n) - ops_.d(n - 1) * ops_.b(n);
      rep_.record("pi-factorization", n,
                  one_bd.pow(static_cast<unsigned>(n + 1)) * one_db.pow(static_cast<unsigned>(n)), pi);
      if (n >= 1) rep_.record("pi-commutes-b", n, ops_.b(n) * pi, ops_.pi(n - 1) * ops_.b(n));
      if (n + 1 < N_)
        rep_.record("pi-commutes-d", n, ops_.d(n) * pi, ops_.pi(n + 1) * ops_.d(n));
      else
        skip_top("pi-commutes-d", n, n + 2);
    }
  }

  void homotopies() {
    const std::string analogy =
        "stated only by analogy with the B case; verified here, not assumed";
    for (int n = 0; n <= N_; ++n) {
      if (n == N_) {
        for (const char* name : {"em-homotopy", "B-homotopy"}) skip_top(name, n, n + 1);
        skip_top("D-homotopy", n, n + 1);
        continue;
      }
      rep_.record("em-homotopy", n, ops_.b(n + 1) * ops_.phi(n) + ops_.phi(n - 1) * ops_.b(n),
                  ops_.p(n) - ops_.id(n));
      Matrix one_minus_pi = ops_.id(n) - ops_.pi(n);
      const Matrix& Bprev = n >= 1 ? ops_.connes_B(n - 1) : ops_.connes_B(-1);
      rep_.record("B-homotopy", n, ops_.b(n + 1) * ops_.connes_B(n) + Bprev * ops_.b(n),
                  one_minus_pi);
      if (n + 1 < N_) {
        rep_.record("B-squared", n, ops_.connes_B(n + 1) * ops_.connes_B(n), ops_.zero(n + 2, n));
        rep_.record("D-homotopy", n, ops_.d(n - 1) * ops_.gs_D(n) + ops_.gs_D(n + 1) * ops_.d(n),
                    one_minus_pi, analogy);
        rep_.note("D-homotopy", n, analogy);
      } else {
        skip_top("B-squared", n, n + 2);
        skip_top("D-homotopy", n, n + 2);
      }
      if (n >= 2) {
        rep_.record("D-squared", n, ops_.gs_D(n - 1) * ops_.gs_D(n), ops_.zero(n - 2, n), analogy);
        rep_.note("D-squared", n, analogy);
      }
    }
  }

  void pi_and_T() {
    for (int n = 0; n <= N_; ++n) {
      if (n < N_) {
        const Matrix& T = ops_.T(n);
        rep_.record("pi-equals-p-T", n, ops_.pi(n), ops_.p(n) * T, "pi = p T");
        rep_.record("pi-equals-p-T", n, ops_.pi(n), T * ops_.p(n), "pi = T p");
      } else {
        skip_top("pi-equals-p-T", n, n + 1);
      }
      if (ops_.has_t(n) && n >= 1)
        for (int i = 0; i <= n; ++i)
          rep_.record("T-commutes-faces", n, ops_.T(n - 1) * ops_.face(n, i),
                      ops_.face(n, i) * ops_.T(n), idx("i", i));
      if (n < N_) {
        if (ops_.has_t(n + 1))
          for (int i = 0; i <= n + 1; ++i)
            rep_.record("T-commutes-degeneracies", n, ops_.T(n + 1) * ops_.degen(n, i),
                        ops_.degen(n, i) * ops_.T(n), idx("i", i));
        else
          rep_.skip("T-commutes-degeneracies", n, "t not available at degree " + std::to_string(n + 1));
      }
      for (int p = 0; p <= n && n >= 1; ++p)
        for (int q = p + 1; q <= n; ++q) {
          Matrix chain = ops_.id(n);
          for (int j = p; j < q; ++j) chain = chain * ops_.Pi(n, j, j + 1);
          rep_.record("Pi-factorization", n, ops_.Pi(n, p, q), chain, idx2("p", p, "q", q));
          for (int r = 0; r <= n; ++r)
            for (int s = r + 1; s < p; ++s) {
              Matrix a = ops_.Pi(n, p, q), b = ops_.Pi(n, r, s);
              rep_.record("Pi-commutation", n, a * b, b * a,
                          idx2("p", p, "q", q) + "," + idx2("r", r, "s", s));
            }
        }
    }
  }

  void decomposition() {
    for (int n = 0; n < N_; ++n) {
      for (const auto& seq : dk_sequences(n)) {
        const int k = static_cast<int>(seq.size());
        const int m = n - k;
        const Matrix& pm = ops_.p(m);
        Matrix word = degeneracy_word(ops_, n, seq);
        const std::string tag = to_string(seq);
        if (k > 0) {
          Matrix lhs = ops_.kappa(n) * word * pm;
          Matrix rhs = ops_.zero(n, m);
          if (seq.back() > 0) {
            IndexSequence lowered = seq;
            for (int& v : lowered) --v;
            rhs = signed_matrix(degeneracy_word(ops_, n, lowered) * ops_.kappa(m) * pm, parity(k));
          }
          rep_.record("kappa-on-decomposition", n, lhs, rhs, tag);
        }
        rep_.record("T-on-decomposition", n, ops_.T(n) * word * pm, word * ops_.pi(m) * pm, tag);
        sigma_on_decomposition(n, seq, word, pm);
      }
    }
    for (const char* name : {"kappa-on-decomposition", "T-on-decomposition",
                             "sigma-on-decomposition"})
      skip_top(name, N_, N_ + 1);
  }

  // sigma_n(S_I x) for x normalized, with the sentinel at n + 1 (regular
  // entry) and at n (probe).
  void sigma_on_decomposition(int n, const IndexSequence& seq, const Matrix& word,
                              const Matrix& pm) {
    const int k = static_cast<int>(seq.size());
    const int m = n - k;
    Matrix lhs = ops_.sigma(n) * word * pm;
    Matrix rhs = signed_matrix(degeneracy_word(ops_, n + 1, seq) * ops_.d(m) * pm, -parity(k));
    Matrix top_term = ops_.zero(n + 1, m);
    for (int j = 0; j <= n; ++j) {
      if (std::find(seq.begin(), seq.end(), j) != seq.end()) continue;
      int larger = static_cast<int>(std::count_if(seq.begin(), seq.end(), [j](int i) { return i > j; }));
      IndexSequence with = seq;
      with.insert(with.begin() + larger, j);
      Matrix term = signed_matrix(degeneracy_word(ops_, n + 1, with) * pm, parity(j - larger));
      if (j == n)
        top_term = term;
      else
        rhs += term;
    }
    const std::string tag = to_string(seq);
    rep_.record("sigma-on-decomposition", n, lhs, rhs + top_term, tag);
    rep_.record("sigma-on-decomposition-printed-sentinel", n, lhs, rhs, tag, true);
  }

  void worked_example() {
    const std::string name = "t1-worked-example";
    if (N_ < 2 && !ops_.has_t(1)) {
      rep_.skip(name, 1, "needs t at degree 1");
      return;
    }
    if (N_ < 1) return;
    if (!(ops_.p(1) * ops_.d(0)).is_zero()) {
      rep_.skip(name, 1, "applies when the extra differential vanishes on N");
      return;
    }
    const Matrix& t1 = ops_.t(1);
    const Matrix& p1 = ops_.p(1);
    const Matrix& s00 = ops_.degen(0, 0);
    rep_.record(name, 1, t1 * p1, -p1 + s00 * ops_.b(1) * p1, "t1 x = -x + s b x");
    rep_.record(name, 1, t1 * s00, s00, "t1 s x0 = s x0");
  }

  void equivalence() {
    if (!kernels_available(m_.ring)) {
      rep_.skip("dwyer-kan-equivalence", 0, "kernels need a field or Z");
      return;
    }
    bool all_pi = true, all_kappa = true;
    for (int n = 0; n < N_; ++n) {
      Matrix K = dk_.restrict_to_normalized(ops_.kappa(n), n);
      Matrix P = dk_.restrict_to_normalized(ops_.pi(n), n);
      bool k_inv = is_invertible(K), p_inv = is_invertible(P);
      all_pi = all_pi && p_inv;
      all_kappa = all_kappa && k_inv;
      bool T_inv = is_invertible(ops_.T(n));
      auto yn = [](bool b) { return b ? std::string("yes") : std::string("no"); };
      rep_.record_bool("dwyer-kan-equivalence", n, T_inv == all_pi && all_pi == all_kappa,
                       "T invertible: " + yn(T_inv) + "; pi|N invertible up to n: " + yn(all_pi) +
                           "; kappa|N invertible up to n: " + yn(all_kappa));
      inversion_probes(n, K, P);
    }
    rep_.skip("dwyer-kan-equivalence", N_, "needs degree " + std::to_string(N_ + 1));
    try {
      induced_duchain(dk_);
      rep_.record_bool("induced-duchain-squares", 0, true, "b^N and d^N square to zero");
    } catch (const Error& e) {
      rep_.record_bool("induced-duchain-squares", 0, false, e.what());
    }
  }

  void inversion_probes(int n, const Matrix& K, const Matrix& P) {
    const char* names[] = {"kappa-inverse-printed", "kappa-inverse-corrected",
                           "pi-inverse-printed", "pi-inverse-corrected"};
    if (!is_invertible(K)) {
      for (const char* name : names) rep_.skip(name, n, "kappa is not invertible on N", true);
      return;
    }
    Matrix BD = dk_.restrict_to_normalized(ops_.b(n + 1) * ops_.d(n), n);
    Matrix DB = dk_.restrict_to_normalized(ops_.d(n - 1) * ops_.b(n), n);
    Matrix I = Matrix::identity(m_.ring, K.rows());
    Matrix K_inv = invert(K), P_inv = invert(P);
    auto attempt = [&](const char* name, auto&& compute, const Matrix& want) {
      try {
        rep_.record(name, n, compute(), want, "", true);
      } catch (const Error& e) {
        rep_.record_bool(name, n, false, e.what(), true);
      }
    };
    attempt(names[0], [&] { return P_inv * power_or_inverse(I + BD, n) * power_or_inverse(I + DB, n - 1); }, K_inv);
    attempt(names[1], [&] { return P_inv * power_or_inverse(I - BD, n) * power_or_inverse(I - DB, n - 1); }, K_inv);
    attempt(names[2], [&] { return K_inv.pow(static_cast<unsigned>(n + 1)) * (I + DB); }, P_inv);
    attempt(names[3], [&] { return K_inv.pow(static_cast<unsigned>(n + 1)) * (I - DB); }, P_inv);
  }

  const TruncatedDuplicialModule& m_;
  Operators ops_;
  DoldKan dk_;
  const int N_;
  IdentityReport rep_;
};

}  // namespace

IdentityReport check_identity_suite(const TruncatedDuplicialModule& m) {
  m.check_shapes();
  return Suite(m).run();
}

std::string to_string(ModuleClass c) {
  switch (c) {
    case ModuleClass::Duplicial: return "duplicial";
    case ModuleClass::Paracyclic: return "paracyclic";
    case ModuleClass::Cyclic: return "cyclic";
  }
  return "?";
}

Classification classify_module(const TruncatedDuplicialModule& m) {
  m.check_shapes();
  if (!m.has_extra_degeneracy())
    throw Error(ErrorKind::NotDuplicial, "classification needs the extra degeneracy");
  Operators ops(m);
  DoldKan dk(ops);
  Classification out;
  bool paracyclic = true, cyclic = true;
  for (int n = 0; n <= m.n_max; ++n) {
    DegreeClassification d;
    d.degree = n;
    d.t_available = ops.has_t(n);
    if (d.t_available) {
      d.t_invertible = is_invertible(ops.t(n));
      d.T_identity = ops.T(n).is_identity();
      paracyclic = paracyclic && d.t_invertible;
      cyclic = cyclic && d.T_identity;
    }
    if (n < m.n_max && kernels_available(m.ring)) {
      Matrix K = dk.restrict_to_normalized(ops.kappa(n), n);
      Matrix P = dk.restrict_to_normalized(ops.pi(n), n);
      d.kappa_N_invertible = is_invertible(K);
      d.pi_N_invertible = is_invertible(P);
      d.pi_N_identity = P.is_identity();
    }
    out.degrees.push_back(d);
  }
  out.kind = !paracyclic ? ModuleClass::Duplicial
                         : (cyclic ? ModuleClass::Cyclic : ModuleClass::Paracyclic);
  return out;
}

}  // namespace paracyclic
