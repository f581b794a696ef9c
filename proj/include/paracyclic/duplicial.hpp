#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "paracyclic/matrix.hpp"

namespace paracyclic {

// Degrees 0..n_max of a simplicial, duplicial or paracyclic module of free
// modules. face[n][i] : M_n -> M_{n-1} (0 <= i <= n, n >= 1; face[0] is
// empty). degen[n][i] : M_n -> M_{n+1} for n < n_max, with i = n+1 the
// extra degeneracy when the module is duplicial. t[n] and t_inv[n] are
// optional explicit matrices; missing t[n] is derived for n < n_max.
struct TruncatedDuplicialModule {
  Ring ring = Ring::rationals();
  int n_max = 0;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Matrix>> face;
  std::vector<std::vector<Matrix>> degen;
  std::vector<std::optional<Matrix>> t;
  std::vector<std::optional<Matrix>> t_inv;

  // Zero structure maps of the right shapes; `duplicial` selects n+2 or n+1
  // degeneracies per degree.
  static TruncatedDuplicialModule zeros(Ring ring, int n_max, std::vector<std::size_t> ranks,
                                        bool duplicial = true);

  std::size_t rank(int n) const {
    return (n < 0 || n > n_max) ? 0 : ranks[static_cast<std::size_t>(n)];
  }
  // True when every degree below the top carries s_{n,n+1}.
  bool has_extra_degeneracy() const;
  // Throws ShapeMismatch on inconsistent sizes.
  void check_shapes() const;
};

// Restriction to degrees 0..n_max; t at the new top degree is kept (derived
// from the larger module when it was not stored).
TruncatedDuplicialModule truncate(const TruncatedDuplicialModule& m, int n_max);

// All operators of a module, memoized. Holds a reference: the module must
// outlive the Operators object. The memo table is a pure cache guarded by a
// mutex, so concurrent readers are safe.
class Operators {
 public:
  explicit Operators(const TruncatedDuplicialModule& m) : m_(m) {}
  Operators(const Operators&) = delete;
  Operators& operator=(const Operators&) = delete;

  const TruncatedDuplicialModule& module() const { return m_; }
  const Ring& ring() const { return m_.ring; }
  int n_max() const { return m_.n_max; }
  std::size_t rank(int n) const { return m_.rank(n); }

  Matrix id(int n) const;
  // Zero map M_from -> M_to (degrees outside 0..n_max have rank 0).
  Matrix zero(int to, int from) const;

  const Matrix& face(int n, int i) const;
  const Matrix& degen(int n, int i) const;

  const Matrix& b(int n) const;  // 0 <= n <= n_max; b_0 = 0
  const Matrix& d(int n) const;  // -1 <= n < n_max; d_{-1} = 0
  const Matrix& delta(int n) const;
  const Matrix& sigma(int n) const;
  bool has_t(int n) const;
  const Matrix& t(int n) const;  // TNotAvailable when neither stored nor derivable
  const Matrix& T(int n) const;
  const Matrix& kappa(int n) const;          // defining formula, n < n_max
  const Matrix& kappa_from_bd(int n) const;  // 1 - bd - db
  const Matrix& pi(int n) const;             // kappa^n (1 - b d)
  const Matrix& pi_defining(int n) const;    // needs n + 1 < n_max
  const Matrix& connes_B(int n) const;       // -1 <= n < n_max; B_{-1} = 0
  const Matrix& gs_D(int n) const;           // 0 <= n < n_max; D_0 = 0
  const Matrix& p(int n, int i) const;       // partial Dold-Puppe products
  const Matrix& p(int n) const { return p(n, 0); }
  const Matrix& phi(int n) const;            // -1 <= n < n_max; phi_{-1} = 0
  Matrix Pi(int n, int p, int q) const;

 private:
  using Key = std::tuple<int, int, int>;
  template <class F>
  const Matrix& memo(int op, int n, int i, F&& compute) const;
  void require(bool ok, const std::string& what, int n) const;

  const TruncatedDuplicialModule& m_;
  mutable std::mutex mutex_;
  mutable std::map<Key, Matrix> cache_;
};

// Free-function forms of the operators.
Matrix b_op(const TruncatedDuplicialModule& m, int n);
Matrix d_op(const TruncatedDuplicialModule& m, int n);
Matrix delta_op(const TruncatedDuplicialModule& m, int n);
Matrix sigma_op(const TruncatedDuplicialModule& m, int n);
Matrix T_op(const TruncatedDuplicialModule& m, int n);
Matrix karoubi(const TruncatedDuplicialModule& m, int n);
Matrix dwyer_kan(const TruncatedDuplicialModule& m, int n);
Matrix connes_B(const TruncatedDuplicialModule& m, int n);
Matrix gs_D(const TruncatedDuplicialModule& m, int n);
Matrix em_homotopy_phi(const TruncatedDuplicialModule& m, int n);
Matrix dold_puppe(const TruncatedDuplicialModule& m, int n, int i = 0);
Matrix pi_pq(const TruncatedDuplicialModule& m, int n, int p, int q);

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct IdentityResult {
  std::string identity;
  int degree = 0;
  CheckStatus status = CheckStatus::Pass;
  std::optional<Matrix> witness;  // lhs - rhs of the first failing instance
  bool probe = false;             // informational; never affects pass/fail
  std::string detail;
};

class IdentityReport {
 public:
  // Folds one instance into the (identity, degree) entry.
  void record(const std::string& identity, int degree, const Matrix& lhs, const Matrix& rhs,
              const std::string& instance = "", bool probe = false);
  void record_bool(const std::string& identity, int degree, bool ok, const std::string& detail,
                   bool probe = false);
  void skip(const std::string& identity, int degree, const std::string& reason,
            bool probe = false);
  void note(const std::string& identity, int degree, const std::string& detail);
  void append(const IdentityReport& other);

  // Entries sorted by identity name, then degree.
  std::vector<IdentityResult> sorted() const;
  const std::vector<IdentityResult>& entries() const { return entries_; }
  const IdentityResult* find(const std::string& identity, int degree) const;

  std::size_t failures() const;  // non-probe failures
  bool passed() const { return failures() == 0; }
  bool all_entries(const std::string& identity, CheckStatus status) const;

 private:
  IdentityResult& slot(const std::string& identity, int degree, bool probe);

  std::vector<IdentityResult> entries_;
  std::map<std::pair<std::string, int>, std::size_t> index_;
};

// Every instance of the defining relations with all degrees <= n_max; the
// instances needing degree n_max + 1 are reported as skipped.
IdentityReport validate_relations(const TruncatedDuplicialModule& m);

// Degeneracy word s_{n-1,i_1} ... s_{n-k,i_k} : M_{n-k} -> M_n for a
// strictly decreasing sequence with i_1 <= n-1.
Matrix degeneracy_word(const Operators& ops, int n, const std::vector<int>& seq);

}  // namespace paracyclic
