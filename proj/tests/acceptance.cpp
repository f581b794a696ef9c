// One line per acceptance criterion; exits nonzero if any criterion fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "paracyclic/cli.hpp"
#include "paracyclic/constructions.hpp"
#include "paracyclic/homology.hpp"
#include "paracyclic/identities.hpp"
#include "paracyclic/linalg.hpp"
#include "paracyclic/serialize.hpp"

using namespace paracyclic;

namespace {

constexpr int kMaxDegree = 5;

const std::vector<std::string> kModules{"ground-ring", "simplex-0",           "simplex-1",
                                        "simplex-2",   "dual-numbers",        "dual-numbers-twisted",
                                        "scalar-twisted-u"};

std::vector<Ring> rings() { return {Ring::rationals(), Ring::integers(), Ring::integers_mod(7)}; }

struct Case {
  std::string label;
  TruncatedDuplicialModule module;
  IdentityReport relations;
  IdentityReport suite;
};

std::vector<Case>& cases() {
  static std::vector<Case> all = [] {
    std::vector<Case> out;
    for (const Ring& ring : rings())
      for (const auto& name : kModules) {
        TruncatedDuplicialModule m = builtin_module(name, ring, kMaxDegree, 2);
        out.push_back({name + " over " + ring.name(), m, validate_relations(m), check_identity_suite(m)});
      }
    return out;
  }();
  return all;
}

// Collects the reasons a criterion fails; an empty list is a pass.
struct Verdict {
  std::vector<std::string> problems;
  std::string summary;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

int failed_criteria = 0;

void report(int number, const std::string& title, const std::function<Verdict()>& body) {
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.problems.push_back(std::string("exception: ") + e.what());
  }
  const bool ok = v.problems.empty();
  if (!ok) ++failed_criteria;
  std::cout << "criterion " << number << " " << (ok ? "PASS" : "FAIL") << "  " << title;
  if (!v.summary.empty()) std::cout << " (" << v.summary << ")";
  std::cout << "\n";
  for (std::size_t i = 0; i < v.problems.size() && i < 8; ++i) std::cout << "    " << v.problems[i] << "\n";
  if (v.problems.size() > 8) std::cout << "    ... " << v.problems.size() - 8 << " more\n";
}

// Every named identity must pass at each degree in [lo, hi] and never fail.
void require_identity(Verdict& v, const Case& c, const std::string& name, int lo, int hi) {
  for (const auto& e : c.suite.entries())
    if (e.identity == name && e.status == CheckStatus::Fail)
      v.problems.push_back(c.label + ": " + name + " fails at degree " + std::to_string(e.degree));
  for (int n = lo; n <= hi; ++n) {
    const IdentityResult* e = c.suite.find(name, n);
    if (!e || e->status != CheckStatus::Pass)
      v.problems.push_back(c.label + ": " + name + " not verified at degree " + std::to_string(n));
  }
}

std::vector<std::size_t> free_ranks(const std::vector<HomologyGroup>& hs) {
  std::vector<std::size_t> out;
  for (const auto& h : hs) out.push_back(h.free_rank);
  return out;
}

bool all_free(const std::vector<HomologyGroup>& hs) {
  for (const auto& h : hs)
    if (!h.torsion.empty()) return false;
  return true;
}

Matrix one(const Ring& r, long v) { return Matrix::from_rows(r, {{v}}); }

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  report(1, "relation suite on all built-ins over Q, Z, Z/7 at N_max = 5", [] {
    Verdict v;
    std::size_t checked = 0;
    for (const Case& c : cases()) {
      for (const auto& e : c.relations.entries()) {
        if (e.status == CheckStatus::Fail)
          v.problems.push_back(c.label + ": " + e.identity + " fails at degree " + std::to_string(e.degree));
        if (e.status == CheckStatus::Pass) ++checked;
        // A skip is legitimate only where the truncation hides the next degree.
        if (e.status == CheckStatus::Skipped && e.degree < kMaxDegree - 1)
          v.problems.push_back(c.label + ": " + e.identity + " skipped at interior degree " +
                               std::to_string(e.degree));
      }
    }
    const Case& dual = cases()[4];
    v.require(dual.module.rank(5) == 64, "dual numbers degree 5 should have rank 64");
    v.summary = std::to_string(cases().size()) + " modules, " + std::to_string(checked) + " passing entries";
    return v;
  });

  report(2, "Karoubi operator formula and both factorizations, n < N_max", [] {
    Verdict v;
    for (const Case& c : cases()) {
      require_identity(v, c, "kappa-formula", 0, kMaxDegree - 1);
      require_identity(v, c, "kappa-factorization", 0, kMaxDegree - 1);
      // Recomputed here from b and d alone.
      Operators ops(c.module);
      for (int n = 0; n < kMaxDegree; ++n) {
        Matrix bd = ops.b(n + 1) * ops.d(n), db = ops.d(n - 1) * ops.b(n);
        Matrix one_bd = ops.id(n) - bd, one_db = ops.id(n) - db;
        const std::string at = c.label + " degree " + std::to_string(n);
        v.require(ops.kappa(n) == ops.id(n) - bd - db, at + ": 1 - bd - db");
        v.require(ops.kappa(n) == one_bd * one_db, at + ": (1-bd)(1-db)");
        v.require(ops.kappa(n) == one_db * one_bd, at + ": (1-db)(1-bd)");
      }
    }
    return v;
  });

  report(3, "Karoubi operator against faces, degeneracies and the decomposition, n <= 4", [] {
    Verdict v;
    for (const Case& c : cases()) {
      require_identity(v, c, "face-kappa", 1, 4);
      // kappa_{n+1} s_{n,i} needs degree n + 2.
      require_identity(v, c, "kappa-degeneracy", 0, kMaxDegree - 2);
      require_identity(v, c, "kappa-on-decomposition", 1, 4);
    }
    return v;
  });

  report(4, "Dwyer-Kan operator formulas and commutation with b and d", [] {
    Verdict v;
    for (const Case& c : cases()) {
      require_identity(v, c, "pi-formula", 0, kMaxDegree - 2);
      require_identity(v, c, "pi-factorization", 0, kMaxDegree - 1);
      require_identity(v, c, "pi-commutes-b", 1, kMaxDegree - 1);
      require_identity(v, c, "pi-commutes-d", 0, kMaxDegree - 2);
      Operators ops(c.module);
      for (int n = 0; n < kMaxDegree; ++n) {
        const auto e = static_cast<unsigned>(n);
        const std::string at = c.label + " degree " + std::to_string(n);
        Matrix one_bd = ops.id(n) - ops.b(n + 1) * ops.d(n), one_db = ops.id(n) - ops.d(n - 1) * ops.b(n);
        v.require(ops.pi(n) == one_bd.pow(e + 1) * one_db.pow(e), at + ": (1-bd)^{n+1}(1-db)^n");
        // The middle kappa acts on degree n + 1.
        if (n + 1 < kMaxDegree)
          v.require(ops.pi(n) == ops.kappa(n).pow(e) - ops.b(n + 1) * ops.kappa(n + 1).pow(e) * ops.d(n),
                    at + ": kappa^n - b kappa^n d");
      }
    }
    return v;
  });

  report(5, "pi = p T = T p, n < N_max", [] {
    Verdict v;
    for (const Case& c : cases()) require_identity(v, c, "pi-equals-p-T", 0, kMaxDegree - 1);
    return v;
  });

  report(6, "cyclic specialization on promoted simplicial modules", [] {
    Verdict v;
    for (const Case& c : cases()) {
      if (c.label.rfind("simplex-", 0) != 0) continue;
      Operators ops(c.module);
      DoldKan dk(ops);
      for (int n = 0; n <= kMaxDegree; ++n) v.require(ops.T(n).is_identity(), c.label + ": T_" + std::to_string(n));
      for (int n = 0; n < kMaxDegree; ++n) {
        v.require(ops.pi(n) == ops.p(n), c.label + ": pi = p at " + std::to_string(n));
        v.require(dk.restrict_to_normalized(ops.pi(n), n).is_identity(),
                  c.label + ": pi|N = 1 at " + std::to_string(n));
      }
    }
    return v;
  });

  report(7, "paracyclic equivalence in both directions", [] {
    Verdict v;
    const Ring Q = Ring::rationals();
    TruncatedDuplicialModule twist = builtin_module("scalar-twisted-u", Q, kMaxDegree, 2);
    Classification c = classify_module(twist);
    v.require(c.kind == ModuleClass::Paracyclic, "scalar twist should be paracyclic");
    for (const auto& d : c.degrees) {
      v.require(d.t_available && d.t_invertible, "t invertible at " + std::to_string(d.degree));
      if (d.kappa_N_invertible) v.require(*d.kappa_N_invertible, "kappa|N at " + std::to_string(d.degree));
      if (d.pi_N_invertible) v.require(*d.pi_N_invertible, "pi|N at " + std::to_string(d.degree));
    }
    DuchainComplex bad = DuchainComplex::zeros(Q, 3, {1, 1, 0, 0});
    bad.b[1] = one(Q, 1);
    bad.d[0] = one(Q, 1);
    TruncatedDuplicialModule m = duchain_to_duplicial(bad, 2);
    v.require(validate_relations(m).passed(), "reconstruction satisfies the relations");
    Operators ops(m);
    DoldKan dk(ops);
    v.require(dk.restrict_to_normalized(ops.kappa(0), 0).is_zero(), "kappa_0 = 0 on N_0");
    v.require(!is_invertible(ops.t(0)), "t_0 not invertible");
    v.require(classify_module(m).kind == ModuleClass::Duplicial, "b1 = d0 = 1 is not paracyclic");
    v.summary = "u = 2 paracyclic; b1 = d0 = 1 duplicial with t_0 = 0";
    return v;
  });

  report(8, "homotopies for p - 1, 1 - pi and the squares of B and D", [] {
    Verdict v;
    for (const Case& c : cases()) {
      require_identity(v, c, "em-homotopy", 0, kMaxDegree - 1);
      require_identity(v, c, "B-homotopy", 0, kMaxDegree - 1);
      require_identity(v, c, "B-squared", 0, kMaxDegree - 2);
      require_identity(v, c, "D-homotopy", 0, kMaxDegree - 2);
      require_identity(v, c, "D-squared", 2, kMaxDegree - 1);
      const IdentityResult* e = c.suite.find("D-homotopy", 1);
      v.require(e && !e->detail.empty(), c.label + ": D entries carry the analogy note");
    }
    v.summary = "D identities flagged: stated only by analogy with B";
    return v;
  });

  report(9, "Dold-Kan round trips (100 random elements per degree) and rank identity", [] {
    Verdict v;
    std::mt19937 rng(20261016);
    std::size_t trips = 0;
    for (const Case& c : cases()) {
      const TruncatedDuplicialModule& m = c.module;
      Operators ops(m);
      DoldKan dk(ops);
      for (int n = 0; n <= 4; ++n) {
        std::size_t total = 0;
        for (int k = 0; k <= n; ++k) {
          std::size_t binom = 1;
          for (int i = 1; i <= k; ++i) binom = binom * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
          total += binom * dk.normalized_rank(n - k);
        }
        v.require(total == m.rank(n), c.label + ": rank identity at " + std::to_string(n));
        for (int trial = 0; trial < 100; ++trial) {
          Vector x(m.rank(n));
          for (auto& e : x) e = m.ring.from_int(static_cast<long>(rng() % 11) - 5);
          DKDecomposition dec = dk_decompose(m, n, x);
          if (dk_reconstruct(m, dec) != x) {
            v.problems.push_back(c.label + ": round trip at degree " + std::to_string(n));
            break;
          }
          ++trips;
        }
      }
    }
    v.summary = std::to_string(trips) + " round trips";
    return v;
  });

  report(10, "reconstruction from the induced duchain is isomorphic to the module", [] {
    Verdict v;
    const Ring Q = Ring::rationals();
    for (const std::string name : {"simplex-1", "dual-numbers"}) {
      TruncatedDuplicialModule m = builtin_module(name, Q, kMaxDegree);
      Operators ops(m);
      DoldKan dk(ops);
      TruncatedDuplicialModule w = duchain_to_duplicial(induced_duchain(dk), 4);
      Operators wo(w);
      for (int n = 0; n <= 4; ++n) {
        const Matrix& phi = dk.coordinate_map(n);
        const std::string at = name + " degree " + std::to_string(n);
        v.require(dk.basis_map(n) * phi == ops.id(n), at + ": coordinate map invertible");
        for (int i = 0; n >= 1 && i <= n; ++i)
          v.require(dk.coordinate_map(n - 1) * ops.face(n, i) == wo.face(n, i) * phi, at + ": face");
        for (int i = 0; n < 4 && i <= n + 1; ++i)
          v.require(dk.coordinate_map(n + 1) * ops.degen(n, i) == wo.degen(n, i) * phi, at + ": degeneracy");
        v.require(wo.has_t(n) && phi * ops.t(n) == wo.t(n) * phi, at + ": t");
        if (n < 4) {
          v.require(dk.coordinate_map(n + 1) * ops.d(n) == wo.d(n) * phi, at + ": d");
        }
        if (n >= 1) v.require(dk.coordinate_map(n - 1) * ops.b(n) == wo.b(n) * phi, at + ": b");
      }
    }
    // t_1(x + s x_0) = -x + s(b_1 x + x_0) on the reconstruction of V_0 = V_1 = Q,
    // b_1 = 2, d = 0. Columns and rows are (x, x_0).
    DuchainComplex small = DuchainComplex::zeros(Q, 2, {1, 1, 0});
    small.b[1] = one(Q, 2);
    TruncatedDuplicialModule w = duchain_to_duplicial(small, 1);
    v.require(w.ranks == std::vector<std::size_t>{1, 2}, "block layout of M_1");
    Matrix expected = Matrix::from_rows(Q, {{-1, 0}, {2, 1}});
    v.require(Operators(w).t(1) == expected, "t_1 worked example as a matrix");
    for (const std::string name : {"simplex-1", "ground-ring"}) {
      IdentityReport r = check_identity_suite(builtin_module(name, Q, kMaxDegree));
      const IdentityResult* e = r.find("t1-worked-example", 1);
      v.require(e && e->status == CheckStatus::Pass, name + ": t1 worked example");
    }
    return v;
  });

  report(11, "inversion formulas on N(M) of scalar-twisted-u", [] {
    Verdict v;
    IdentityReport r = check_identity_suite(builtin_module("scalar-twisted-u", Ring::rationals(), kMaxDegree, 2));
    std::ostringstream table;
    for (int n = 0; n <= 4; ++n) {
      table << (n ? "; " : "") << "n=" << n;
      for (const std::string op : {"kappa", "pi"}) {
        const IdentityResult* printed = r.find(op + "-inverse-printed", n);
        const IdentityResult* corrected = r.find(op + "-inverse-corrected", n);
        if (!printed || !corrected || printed->status == CheckStatus::Skipped ||
            corrected->status == CheckStatus::Skipped) {
          v.problems.push_back(op + " inverse not decided at degree " + std::to_string(n));
          continue;
        }
        const bool p = printed->status == CheckStatus::Pass, c = corrected->status == CheckStatus::Pass;
        table << " " << op << ":" << (p && c ? "both" : p ? "printed" : c ? "corrected" : "neither");
        v.require(p || c, op + " inverse: no variant holds at degree " + std::to_string(n));
      }
    }
    v.summary = table.str();
    return v;
  });

  report(12, "homology examples and determinism", [] {
    Verdict v;
    const Ring Q = Ring::rationals(), Z = Ring::integers();
    auto s1 = chain_homology(hochschild_complex(builtin_module("simplex-1", Z, 4)));
    v.require(free_ranks(s1) == std::vector<std::size_t>{1, 0, 0, 0} && all_free(s1), "simplex-1 chains");
    DuchainComplex zz = DuchainComplex::zeros(Z, 5, {1, 1, 0, 0, 0, 0});
    auto rz = chain_homology(hochschild_complex(duchain_to_duplicial(zz, 4)));
    v.require(free_ranks(rz) == std::vector<std::size_t>{1, 1, 0, 0} && all_free(rz), "reconstruction of (Z, Z)");
    auto hq = hochschild_homology(AlgebraSpec::ground(), 3, Q);
    v.require(free_ranks(hq) == std::vector<std::size_t>{1, 0, 0, 0}, "HH(Q)");
    auto hd = hochschild_homology(AlgebraSpec::dual_numbers(), 1, Q);
    v.require(hd.size() == 2 && hd[0].free_rank == 2 && hd[1].free_rank == 1, "HH_0, HH_1 of the dual numbers");
    for (const Ring& ring : rings())
      for (const auto& name : kModules) {
        NormalizationComparison c = normalized_vs_full_homology(builtin_module(name, ring, 4));
        v.require(c.agree && c.euler_full == c.euler_normalized && c.witness.passed(),
                  name + " over " + ring.name() + ": normalized vs full");
      }
    auto mixed = [&] {
      return mixed_complex_homology(builtin_module("ground-ring", Q, kMaxDegree), MixedFlavor::bB, 2);
    };
    MixedComplexHomology mx = mixed();
    v.require(mx.assembled && mx.groups.size() >= 3 &&
                  free_ranks({mx.groups.begin(), mx.groups.begin() + 3}) == std::vector<std::size_t>{1, 0, 1},
              "ground ring (b, B), W = 2");
    MixedComplexHomology again = mixed();
    v.require(again.groups == mx.groups, "mixed homology is deterministic");
    std::ostringstream o1, o2, e;
    cli::run({"homology", "--builtin", "dual-numbers", "--max-degree", "3", "--format", "structured"}, o1, e);
    cli::run({"homology", "--builtin", "dual-numbers", "--max-degree", "3", "--format", "structured"}, o2, e);
    v.require(!o1.str().empty() && o1.str() == o2.str(), "structured homology output is deterministic");
    v.summary = "H(simplex-1) = " + to_string(s1[0], "Z") + ",0,0,0; mixed W=2: " + to_string(mx.groups[0], "Q") +
                "," + to_string(mx.groups[1], "Q") + "," + to_string(mx.groups[2], "Q");
    return v;
  });

  report(13, "corrupted structure matrix makes check exit 3 with a witness", [] {
    Verdict v;
    std::ostringstream out, err;
    const std::string path = std::string(TEST_DATA_DIR) + "/ground_ring_corrupted.json";
    int code = cli::run({"check", "--input", path, "--format", "structured"}, out, err);
    v.require(code == cli::kIdentityFailure, "exit code " + std::to_string(code));
    std::string failing;
    bool witness = false;
    try {
      Json j = Json::parse(out.str());
      for (const auto& e : j["report"])
        if (e["status"] == "fail") {
          if (failing.empty()) failing = e["identity"].get<std::string>();
          if (e.contains("witness") && !e["witness"].is_null()) witness = true;
        }
    } catch (const std::exception& ex) {
      v.problems.push_back(std::string("unreadable report: ") + ex.what());
    }
    v.require(!failing.empty(), "no named failing identity");
    v.require(witness, "no witness");
    v.summary = "first failure: " + failing;
    return v;
  });

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failed_criteria == 0 ? "all criteria pass" : std::to_string(failed_criteria) + " criteria fail")
            << " in " << std::fixed << std::setprecision(1) << secs << " s\n";
  return failed_criteria == 0 ? 0 : 1;
}
