#include "paracyclic/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "paracyclic/constructions.hpp"
#include "paracyclic/dold_kan.hpp"
#include "paracyclic/error.hpp"
#include "paracyclic/homology.hpp"
#include "paracyclic/identities.hpp"
#include "paracyclic/serialize.hpp"

namespace paracyclic::cli {

namespace {

struct Options {
  std::string builtin;
  std::string input;
  std::string algebra;
  std::string ring;
  std::optional<int> max_degree;
  long u = 2;
  std::string format = "table";
  std::string output;
  // Subcommand specific.
  std::string op;
  std::optional<int> degree;
  std::optional<int> index;
  std::optional<int> weight;
  std::string mixed = "bB";
  std::string element;
};

constexpr int kDefaultMaxDegree = 4;

void add_source_options(CLI::App* sub, Options& o) {
  sub->add_option("--builtin", o.builtin, "built-in module name (see `build --list`), or duchain-file");
  sub->add_option("--input", o.input, "module JSON file (duchain JSON with --builtin duchain-file)");
  sub->add_option("--algebra", o.algebra, "algebra JSON file; builds its cyclic or twisted module");
  sub->add_option("--ring", o.ring, "coefficient ring: Z, Q or Z/m");
  sub->add_option("--max-degree", o.max_degree, "truncation degree N_max")->check(CLI::NonNegativeNumber);
  sub->add_option("--u", o.u, "scalar for scalar-twisted-u (default 2)");
  sub->add_option("--format", o.format, "table or structured")
      ->check(CLI::IsMember({"table", "structured"}));
  sub->add_option("--output", o.output, "write the result here instead of standard output");
}

Error malformed(const std::string& msg) { return Error(ErrorKind::ParseError, msg); }

TruncatedDuplicialModule load_module(const Options& o) {
  const int sources = !o.builtin.empty() + !o.algebra.empty() + (!o.input.empty() && o.builtin.empty());
  if (sources != 1)
    throw malformed("exactly one of --builtin, --input or --algebra is required");
  std::optional<Ring> ring;
  if (!o.ring.empty()) ring = Ring::parse(o.ring);

  auto fit_degree = [&](const TruncatedDuplicialModule& m) {
    if (!o.max_degree || *o.max_degree == m.n_max) return m;
    if (*o.max_degree > m.n_max)
      throw Error(ErrorKind::DegreeOutOfRange, "--max-degree " + std::to_string(*o.max_degree) +
                                                   " exceeds the input's n_max " + std::to_string(m.n_max));
    return truncate(m, *o.max_degree);
  };
  auto same_ring = [&](const Ring& file_ring) {
    if (ring && !(*ring == file_ring))
      throw malformed("--ring " + ring->name() + " differs from the file's ring " + file_ring.name());
  };

  if (o.builtin == "duchain-file") {
    if (o.input.empty()) throw malformed("--builtin duchain-file needs --input FILE");
    DuchainComplex v = duchain_from_json(read_json_file(o.input));
    same_ring(v.ring);
    v.validate();
    const int n = o.max_degree.value_or(v.n_max);
    if (n > v.n_max)
      throw Error(ErrorKind::DegreeOutOfRange, "--max-degree exceeds the duchain's n_max");
    return duchain_to_duplicial(v, n);
  }
  if (!o.builtin.empty()) {
    if (!o.input.empty()) throw malformed("--input is only used with --builtin duchain-file");
    const auto& names = builtin_names();
    if (std::find(names.begin(), names.end(), o.builtin) == names.end())
      throw malformed("unknown built-in module " + o.builtin);
    return builtin_module(o.builtin, ring.value_or(Ring::rationals()),
                          o.max_degree.value_or(kDefaultMaxDegree), o.u);
  }
  if (!o.algebra.empty()) {
    const Ring r = ring.value_or(Ring::rationals());
    AlgebraSpec a = algebra_from_json(r, read_json_file(o.algebra));
    const int n = o.max_degree.value_or(kDefaultMaxDegree);
    if (a.automorphism && !a.automorphism->is_identity()) return twisted_paracyclic_module(a, n, r);
    return algebra_cyclic_module(a, n, r);
  }
  TruncatedDuplicialModule m = module_from_json(read_json_file(o.input));
  same_ring(m.ring);
  return fit_degree(m);
}

// ---- text formatting ----

std::string format_matrix(const Matrix& m, const std::string& indent = "  ") {
  if (m.rows() == 0 || m.cols() == 0)
    return indent + "(" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " empty)\n";
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      width[c] = std::max(width[c], Ring::format_scalar(m(r, c)).size());
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += indent + "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::string s = Ring::format_scalar(m(r, c));
      out += (c ? " " : "") + std::string(width[c] - s.size(), ' ') + s;
    }
    out += "]\n";
  }
  return out;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s += std::string(w - s.size(), ' ');
  return s;
}

std::string module_summary(const TruncatedDuplicialModule& m) {
  std::ostringstream s;
  s << "ring " << m.ring.name() << ", n_max " << m.n_max << ", ranks";
  for (auto r : m.ranks) s << ' ' << r;
  s << ", " << (m.has_extra_degeneracy() ? "with" : "without") << " extra degeneracy\n";
  return s.str();
}

std::string report_table(const IdentityReport& rep) {
  std::ostringstream s;
  std::size_t pass = 0, fail = 0, skipped = 0, probes = 0;
  auto entries = rep.sorted();
  std::size_t name_w = 8;
  for (const auto& e : entries) name_w = std::max(name_w, e.identity.size());
  s << pad("status", 8) << pad("identity", name_w + 2) << "degree  detail\n";
  for (const auto& e : entries) {
    std::string status = to_string(e.status);
    if (e.probe) {
      status += "*";
      ++probes;
    } else if (e.status == CheckStatus::Pass) {
      ++pass;
    } else if (e.status == CheckStatus::Fail) {
      ++fail;
    } else {
      ++skipped;
    }
    s << pad(status, 8) << pad(e.identity, name_w + 2) << pad(std::to_string(e.degree), 8)
      << e.detail << "\n";
    if (e.status == CheckStatus::Fail && e.witness) s << "  witness (lhs - rhs):\n"
                                                      << format_matrix(*e.witness, "    ");
  }
  s << "summary: " << pass << " passed, " << fail << " failed, " << skipped << " skipped, " << probes
    << " probe entries (*, informational)\n";
  return s.str();
}

std::string homology_line(const std::vector<HomologyGroup>& hs, const Ring& ring) {
  std::string s;
  for (const auto& h : hs) s += (s.empty() ? "" : ", ") + to_string(h, ring.name());
  return "(" + s + ")";
}

// Relations first: derived results are never computed for an invalid module.
bool relations_hold(const TruncatedDuplicialModule& m, std::ostream& err) {
  IdentityReport rep = validate_relations(m);
  if (rep.passed()) return true;
  err << "module fails its defining relations; nothing derived is computed\n" << report_table(rep);
  return false;
}

// ---- subcommands ----

int cmd_build(const Options& o, std::ostream& out, std::ostream& err) {
  TruncatedDuplicialModule m = load_module(o);
  if (!relations_hold(m, err)) return kIdentityFailure;
  if (o.format == "structured") {
    out << to_json(m).dump(1) << "\n";
    return kOk;
  }
  out << module_summary(m);
  for (int n = 0; n <= m.n_max; ++n) {
    const auto un = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < m.face[un].size(); ++i)
      out << "face " << n << "," << i << ":\n" << format_matrix(m.face[un][i]);
    if (n < m.n_max)
      for (std::size_t i = 0; i < m.degen[un].size(); ++i)
        out << "degen " << n << "," << i << ":\n" << format_matrix(m.degen[un][i]);
    if (m.t[un]) out << "t " << n << ":\n" << format_matrix(*m.t[un]);
  }
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream&) {
  TruncatedDuplicialModule m = load_module(o);
  IdentityReport rep = check_identity_suite(m);
  std::optional<Classification> cls;
  if (rep.passed() && m.has_extra_degeneracy()) cls = classify_module(m);
  if (o.format == "structured") {
    Json j;
    j["module"] = {{"ring", m.ring.name()}, {"n_max", m.n_max}, {"ranks", m.ranks}};
    j["passed"] = rep.passed();
    j["failures"] = rep.failures();
    if (cls) j["class"] = to_string(cls->kind);
    j["report"] = to_json(rep);
    out << j.dump(1) << "\n";
  } else {
    out << module_summary(m) << report_table(rep);
    if (cls) out << "class: " << to_string(cls->kind) << "\n";
    out << (rep.passed() ? "PASS" : "FAIL") << "\n";
  }
  return rep.passed() ? kOk : kIdentityFailure;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.degree) throw malformed("decompose needs --degree");
  if (o.element.empty()) throw malformed("decompose needs --element");
  TruncatedDuplicialModule m = load_module(o);
  if (!relations_hold(m, err)) return kIdentityFailure;
  const int n = *o.degree;
  if (n < 0 || n > m.n_max)
    throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(n) + " outside 0.." +
                                                 std::to_string(m.n_max));
  Vector x = parse_vector(m.ring, o.element);
  if (x.size() != m.rank(n))
    throw malformed("element has " + std::to_string(x.size()) + " entries, M_" + std::to_string(n) +
                    " has rank " + std::to_string(m.rank(n)));
  DKDecomposition dec = dk_decompose(m, n, x);
  if (o.format == "structured") {
    out << to_json(dec).dump(1) << "\n";
    return kOk;
  }
  for (const auto& seq : dk_sequences(n)) {
    auto it = dec.components.find(seq);
    if (it == dec.components.end()) continue;
    bool zero = std::all_of(it->second.begin(), it->second.end(), [](const Scalar& s) { return s == 0; });
    if (zero) continue;
    out << pad(seq.empty() ? "N" : "s" + to_string(seq), 16) << "degree " << (n - static_cast<int>(seq.size()))
        << "  [";
    for (std::size_t i = 0; i < it->second.size(); ++i)
      out << (i ? " " : "") << Ring::format_scalar(it->second[i]);
    out << "]\n";
  }
  return kOk;
}

int cmd_homology(const Options& o, std::ostream& out, std::ostream& err) {
  TruncatedDuplicialModule m = load_module(o);
  if (!relations_hold(m, err)) return kIdentityFailure;
  const bool structured = o.format == "structured";
  if (o.weight) {
    MixedComplexHomology mx = mixed_complex_homology(m, parse_mixed_flavor(o.mixed), *o.weight);
    if (!mx.assembled) {
      err << "mixed complex not assembled: " << mx.failure << "\n";
      return kUnsupported;
    }
    if (structured) {
      Json j;
      j["flavor"] = to_string(mx.flavor);
      j["weight_cutoff"] = mx.weight_cutoff;
      j["stable_max"] = mx.stable_max;
      j["truncation_dependent"] = true;
      j["groups"] = to_json(mx.groups);
      out << j.dump(1) << "\n";
    } else {
      out << (mx.flavor == MixedFlavor::bB ? "homology of (N, b + B)" : "cohomology of (N, d + D)")
          << ", weights 0.." << mx.weight_cutoff << ", degrees 0.." << mx.stable_max
          << " (truncation dependent beyond)\n";
      for (const auto& h : mx.groups) out << "  H_" << h.degree << " = " << to_string(h, m.ring.name()) << "\n";
    }
    return kOk;
  }
  NormalizationComparison cmp = normalized_vs_full_homology(m);
  if (structured) {
    Json j;
    j["homology"] = to_json(cmp.full);
    j["normalized"] = to_json(cmp.normalized);
    j["agree"] = cmp.agree;
    j["homotopy_witness_passed"] = cmp.witness.passed();
    out << j.dump(1) << "\n";
  } else {
    out << "H(M, b)  = " << homology_line(cmp.full, m.ring) << "\n";
    out << "H(N, b)  = " << homology_line(cmp.normalized, m.ring) << "\n";
    out << "agree: " << (cmp.agree ? "yes" : "no")
        << ", b phi + phi b = p - 1: " << (cmp.witness.passed() ? "holds" : "FAILS") << "\n";
  }
  return cmp.agree && cmp.witness.passed() ? kOk : kIdentityFailure;
}

int cmd_dump(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.op.empty()) throw malformed("dump needs --op");
  if (!o.degree) throw malformed("dump needs --degree");
  TruncatedDuplicialModule m = load_module(o);
  if (!relations_hold(m, err)) return kIdentityFailure;
  Operators ops(m);
  const int n = *o.degree;
  const int i = o.index.value_or(0);
  Matrix result;
  const std::string& op = o.op;
  if (op == "b") result = ops.b(n);
  else if (op == "d") result = ops.d(n);
  else if (op == "kappa") result = ops.kappa(n);
  else if (op == "pi") result = ops.pi(n);
  else if (op == "p") result = ops.p(n, i);
  else if (op == "B") result = ops.connes_B(n);
  else if (op == "D") result = ops.gs_D(n);
  else if (op == "phi") result = ops.phi(n);
  else if (op == "t") result = ops.t(n);
  else if (op == "T") result = ops.T(n);
  else if (op == "sigma") result = ops.sigma(n);
  else if (op == "delta") result = ops.delta(n);
  else if (op == "face") result = ops.face(n, i);
  else if (op == "degen") result = ops.degen(n, i);
  else throw malformed("unknown operator " + op);
  if (o.format == "structured") out << Json({{"op", op}, {"degree", n}, {"matrix", to_json(result)}}).dump() << "\n";
  else out << format_matrix(result, "");
  return kOk;
}

int map_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::InvalidAlgebra:
    case ErrorKind::InvalidDuchain:
    case ErrorKind::NotIntegral:
      return kMalformedInput;
    case ErrorKind::UnsupportedRing:
    case ErrorKind::CompositeModulus:
    case ErrorKind::DegreeOutOfRange:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::TNotAvailable:
    case ErrorKind::NotDuplicial:
      return kUnsupported;
    case ErrorKind::InducedSquareNonzero:
    case ErrorKind::NotAComplex:
      return kIdentityFailure;
    default:
      return kInternal;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact operators, identities and homology of truncated duplicial modules", "paracyclic"};
  app.require_subcommand(1);

  bool list = false;
  auto* build = app.add_subcommand("build", "build a module and print its structure maps");
  add_source_options(build, o);
  build->add_flag("--list", list, "list built-in module names");
  auto* check = app.add_subcommand("check", "run the relation and identity suite");
  add_source_options(check, o);
  auto* decompose = app.add_subcommand("decompose", "Dold-Kan components of an element");
  add_source_options(decompose, o);
  decompose->add_option("--degree", o.degree, "degree of the element");
  decompose->add_option("--element", o.element, "coefficients, e.g. \"1,0,-1\"");
  auto* homology = app.add_subcommand("homology", "homology of (M,b), (N,b) or a mixed complex");
  add_source_options(homology, o);
  homology->add_option("--weight", o.weight, "weight cutoff W for the mixed complex")
      ->check(CLI::NonNegativeNumber);
  homology->add_option("--mixed", o.mixed, "bB or dD (with --weight)")->check(CLI::IsMember({"bB", "dD"}));
  auto* dump = app.add_subcommand("dump", "print one operator matrix");
  add_source_options(dump, o);
  dump->add_option("--op", o.op,
                   "b, d, kappa, pi, p, B, D, phi, t, T, sigma, delta, face or degen");
  dump->add_option("--degree", o.degree, "degree n");
  dump->add_option("--index", o.index, "index i for p, face and degen");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformedInput;
  }

  std::ostringstream buffer;
  std::ostream& sink = o.output.empty() ? out : buffer;
  int code = kInternal;
  try {
    if (build->parsed() && list) {
      for (const auto& name : builtin_names()) sink << name << "\n";
      sink << "duchain-file\n";
      code = kOk;
    } else if (build->parsed()) {
      code = cmd_build(o, sink, err);
    } else if (check->parsed()) {
      code = cmd_check(o, sink, err);
    } else if (decompose->parsed()) {
      code = cmd_decompose(o, sink, err);
    } else if (homology->parsed()) {
      code = cmd_homology(o, sink, err);
    } else if (dump->parsed()) {
      code = cmd_dump(o, sink, err);
    }
  } catch (const Error& e) {
    return map_error(e, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  if (!o.output.empty()) {
    std::ofstream f(o.output);
    if (!f) {
      err << "error: cannot write " << o.output << "\n";
      return kMalformedInput;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace paracyclic::cli
