#include "paracyclic/serialize.hpp"

#include <fstream>
#include <sstream>

#include "paracyclic/error.hpp"

namespace paracyclic {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  return v.get<int>();
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::vector<std::size_t> ranks_from_json(const Json& j, std::size_t count, const std::string& where) {
  array_at(j, where);
  if (j.size() != count)
    fail(where, "expected " + std::to_string(count) + " ranks, got " + std::to_string(j.size()));
  std::vector<std::size_t> out;
  for (const auto& r : j) {
    if (!r.is_number_integer() || r.get<long>() < 0) fail(where, "ranks must be non-negative integers");
    out.push_back(r.get<std::size_t>());
  }
  return out;
}

using Shape = std::pair<std::size_t, std::size_t>;

Matrix matrix_at(const Ring& ring, const Json& j, Shape shape, const std::string& where) {
  try {
    return matrix_from_json(ring, j, shape);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

}  // namespace

Json to_json(const Ring& r) { return r.name(); }

Ring ring_from_json(const Json& j) {
  if (!j.is_string()) fail("ring", "expected \"Z\", \"Q\" or \"Z/m\"");
  return Ring::parse(j.get<std::string>());
}

Json to_json(const Scalar& s) { return Ring::format_scalar(s); }

Scalar scalar_from_json(const Ring& ring, const Json& j) {
  if (j.is_number_integer()) return ring.from_int(j.get<long>());
  if (j.is_string()) return ring.parse_scalar(j.get<std::string>());
  fail("scalar", "expected an integer or a string like \"-2/3\", got " + j.dump());
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Ring& ring, const Json& j, std::optional<Shape> shape) {
  array_at(j, "matrix");
  const std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? (shape ? shape->second : 0) : 0;
  if (rows > 0) {
    array_at(j[0], "matrix row 0");
    cols = j[0].size();
  }
  if (shape && (shape->first != rows || shape->second != cols)) {
    // An empty list stands for any matrix with no entries; zero columns may
    // also be written as a list of empty rows.
    if (rows == 0 && shape->first * shape->second == 0)
      return Matrix(ring, shape->first, shape->second);
    fail("matrix", "expected shape " + std::to_string(shape->first) + "x" +
                       std::to_string(shape->second) + ", got " + std::to_string(rows) + "x" +
                       std::to_string(cols));
  }
  Matrix m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = array_at(j[r], "matrix row " + std::to_string(r));
    if (row.size() != cols) fail("matrix row " + std::to_string(r), "ragged row");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, scalar_from_json(ring, row[c]));
  }
  return m;
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

Vector vector_from_json(const Ring& ring, const Json& j) {
  array_at(j, "vector");
  Vector v;
  for (const auto& e : j) v.push_back(scalar_from_json(ring, e));
  return v;
}

Vector parse_vector(const Ring& ring, const std::string& text) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail("vector", "malformed JSON array");
    return vector_from_json(ring, j);
  }
  Vector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) fail("vector", "empty entry");
    v.push_back(ring.parse_scalar(item.substr(b, e - b + 1)));
  }
  return v;
}

Json to_json(const TruncatedDuplicialModule& m) {
  Json j;
  j["ring"] = to_json(m.ring);
  j["n_max"] = m.n_max;
  j["ranks"] = m.ranks;
  Json faces = Json::array(), degens = Json::array(), ts = Json::array(), tinvs = Json::array();
  bool any_tinv = false;
  for (int n = 0; n <= m.n_max; ++n) {
    const auto un = static_cast<std::size_t>(n);
    Json f = Json::array();
    for (const auto& mat : m.face[un]) f.push_back(to_json(mat));
    faces.push_back(std::move(f));
    if (n < m.n_max) {
      Json s = Json::array();
      for (const auto& mat : m.degen[un]) s.push_back(to_json(mat));
      degens.push_back(std::move(s));
    }
    ts.push_back(m.t[un] ? to_json(*m.t[un]) : Json(nullptr));
    tinvs.push_back(m.t_inv[un] ? to_json(*m.t_inv[un]) : Json(nullptr));
    any_tinv = any_tinv || m.t_inv[un].has_value();
  }
  j["face"] = std::move(faces);
  j["degen"] = std::move(degens);
  j["t"] = std::move(ts);
  if (any_tinv) j["t_inv"] = std::move(tinvs);
  return j;
}

TruncatedDuplicialModule module_from_json(const Json& j) {
  const std::string w = "module";
  TruncatedDuplicialModule m;
  m.ring = ring_from_json(field(j, "ring", w));
  m.n_max = int_field(j, "n_max", w);
  if (m.n_max < 0) fail(w + ".n_max", "must be non-negative");
  const auto N = static_cast<std::size_t>(m.n_max);
  m.ranks = ranks_from_json(field(j, "ranks", w), N + 1, w + ".ranks");

  const Json& faces = array_at(field(j, "face", w), w + ".face");
  if (faces.size() != N + 1) fail(w + ".face", "expected one list per degree 0..n_max");
  m.face.resize(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    const std::string wn = w + ".face[" + std::to_string(n) + "]";
    const Json& list = array_at(faces[n], wn);
    if (list.size() != (n == 0 ? 0 : n + 1)) fail(wn, "expected " + std::to_string(n == 0 ? 0 : n + 1) + " faces");
    for (std::size_t i = 0; i < list.size(); ++i)
      m.face[n].push_back(matrix_at(m.ring, list[i], {m.ranks[n - 1], m.ranks[n]},
                                    wn + "[" + std::to_string(i) + "]"));
  }

  const Json& degens = array_at(field(j, "degen", w), w + ".degen");
  if (degens.size() != N) fail(w + ".degen", "expected one list per degree 0..n_max-1");
  m.degen.resize(N);
  for (std::size_t n = 0; n < N; ++n) {
    const std::string wn = w + ".degen[" + std::to_string(n) + "]";
    const Json& list = array_at(degens[n], wn);
    if (list.size() != n + 1 && list.size() != n + 2)
      fail(wn, "expected " + std::to_string(n + 1) + " or " + std::to_string(n + 2) + " degeneracies");
    for (std::size_t i = 0; i < list.size(); ++i)
      m.degen[n].push_back(matrix_at(m.ring, list[i], {m.ranks[n + 1], m.ranks[n]},
                                     wn + "[" + std::to_string(i) + "]"));
  }

  auto optional_list = [&](const char* key, std::vector<std::optional<Matrix>>& out) {
    out.assign(N + 1, std::nullopt);
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return;
    const std::string wk = w + "." + key;
    array_at(*it, wk);
    if (it->size() != N + 1) fail(wk, "expected one entry per degree 0..n_max");
    for (std::size_t n = 0; n <= N; ++n)
      if (!(*it)[n].is_null())
        out[n] = matrix_at(m.ring, (*it)[n], {m.ranks[n], m.ranks[n]},
                           wk + "[" + std::to_string(n) + "]");
  };
  optional_list("t", m.t);
  optional_list("t_inv", m.t_inv);
  m.check_shapes();
  return m;
}

Json to_json(const DuchainComplex& v) {
  Json j;
  j["ring"] = to_json(v.ring);
  j["n_max"] = v.n_max;
  j["ranks"] = v.ranks;
  Json b = Json::array(), d = Json::array();
  for (const auto& m : v.b) b.push_back(to_json(m));
  for (const auto& m : v.d) d.push_back(to_json(m));
  j["b"] = std::move(b);
  j["d"] = std::move(d);
  return j;
}

DuchainComplex duchain_from_json(const Json& j) {
  const std::string w = "duchain";
  DuchainComplex v;
  v.ring = ring_from_json(field(j, "ring", w));
  v.n_max = int_field(j, "n_max", w);
  if (v.n_max < 0) fail(w + ".n_max", "must be non-negative");
  const auto N = static_cast<std::size_t>(v.n_max);
  v.ranks = ranks_from_json(field(j, "ranks", w), N + 1, w + ".ranks");
  const Json& b = array_at(field(j, "b", w), w + ".b");
  const Json& d = array_at(field(j, "d", w), w + ".d");
  if (b.size() != N + 1) fail(w + ".b", "expected one matrix per degree 0..n_max");
  if (d.size() != N) fail(w + ".d", "expected one matrix per degree 0..n_max-1");
  for (std::size_t n = 0; n <= N; ++n)
    v.b.push_back(matrix_at(v.ring, b[n], {n == 0 ? 0 : v.ranks[n - 1], v.ranks[n]},
                            w + ".b[" + std::to_string(n) + "]"));
  for (std::size_t n = 0; n < N; ++n)
    v.d.push_back(matrix_at(v.ring, d[n], {v.ranks[n + 1], v.ranks[n]},
                            w + ".d[" + std::to_string(n) + "]"));
  return v;
}

Json to_json(const AlgebraSpec& a) {
  Json j;
  j["dim"] = a.dim;
  j["unit"] = to_json(a.unit);
  Json mult = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.dim; ++k) {
      Json coeffs = Json::array();
      for (std::size_t l = 0; l < a.dim; ++l) coeffs.push_back(to_json(a.structure(i, k, l)));
      row.push_back(std::move(coeffs));
    }
    mult.push_back(std::move(row));
  }
  j["mult"] = std::move(mult);
  j["automorphism"] = a.automorphism ? to_json(*a.automorphism) : Json(nullptr);
  return j;
}

AlgebraSpec algebra_from_json(const Ring& ring, const Json& j) {
  const std::string w = "algebra";
  AlgebraSpec a;
  int dim = int_field(j, "dim", w);
  if (dim <= 0) fail(w + ".dim", "must be positive");
  a.dim = static_cast<std::size_t>(dim);
  a.unit = vector_from_json(ring, field(j, "unit", w));
  if (a.unit.size() != a.dim) fail(w + ".unit", "length must equal dim");
  const Json& mult = array_at(field(j, "mult", w), w + ".mult");
  if (mult.size() != a.dim) fail(w + ".mult", "expected dim rows");
  a.mult.assign(a.dim * a.dim * a.dim, Scalar(0));
  for (std::size_t i = 0; i < a.dim; ++i) {
    const Json& row = array_at(mult[i], w + ".mult[" + std::to_string(i) + "]");
    if (row.size() != a.dim) fail(w + ".mult[" + std::to_string(i) + "]", "expected dim entries");
    for (std::size_t k = 0; k < a.dim; ++k) {
      Vector c = vector_from_json(ring, row[k]);
      if (c.size() != a.dim) fail(w + ".mult", "each product needs dim coefficients");
      for (std::size_t l = 0; l < a.dim; ++l) a.mult[(i * a.dim + k) * a.dim + l] = c[l];
    }
  }
  auto it = j.find("automorphism");
  if (it != j.end() && !it->is_null())
    a.automorphism = matrix_at(ring, *it, {a.dim, a.dim}, w + ".automorphism");
  return a;
}

Json to_json(const IdentityReport& r) {
  Json out = Json::array();
  for (const auto& e : r.sorted()) {
    Json j;
    j["identity"] = e.identity;
    j["degree"] = e.degree;
    j["status"] = to_string(e.status);
    j["witness"] = e.witness ? to_json(*e.witness) : Json(nullptr);
    if (e.probe) j["probe"] = true;
    if (!e.detail.empty()) j["detail"] = e.detail;
    out.push_back(std::move(j));
  }
  return out;
}

Json to_json(const HomologyGroup& h) {
  Json j;
  j["degree"] = h.degree;
  j["free_rank"] = h.free_rank;
  Json t = Json::array();
  for (const auto& d : h.torsion) t.push_back(d.get_str());
  j["torsion"] = std::move(t);
  return j;
}

Json to_json(const std::vector<HomologyGroup>& hs) {
  Json out = Json::array();
  for (const auto& h : hs) out.push_back(to_json(h));
  return out;
}

Json to_json(const DKDecomposition& d) {
  Json j;
  j["degree"] = d.degree;
  Json comps = Json::array();
  for (const auto& seq : dk_sequences(d.degree)) {
    auto it = d.components.find(seq);
    if (it == d.components.end()) continue;
    Json c;
    c["sequence"] = seq;
    c["vector"] = to_json(it->second);
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  return j;
}

Json to_json(const IndexMorphism& f) {
  Json j;
  j["m"] = f.domain();
  j["n"] = f.codomain();
  j["values"] = f.values();
  return j;
}

IndexMorphism morphism_from_json(const Json& j) {
  const std::string w = "morphism";
  int m = int_field(j, "m", w), n = int_field(j, "n", w);
  const Json& vals = array_at(field(j, "values", w), w + ".values");
  std::vector<std::int64_t> values;
  for (const auto& v : vals) {
    if (!v.is_number_integer()) fail(w + ".values", "expected integers");
    values.push_back(v.get<std::int64_t>());
  }
  return IndexMorphism(m, n, std::move(values));
}

Json to_json(const GeneratorWord& word) {
  Json out = Json::array();
  for (const auto& g : word) {
    Json j;
    switch (g.kind) {
      case GeneratorKind::Face: j["kind"] = "e"; break;
      case GeneratorKind::Degeneracy: j["kind"] = "h"; break;
      case GeneratorKind::Shift: j["kind"] = "t"; break;
      case GeneratorKind::ShiftInverse: j["kind"] = "t_inv"; break;
    }
    j["n"] = g.degree;
    j["i"] = g.index;
    out.push_back(std::move(j));
  }
  return out;
}

GeneratorWord word_from_json(const Json& j) {
  GeneratorWord word;
  for (const auto& tok : array_at(j, "word")) {
    const Json& k = field(tok, "kind", "word token");
    if (!k.is_string()) fail("word token.kind", "expected a string");
    const std::string kind = k.get<std::string>();
    Generator g{GeneratorKind::Face, int_field(tok, "n", "word token"), 0};
    if (kind == "e") g.kind = GeneratorKind::Face;
    else if (kind == "h") g.kind = GeneratorKind::Degeneracy;
    else if (kind == "t") g.kind = GeneratorKind::Shift;
    else if (kind == "t_inv") g.kind = GeneratorKind::ShiftInverse;
    else fail("word token.kind", "unknown kind " + kind);
    auto it = tok.find("i");
    if (it != tok.end()) {
      if (!it->is_number_integer()) fail("word token.i", "expected an integer");
      g.index = it->get<int>();
    }
    word.push_back(g);
  }
  return word;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open file");
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(path, "malformed JSON");
  return j;
}

}  // namespace paracyclic
