#include "paracyclic/index_category.hpp"

#include <algorithm>
#include <sstream>

namespace paracyclic {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IndexMorphism::IndexMorphism(int domain, int codomain, std::vector<std::int64_t> values)
    : domain_(domain), codomain_(codomain), values_(std::move(values)) {
  if (domain_ < 0 || codomain_ < 0)
    throw Error(ErrorKind::ShapeMismatch, "negative degree");
  if (values_.size() != static_cast<std::size_t>(domain_) + 1)
    throw Error(ErrorKind::ShapeMismatch, "value count must be domain + 1");
  for (std::size_t j = 1; j < values_.size(); ++j)
    if (values_[j] < values_[j - 1])
      throw Error(ErrorKind::ShapeMismatch, "values are not weakly monotone: " + to_string());
  if (values_.back() > values_.front() + codomain_ + 1)
    throw Error(ErrorKind::ShapeMismatch, "values exceed one period: " + to_string());
}

IndexMorphism IndexMorphism::identity(int n) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) v[static_cast<std::size_t>(j)] = j;
  return IndexMorphism(n, n, std::move(v));
}

std::int64_t IndexMorphism::operator()(std::int64_t j) const {
  const std::int64_t period = domain_ + 1;
  std::int64_t q = floor_div(j, period);
  std::int64_t r = j - q * period;
  return values_[static_cast<std::size_t>(r)] + q * (codomain_ + 1);
}

std::string IndexMorphism::to_string() const {
  std::ostringstream out;
  out << "[" << domain_ << "]->[" << codomain_ << "] (";
  for (std::size_t j = 0; j < values_.size(); ++j) out << (j ? "," : "") << values_[j];
  out << ")";
  return out.str();
}

int Generator::domain() const {
  switch (kind) {
    case GeneratorKind::Face: return degree - 1;
    case GeneratorKind::Degeneracy: return degree + 1;
    default: return degree;
  }
}

int Generator::codomain() const { return degree; }

IndexMorphism generator(GeneratorKind kind, int n, int i) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "negative degree");
  std::vector<std::int64_t> v;
  switch (kind) {
    case GeneratorKind::Face:
      if (n < 1 || i < 0 || i > n)
        throw Error(ErrorKind::IndexOutOfRange,
                    "face index " + std::to_string(i) + " at degree " + std::to_string(n));
      for (int j = 0; j <= n - 1; ++j) v.push_back(j < i ? j : j + 1);
      return IndexMorphism(n - 1, n, v);
    case GeneratorKind::Degeneracy:
      if (i < 0 || i > n + 1)
        throw Error(ErrorKind::IndexOutOfRange,
                    "degeneracy index " + std::to_string(i) + " at degree " + std::to_string(n));
      for (int j = 0; j <= n + 1; ++j) v.push_back(j <= i ? j : j - 1);
      return IndexMorphism(n + 1, n, v);
    case GeneratorKind::Shift:
      for (int j = 0; j <= n; ++j) v.push_back(j + 1);
      return IndexMorphism(n, n, v);
    case GeneratorKind::ShiftInverse:
      for (int j = 0; j <= n; ++j) v.push_back(j - 1);
      return IndexMorphism(n, n, v);
  }
  throw Error(ErrorKind::IndexOutOfRange, "unknown generator kind");
}

IndexMorphism generator(const Generator& g) { return generator(g.kind, g.degree, g.index); }

IndexMorphism compose(const IndexMorphism& g, const IndexMorphism& f) {
  if (f.codomain() != g.domain())
    throw Error(ErrorKind::DegreeMismatch, "cannot compose " + g.to_string() + " after " +
                                               f.to_string());
  std::vector<std::int64_t> v;
  v.reserve(f.values().size());
  for (auto x : f.values()) v.push_back(g(x));
  return IndexMorphism(f.domain(), g.codomain(), std::move(v));
}

IndexMorphism compose_word(const GeneratorWord& word, int degree_if_empty) {
  if (word.empty()) return IndexMorphism::identity(degree_if_empty);
  IndexMorphism acc = generator(word.back());
  for (auto it = word.rbegin() + 1; it != word.rend(); ++it) acc = compose(generator(*it), acc);
  return acc;
}

IndexClass classify(const IndexMorphism& f) {
  if (f.values().front() < 0) return IndexClass::LambdaInfinityOnly;
  if (f.values().back() <= f.codomain()) return IndexClass::Delta;
  return IndexClass::LambdaPlusOnly;
}

EpiMonoData epi_mono_data(const IndexMorphism& f) {
  if (classify(f) != IndexClass::Delta)
    throw Error(ErrorKind::ShapeMismatch, "epi-mono data needs a Delta morphism");
  EpiMonoData out;
  const auto& v = f.values();
  std::vector<bool> hit(static_cast<std::size_t>(f.codomain()) + 1, false);
  for (auto x : v) hit[static_cast<std::size_t>(x)] = true;
  for (int c = 0; c <= f.codomain(); ++c)
    if (!hit[static_cast<std::size_t>(c)]) out.missing.push_back(c);
  for (int j = 0; j < f.domain(); ++j)
    if (v[static_cast<std::size_t>(j)] == v[static_cast<std::size_t>(j) + 1]) out.repeats.push_back(j);
  return out;
}

GeneratorWord factorize(const IndexMorphism& f) {
  const int m = f.domain(), n = f.codomain();
  // a = min{ j : f(j) >= 0 }; then g(j) = f(j + a) lies in Delta and
  // f = g ∘ τ^(-a).
  std::int64_t a = -floor_div(f.values().front(), n + 1) * (m + 1);
  while (f(a - 1) >= 0) --a;
  while (f(a) < 0) ++a;
  std::vector<std::int64_t> shifted;
  for (int j = 0; j <= m; ++j) shifted.push_back(f(j + a));
  IndexMorphism g(m, n, shifted);
  EpiMonoData data = epi_mono_data(g);

  GeneratorWord word;
  // Mono [r] -> [n], r = n - |missing|: ε^n_{i1} ∘ ε^{n-1}_{i2} ∘ ... with
  // i1 > i2 > ...
  int deg = n;
  for (auto it = data.missing.rbegin(); it != data.missing.rend(); ++it)
    word.push_back({GeneratorKind::Face, deg--, *it});
  // Epi [m] -> [r]: η^r_{j1} ∘ ... ∘ η^{m-1}_{jq} with j1 < ... < jq.
  deg = n - static_cast<int>(data.missing.size());
  for (int j : data.repeats) word.push_back({GeneratorKind::Degeneracy, deg++, j});
  const std::int64_t k = -a;
  for (std::int64_t s = 0; s < (k < 0 ? -k : k); ++s)
    word.push_back({k > 0 ? GeneratorKind::Shift : GeneratorKind::ShiftInverse, m, 0});
  return word;
}

Generator involution(const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::Face: return {GeneratorKind::Degeneracy, g.degree - 1, g.degree - g.index};
    case GeneratorKind::Degeneracy:
      return {GeneratorKind::Face, g.degree + 1, g.degree + 1 - g.index};
    default: return g;
  }
}

IndexMorphism involution(const IndexMorphism& f) {
  GeneratorWord word = factorize(f);
  GeneratorWord dual;
  for (auto it = word.rbegin(); it != word.rend(); ++it) dual.push_back(involution(*it));
  // f : [m] -> [n] becomes f° : [n] -> [m].
  return compose_word(dual, f.domain());
}

std::vector<IndexMorphism> enumerate_delta(int m, int n) {
  std::vector<IndexMorphism> out;
  if (m < 0 || n < 0) return out;
  std::vector<std::int64_t> v(static_cast<std::size_t>(m) + 1, 0);
  for (;;) {
    out.emplace_back(m, n, v);
    // Next weakly increasing tuple in lexicographic order.
    int pos = m;
    while (pos >= 0 && v[static_cast<std::size_t>(pos)] == n) --pos;
    if (pos < 0) break;
    std::int64_t x = v[static_cast<std::size_t>(pos)] + 1;
    for (int j = pos; j <= m; ++j) v[static_cast<std::size_t>(j)] = x;
  }
  return out;
}

std::string to_string(const Generator& g) {
  std::ostringstream out;
  switch (g.kind) {
    case GeneratorKind::Face: out << "e^" << g.degree << "_" << g.index; break;
    case GeneratorKind::Degeneracy: out << "h^" << g.degree << "_" << g.index; break;
    case GeneratorKind::Shift: out << "t_" << g.degree; break;
    case GeneratorKind::ShiftInverse: out << "t_" << g.degree << "^-1"; break;
  }
  return out.str();
}

std::string to_string(IndexClass c) {
  switch (c) {
    case IndexClass::Delta: return "Delta";
    case IndexClass::LambdaPlusOnly: return "LambdaPlusOnly";
    case IndexClass::LambdaInfinityOnly: return "LambdaInfinityOnly";
  }
  return "?";
}

}  // namespace paracyclic
