#pragma once

// Morphisms of the cyclic index categories Delta ⊂ Λ₊ ⊂ Λ∞.
//
// A morphism [m] -> [n] is a weakly monotone f : Z -> Z with
// f(j + m + 1) = f(j) + n + 1, stored by its values on 0..m. Equality of
// morphisms is equality of value tuples, so the defining relations between
// generators are properties to test rather than rewrite rules.

#include <cstdint>
#include <string>
#include <vector>

#include "paracyclic/error.hpp"

namespace paracyclic {

class IndexMorphism {
 public:
  // Throws ShapeMismatch when the values violate monotonicity/periodicity.
  IndexMorphism(int domain, int codomain, std::vector<std::int64_t> values);

  static IndexMorphism identity(int n);

  int domain() const { return domain_; }
  int codomain() const { return codomain_; }
  const std::vector<std::int64_t>& values() const { return values_; }

  // Periodic extension to all of Z.
  std::int64_t operator()(std::int64_t j) const;

  bool operator==(const IndexMorphism& other) const = default;
  auto operator<=>(const IndexMorphism& other) const = default;

  std::string to_string() const;

 private:
  int domain_;
  int codomain_;
  std::vector<std::int64_t> values_;
};

enum class GeneratorKind { Face, Degeneracy, Shift, ShiftInverse };

// Face ε^n_i : [n-1] -> [n], degeneracy η^n_i : [n+1] -> [n], shift
// τ_n : [n] -> [n] and its inverse.
struct Generator {
  GeneratorKind kind;
  int degree;
  int index = 0;

  int domain() const;
  int codomain() const;
  bool operator==(const Generator&) const = default;
};

// w[0] ∘ w[1] ∘ ... ∘ w[k-1]; the last token acts first.
using GeneratorWord = std::vector<Generator>;

enum class IndexClass { Delta, LambdaPlusOnly, LambdaInfinityOnly };

IndexMorphism generator(GeneratorKind kind, int degree, int index = 0);
IndexMorphism generator(const Generator& g);

// g ∘ f; requires f.codomain() == g.domain().
IndexMorphism compose(const IndexMorphism& g, const IndexMorphism& f);

// Composite of a word whose first token has codomain `codomain`... the
// domain of the empty word must be supplied.
IndexMorphism compose_word(const GeneratorWord& word, int degree_if_empty);

IndexClass classify(const IndexMorphism& f);

// Canonical word: faces ε_{i1} ... ε_{ip} (i1 > ... > ip), then degeneracies
// η_{j1} ... η_{jq} (j1 < ... < jq), then a power of τ acting first.
GeneratorWord factorize(const IndexMorphism& f);

// The contravariant duality of Λ∞: ε^n_i <-> η^{n-1}_{n-i}, τ_n fixed.
IndexMorphism involution(const IndexMorphism& f);
Generator involution(const Generator& g);

// Δ([m],[n]) in lexicographic order of value tuples.
std::vector<IndexMorphism> enumerate_delta(int m, int n);

// Epi-mono data of a Δ morphism: values of [n] not attained, and domain
// positions j with f(j) == f(j+1).
struct EpiMonoData {
  std::vector<int> missing;
  std::vector<int> repeats;
};
EpiMonoData epi_mono_data(const IndexMorphism& f);

std::string to_string(const Generator& g);
std::string to_string(IndexClass c);

}  // namespace paracyclic
