#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "paracyclic/error.hpp"

namespace paracyclic {

// Every ring element is held as a GMP rational. Over Z and Z/m the
// denominator is always 1; over Z/m the numerator is the representative in
// [0, m).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

class Ring {
 public:
  enum class Kind { Integers, Rationals, IntegersMod };

  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  static Ring integers_mod(std::uint64_t modulus);

  // Accepts "Z", "Q" and "Z/m".
  static Ring parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }

  bool is_field() const;
  bool is_prime_field() const { return kind_ == Kind::IntegersMod && is_field(); }

  // Maps an arbitrary rational into the ring. Throws NotIntegral over Z for
  // non-integers and NotInvertible over Z/m when the denominator is not a
  // unit.
  Scalar normalize(const Scalar& value) const;
  Scalar from_int(long value) const { return normalize(Scalar(value)); }

  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }

  bool is_unit(const Scalar& a) const;
  Scalar inverse(const Scalar& a) const;

  // Parses "17", "-3" or "2/3" and normalizes into the ring.
  Scalar parse_scalar(std::string_view text) const;
  static std::string format_scalar(const Scalar& value);

  std::string name() const;

  bool operator==(const Ring& other) const = default;

 private:
  Ring(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t value);

}  // namespace paracyclic
