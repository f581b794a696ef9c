#include "paracyclic/ring.hpp"

#include <charconv>

namespace paracyclic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::CompositeModulus: return "CompositeModulus";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::TNotAvailable: return "TNotAvailable";
    case ErrorKind::NotDuplicial: return "NotDuplicial";
    case ErrorKind::NonNormalizedComponent: return "NonNormalizedComponent";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::NonInvertibleAutomorphism: return "NonInvertibleAutomorphism";
    case ErrorKind::InvalidDuchain: return "InvalidDuchain";
    case ErrorKind::InducedSquareNonzero: return "InducedSquareNonzero";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

Ring Ring::integers_mod(std::uint64_t modulus) {
  if (modulus < 2)
    throw Error(ErrorKind::UnsupportedRing, "modulus must be at least 2");
  return Ring(Kind::IntegersMod, modulus);
}

Ring Ring::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "Z/") {
    std::uint64_t m = 0;
    auto digits = text.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw Error(ErrorKind::UnsupportedRing, "bad modulus in '" + std::string(text) + "'");
    return integers_mod(m);
  }
  throw Error(ErrorKind::UnsupportedRing, "unknown ring '" + std::string(text) + "'");
}

bool Ring::is_field() const {
  switch (kind_) {
    case Kind::Integers: return false;
    case Kind::Rationals: return true;
    case Kind::IntegersMod: return is_prime(modulus_);
  }
  return false;
}

Scalar Ring::normalize(const Scalar& value) const {
  switch (kind_) {
    case Kind::Rationals: {
      Scalar out(value);
      out.canonicalize();
      return out;
    }
    case Kind::Integers: {
      Scalar out(value);
      out.canonicalize();
      if (out.get_den() != 1)
        throw Error(ErrorKind::NotIntegral, Ring::format_scalar(out) + " is not an integer");
      return out;
    }
    case Kind::IntegersMod: {
      mpz_class m(static_cast<unsigned long>(modulus_));
      Scalar v(value);
      v.canonicalize();
      mpz_class num = v.get_num() % m;
      if (num < 0) num += m;
      if (v.get_den() == 1) return Scalar(num);
      mpz_class den = v.get_den() % m;
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error(ErrorKind::NotInvertible,
                    "denominator of " + Ring::format_scalar(v) + " is not a unit mod " +
                        std::to_string(modulus_));
      mpz_class r = (num * inv) % m;
      return Scalar(r);
    }
  }
  return value;
}

bool Ring::is_unit(const Scalar& a) const {
  switch (kind_) {
    case Kind::Rationals: return a != 0;
    case Kind::Integers: return a == 1 || a == -1;
    case Kind::IntegersMod: {
      mpz_class m(static_cast<unsigned long>(modulus_));
      mpz_class g = gcd(mpz_class(a.get_num()), m);
      return g == 1;
    }
  }
  return false;
}

Scalar Ring::inverse(const Scalar& a) const {
  if (!is_unit(a))
    throw Error(ErrorKind::NotInvertible, format_scalar(a) + " is not a unit in " + name());
  if (kind_ == Kind::IntegersMod) {
    mpz_class m(static_cast<unsigned long>(modulus_));
    mpz_class inv;
    mpz_class num = a.get_num();
    mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
    return Scalar(inv);
  }
  Scalar out = 1 / a;
  out.canonicalize();
  return out;
}

Scalar Ring::parse_scalar(std::string_view text) const {
  Scalar value;
  std::string s(text);
  if (s.empty() || value.set_str(s, 10) != 0)
    throw Error(ErrorKind::ParseError, "cannot parse scalar '" + s + "'");
  if (value.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
  return normalize(value);
}

std::string Ring::format_scalar(const Scalar& value) { return value.get_str(10); }

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::IntegersMod: return "Z/" + std::to_string(modulus_);
  }
  return "?";
}

}  // namespace paracyclic
