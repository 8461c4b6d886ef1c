#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "invgen/errors.hpp"

namespace invgen {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Prime, Rational };

// A coefficient field: F_p for an odd prime p < 2^62, or the rationals.
struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  std::int64_t p = 0;  // modulus, zero for the rationals

  static FieldSpec prime(std::int64_t p);
  static FieldSpec rationals() { return FieldSpec{FieldKind::Rational, 0}; }

  bool is_prime_field() const { return kind == FieldKind::Prime; }
  bool operator==(const FieldSpec&) const = default;
  std::string to_string() const;
};

bool is_prime_modulus(std::int64_t p);

// Exact field element.  Prime-field values live in [0, p); rationals are
// kept in lowest terms with positive denominator (cpp_rational invariant).
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()) {}

  static Scalar zero(const FieldSpec& f) { return of(f, 0); }
  static Scalar one(const FieldSpec& f) { return of(f, 1); }
  static Scalar of(const FieldSpec& f, std::int64_t value);
  static Scalar of(const FieldSpec& f, const BigInt& value);
  static Scalar from_rational(Rational v);
  // value already reduced to [0, p)
  static Scalar from_residue(const FieldSpec& f, std::int64_t residue);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;  // throws on zero

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // Total order within one field, used only for canonical sorting.
  std::strong_ordering operator<=>(const Scalar& o) const;

  // "17" for prime residues, "3/7" (or "-3/7", "4") for rationals.
  std::string str() const;
  static Scalar parse(const FieldSpec& f, std::string_view text);

  // Exact square root when one exists in the field.
  std::optional<Scalar> sqrt() const;

  std::int64_t residue() const;  // prime fields only
  const Rational& rat() const;   // rational field only

 private:
  FieldSpec field_;
  std::int64_t res_ = 0;
  Rational rat_;

  void check_same_field(const Scalar& o) const;
};

// Modular helpers shared with the fast enumeration paths.
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p);
std::int64_t mod_inv(std::int64_t a, std::int64_t p);
std::optional<std::int64_t> mod_sqrt(std::int64_t a, std::int64_t p);

}  // namespace invgen
