#pragma once

#include <optional>
#include <vector>

#include "invgen/matrix.hpp"

namespace invgen {

// Dense univariate polynomial over one field; coeffs_[i] is the coefficient
// of x^i, with no trailing zeros (the zero polynomial stores no terms).
class Poly {
 public:
  explicit Poly(const FieldSpec& f) : field_(f) {}
  Poly(const FieldSpec& f, std::vector<Scalar> coeffs);
  static Poly x_minus(const Scalar& root);
  static Poly constant(const Scalar& c);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& coeff(int i) const { return coeffs_[i]; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  // division with remainder by a nonzero divisor
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly mod(const Poly& d) const { return divmod(d).second; }
  Poly monic() const;
  Poly derivative() const;
  Scalar eval(const Scalar& x) const;
  bool operator==(const Poly& o) const;

  static Poly gcd(const Poly& a, const Poly& b);  // monic gcd
  // base^e mod m, binary exponentiation over the quotient ring
  static Poly pow_mod(const Poly& base, const BigInt& e, const Poly& m);
  static Poly pow_x_mod(const BigInt& e, const Poly& m);

  // det(xI - A), division-free (Samuelson-Berkowitz).
  static Poly char_poly(const Matrix& a);

 private:
  FieldSpec field_;
  std::vector<Scalar> coeffs_;

  void trim();
};

// All roots of f when f splits into distinct linear factors over its field;
// nullopt when it does not (repeated roots are reported via the bool flag).
struct SplitResult {
  bool distinct;                 // gcd(f, f') trivial
  bool split;                    // all roots lie in the field
  std::vector<Scalar> roots;     // filled when distinct && split
};
SplitResult distinct_root_split(const Poly& f);

// First monic irreducible polynomial of the given degree over F_p (or over Q
// for degree <= 2 via x^2+1-style choices), scanned deterministically, with
// an exclusion list so callers can pick several distinct ones.
Poly monic_irreducible(const FieldSpec& f, int degree,
                       const std::vector<Poly>& avoid);

}  // namespace invgen
