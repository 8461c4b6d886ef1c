#include "invgen/field.hpp"

#include <charconv>

namespace invgen {

namespace {

using u128 = unsigned __int128;

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

}  // namespace

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(u128(a) * u128(b) % u128(p));
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod_reduce(a, p);
  while (e > 0) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  a = mod_reduce(a, p);
  if (a == 0) fail(Errc::InvalidInput, "division by zero in F_p");
  // extended Euclid
  std::int64_t old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return mod_reduce(old_s, p);
}

std::optional<std::int64_t> mod_sqrt(std::int64_t a, std::int64_t p) {
  a = mod_reduce(a, p);
  if (a == 0) return 0;
  if (mod_pow(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);
  // Tonelli-Shanks
  std::int64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::int64_t z = 2;
  while (mod_pow(z, (p - 1) / 2, p) == 1) ++z;
  std::int64_t m = s;
  std::int64_t c = mod_pow(z, q, p);
  std::int64_t t = mod_pow(a, q, p);
  std::int64_t r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mod_mul(tt, tt, p);
      ++i;
      if (i == m) return std::nullopt;  // unreachable for residues
    }
    std::int64_t b = mod_pow(c, std::int64_t(1) << (m - i - 1), p);
    m = i;
    c = mod_mul(b, b, p);
    t = mod_mul(t, c, p);
    r = mod_mul(r, b, p);
  }
  return r;
}

bool is_prime_modulus(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::int64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mod_mul(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p == 2) fail(Errc::InvalidInput, "characteristic 2 is not supported");
  if (p < 3 || p >= (std::int64_t(1) << 62))
    fail(Errc::InvalidInput, "prime modulus must satisfy 3 <= p < 2^62");
  if (!is_prime_modulus(p))
    fail(Errc::InvalidInput, "modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{FieldKind::Prime, p};
}

std::string FieldSpec::to_string() const {
  return is_prime_field() ? "F_" + std::to_string(p) : "Q";
}

Scalar Scalar::of(const FieldSpec& f, std::int64_t value) {
  Scalar s;
  s.field_ = f;
  if (f.is_prime_field()) {
    s.res_ = mod_reduce(value, f.p);
  } else {
    s.rat_ = value;
  }
  return s;
}

Scalar Scalar::of(const FieldSpec& f, const BigInt& value) {
  Scalar s;
  s.field_ = f;
  if (f.is_prime_field()) {
    BigInt r = value % f.p;
    if (r < 0) r += f.p;
    s.res_ = static_cast<std::int64_t>(r);
  } else {
    s.rat_ = Rational(value);
  }
  return s;
}

Scalar Scalar::from_rational(Rational v) {
  Scalar s;
  s.field_ = FieldSpec::rationals();
  s.rat_ = std::move(v);
  return s;
}

Scalar Scalar::from_residue(const FieldSpec& f, std::int64_t residue) {
  Scalar s;
  s.field_ = f;
  s.res_ = residue;
  return s;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    fail(Errc::AmbientMismatch, "scalars from different fields");
}

bool Scalar::is_zero() const {
  return field_.is_prime_field() ? res_ == 0 : rat_.is_zero();
}

bool Scalar::is_one() const {
  return field_.is_prime_field() ? res_ == 1 : rat_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_prime_field()) {
    std::int64_t r = res_ + o.res_;
    if (r >= field_.p) r -= field_.p;
    return from_residue(field_, r);
  }
  return from_rational(rat_ + o.rat_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_prime_field()) {
    std::int64_t r = res_ - o.res_;
    if (r < 0) r += field_.p;
    return from_residue(field_, r);
  }
  return from_rational(rat_ - o.rat_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_prime_field())
    return from_residue(field_, mod_mul(res_, o.res_, field_.p));
  return from_rational(rat_ * o.rat_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (field_.is_prime_field())
    return from_residue(field_, res_ == 0 ? 0 : field_.p - res_);
  return from_rational(-rat_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::InvalidInput, "inverse of zero");
  if (field_.is_prime_field())
    return from_residue(field_, mod_inv(res_, field_.p));
  return from_rational(Rational(1) / rat_);
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_prime_field() ? res_ == o.res_ : rat_ == o.rat_;
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_prime_field()) return res_ <=> o.res_;
  if (rat_ < o.rat_) return std::strong_ordering::less;
  if (rat_ > o.rat_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::str() const {
  if (field_.is_prime_field()) return std::to_string(res_);
  return rat_.str();
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  auto bad = [&] { fail(Errc::InvalidInput, "bad scalar '" + std::string(text) + "'"); };
  if (text.empty()) bad();
  auto parse_int = [&](std::string_view s) -> BigInt {
    if (s.empty()) bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) bad();
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') bad();
    return BigInt(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return of(f, parse_int(text));
  if (f.is_prime_field())
    fail(Errc::InvalidInput, "fractions are not valid prime-field residues");
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) fail(Errc::InvalidInput, "zero denominator");
  return from_rational(Rational(num, den));
}

std::optional<Scalar> Scalar::sqrt() const {
  if (field_.is_prime_field()) {
    auto r = mod_sqrt(res_, field_.p);
    if (!r) return std::nullopt;
    return from_residue(field_, *r);
  }
  if (rat_ < 0) return std::nullopt;
  BigInt num = numerator(rat_), den = denominator(rat_);
  BigInt sn = boost::multiprecision::sqrt(num);
  BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return from_rational(Rational(sn, sd));
}

std::int64_t Scalar::residue() const {
  if (!field_.is_prime_field()) fail(Errc::InvalidInput, "not a prime-field scalar");
  return res_;
}

const Rational& Scalar::rat() const {
  if (field_.is_prime_field()) fail(Errc::InvalidInput, "not a rational scalar");
  return rat_;
}

}  // namespace invgen
