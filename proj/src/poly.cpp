#include "invgen/poly.hpp"

#include <algorithm>
#include <map>

namespace invgen {

namespace {

BigInt bgcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return boost::multiprecision::gcd(a, b);
}

bool miller_rabin(const BigInt& n) {
  if (n < 2) return false;
  for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43}) {
    if (n % q == 0) return n == q;
  }
  BigInt d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                59, 61, 67, 71, 73, 79, 83, 89, 97}) {
    BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

BigInt pollard_brent(const BigInt& n) {
  if (n % 2 == 0) return 2;
  for (unsigned c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    BigInt saved_x = x;
    std::uint64_t power = 1, lam = 0;
    auto step = [&](BigInt v) { return (v * v + c) % n; };
    while (d == 1) {
      if (lam == power) {
        saved_x = y;
        power *= 2;
        lam = 0;
      }
      y = step(y);
      ++lam;
      d = bgcd(saved_x - y, n);
      if (lam > (1u << 22)) break;  // give this c up
    }
    if (d != n && d != 1) return d;
  }
}

void factorize(BigInt n, std::map<BigInt, int>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (std::int64_t q = 2; q < 1'000'000 && BigInt(q) * q <= n; ++q) {
    while (n % q == 0) {
      ++out[BigInt(q)];
      n /= q;
    }
  }
  if (n == 1) return;
  if (miller_rabin(n)) {
    ++out[n];
    return;
  }
  BigInt d = pollard_brent(n);
  factorize(d, out);
  factorize(n / d, out);
}

std::vector<BigInt> divisors(const BigInt& n, std::size_t cap) {
  std::map<BigInt, int> fac;
  factorize(n, fac);
  std::vector<BigInt> divs{1};
  for (const auto& [prime, mult] : fac) {
    std::size_t old = divs.size();
    BigInt pk = 1;
    for (int e = 1; e <= mult; ++e) {
      pk *= prime;
      for (std::size_t i = 0; i < old; ++i) {
        divs.push_back(divs[i] * pk);
        if (divs.size() > cap)
          fail(Errc::EnumerationTooLarge, "too many divisor candidates");
      }
    }
  }
  return divs;
}

}  // namespace

Poly::Poly(const FieldSpec& f, std::vector<Scalar> coeffs)
    : field_(f), coeffs_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::x_minus(const Scalar& root) {
  return Poly(root.field(), {-root, Scalar::one(root.field())});
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Scalar Poly::leading() const {
  if (is_zero()) fail(Errc::InvalidInput, "leading of zero polynomial");
  return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()),
                        Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return Poly(field_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()),
                        Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return Poly(field_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Scalar> c(coeffs_.size() + o.coeffs_.size() - 1,
                        Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Poly(field_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) fail(Errc::InvalidInput, "polynomial division by zero");
  Poly rem = *this;
  std::vector<Scalar> q(
      degree() >= d.degree() ? degree() - d.degree() + 1 : 0,
      Scalar::zero(field_));
  Scalar lead_inv = d.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int shift = rem.degree() - d.degree();
    Scalar f = rem.leading() * lead_inv;
    q[shift] = f;
    std::vector<Scalar> sub(shift, Scalar::zero(field_));
    for (const auto& c : d.coeffs_) sub.push_back(c * f);
    rem = rem - Poly(field_, std::move(sub));
  }
  return {Poly(field_, std::move(q)), rem};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = leading().inverse();
  std::vector<Scalar> c = coeffs_;
  for (auto& x : c) x *= inv;
  return Poly(field_, std::move(c));
}

Poly Poly::derivative() const {
  if (degree() <= 0) return Poly(field_);
  std::vector<Scalar> c(coeffs_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    c[i - 1] = coeffs_[i] * Scalar::of(field_, static_cast<std::int64_t>(i));
  return Poly(field_, std::move(c));
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar v = Scalar::zero(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
  return v;
}

bool Poly::operator==(const Poly& o) const {
  return field_ == o.field_ && coeffs_ == o.coeffs_;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.mod(y);
    x = y;
    y = r;
  }
  return x.monic();
}

Poly Poly::pow_x_mod(const BigInt& e, const Poly& m) {
  Poly x(m.field(), {Scalar::zero(m.field()), Scalar::one(m.field())});
  return pow_mod(x, e, m);
}

Poly Poly::pow_mod(const Poly& base, const BigInt& e, const Poly& m) {
  Poly result = Poly::constant(Scalar::one(m.field()));
  Poly b = base.mod(m);
  BigInt k = e;
  while (k > 0) {
    if ((k & 1) != 0) result = (result * b).mod(m);
    b = (b * b).mod(m);
    k >>= 1;
  }
  return result;
}

Poly Poly::char_poly(const Matrix& a) {
  if (!a.is_square()) fail(Errc::InvalidInput, "char_poly of non-square matrix");
  const FieldSpec& f = a.field();
  std::size_t n = a.rows();
  if (n == 0) return Poly::constant(Scalar::one(f));
  // coefficients in descending powers: c[j] multiplies x^{m-j}
  std::vector<Scalar> c{Scalar::one(f), -a(0, 0)};
  for (std::size_t m = 1; m < n; ++m) {
    // s_k = R M^k C over the top-left m x m block
    std::vector<Scalar> s;
    Vec v(m, Scalar::zero(f));
    for (std::size_t i = 0; i < m; ++i) v[i] = a(i, m);
    for (std::size_t k = 0; k < m; ++k) {
      Scalar sk = Scalar::zero(f);
      for (std::size_t j = 0; j < m; ++j) sk += a(m, j) * v[j];
      s.push_back(sk);
      if (k + 1 < m) {
        Vec w(m, Scalar::zero(f));
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) w[i] += a(i, j) * v[j];
        v = std::move(w);
      }
    }
    const Scalar& diag = a(m, m);
    std::vector<Scalar> d(m + 2, Scalar::zero(f));
    for (std::size_t j = 0; j <= m + 1; ++j) {
      Scalar val = Scalar::zero(f);
      if (j < c.size()) val += c[j];
      if (j >= 1 && j - 1 < c.size()) val -= diag * c[j - 1];
      if (j >= 2) {
        for (std::size_t k = 0; k + 2 <= j && k < s.size(); ++k) {
          std::size_t idx = j - 2 - k;
          if (idx < c.size()) val -= s[k] * c[idx];
        }
      }
      d[j] = val;
    }
    c = std::move(d);
  }
  // convert to ascending order
  std::vector<Scalar> asc(c.rbegin(), c.rend());
  return Poly(f, std::move(asc));
}

namespace {

// roots of a monic squarefree fully-split polynomial over F_p
void split_roots_fp(const Poly& f, std::vector<Scalar>& out) {
  const FieldSpec& fs = f.field();
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    out.push_back(-f.coeff(0));
    return;
  }
  std::int64_t p = fs.p;
  for (std::int64_t a = 0;; ++a) {
    Scalar sa = Scalar::of(fs, a);
    if (f.eval(-sa).is_zero()) {
      out.push_back(-sa);
      Poly q = f.divmod(Poly::x_minus(-sa)).first;
      split_roots_fp(q.monic(), out);
      return;
    }
    Poly shifted(fs, {sa, Scalar::one(fs)});
    Poly h = Poly::pow_mod(shifted, BigInt((p - 1) / 2), f);
    Poly g = Poly::gcd(f, h - Poly::constant(Scalar::one(fs)));
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_roots_fp(g, out);
      split_roots_fp(f.divmod(g).first.monic(), out);
      return;
    }
  }
}

// rational roots of a squarefree polynomial over Q via divisor candidates
std::vector<Scalar> rational_roots(const Poly& f) {
  const FieldSpec& fs = f.field();
  std::vector<Scalar> out;
  Poly g = f;
  if (g.coeff(0).is_zero()) {
    out.push_back(Scalar::zero(fs));
    std::vector<Scalar> shifted(g.coeffs().begin() + 1, g.coeffs().end());
    g = Poly(fs, std::move(shifted));
  }
  if (g.degree() <= 0) return out;
  // clear denominators
  BigInt lcm = 1;
  for (const auto& c : g.coeffs())
    lcm = lcm / bgcd(lcm, denominator(c.rat())) * denominator(c.rat());
  std::vector<BigInt> ic;
  for (const auto& c : g.coeffs())
    ic.push_back(numerator(c.rat()) * (lcm / denominator(c.rat())));
  BigInt content = 0;
  for (const auto& c : ic) content = bgcd(content, c);
  if (content > 1)
    for (auto& c : ic) c /= content;
  const BigInt& lead = ic.back();
  const BigInt& cons = ic.front();
  auto us = divisors(cons, 100000);
  auto vs = divisors(lead, 100000);
  for (const BigInt& u : us) {
    for (const BigInt& v : vs) {
      if (bgcd(u, v) != 1) continue;
      for (int sign : {1, -1}) {
        Scalar cand = Scalar::from_rational(Rational(sign * u, v));
        if (g.eval(cand).is_zero()) out.push_back(cand);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SplitResult distinct_root_split(const Poly& f_in) {
  Poly f = f_in.monic();
  if (f.degree() <= 0) return {true, true, {}};
  SplitResult res{false, false, {}};
  res.distinct = Poly::gcd(f, f.derivative()).degree() == 0;
  if (!res.distinct) return res;
  if (f.field().is_prime_field()) {
    Poly xp = Poly::pow_x_mod(BigInt(f.field().p), f);
    Poly x(f.field(), {Scalar::zero(f.field()), Scalar::one(f.field())});
    Poly g = Poly::gcd(f, xp - x);
    res.split = g.degree() == f.degree();
    if (res.split) {
      split_roots_fp(f, res.roots);
      std::sort(res.roots.begin(), res.roots.end());
    }
    return res;
  }
  res.roots = rational_roots(f);
  res.split = static_cast<int>(res.roots.size()) == f.degree();
  if (!res.split) res.roots.clear();
  return res;
}

namespace {

bool is_irreducible(const Poly& f) {
  // finite-field irreducibility: x^{p^m} = x mod f and gcd(x^{p^{m/t}} - x, f)
  // trivial for every prime t dividing m
  const FieldSpec& fs = f.field();
  int m = f.degree();
  if (m == 1) return true;
  BigInt p(fs.p);
  Poly x(fs, {Scalar::zero(fs), Scalar::one(fs)});
  Poly xq = Poly::pow_x_mod(boost::multiprecision::pow(p, m), f);
  if (!(xq - x).mod(f).is_zero()) return false;
  for (int t = 2; t <= m; ++t) {
    if (m % t != 0) continue;
    bool t_prime = true;
    for (int u = 2; u * u <= t; ++u)
      if (t % u == 0) t_prime = false;
    if (!t_prime) continue;
    Poly xs = Poly::pow_x_mod(boost::multiprecision::pow(p, m / t), f);
    if (Poly::gcd(f, xs - x).degree() != 0) return false;
  }
  return true;
}

}  // namespace

Poly monic_irreducible(const FieldSpec& f, int degree,
                       const std::vector<Poly>& avoid) {
  auto excluded = [&](const Poly& cand) {
    return std::find(avoid.begin(), avoid.end(), cand) != avoid.end();
  };
  if (degree == 1) {
    for (std::int64_t c = 0;; ++c) {
      Poly cand = Poly::x_minus(Scalar::of(f, c));
      if (!excluded(cand)) return cand;
      if (f.is_prime_field() && c >= f.p)
        fail(Errc::FieldTooSmall, "no unused linear polynomial left");
    }
  }
  if (!f.is_prime_field()) {
    // x^degree + 2k is Eisenstein at 2 for odd k
    for (std::int64_t k = 1;; k += 2) {
      std::vector<Scalar> c(degree + 1, Scalar::zero(f));
      c[0] = Scalar::of(f, 2 * k);
      c[degree] = Scalar::one(f);
      Poly cand(f, std::move(c));
      if (!excluded(cand)) return cand;
    }
  }
  // scan monic polynomials in lexicographic coefficient order
  std::int64_t p = f.p;
  std::vector<std::int64_t> digits(degree, 0);
  for (;;) {
    std::vector<Scalar> c;
    c.reserve(degree + 1);
    for (int i = 0; i < degree; ++i) c.push_back(Scalar::from_residue(f, digits[i]));
    c.push_back(Scalar::one(f));
    Poly cand(f, std::move(c));
    if (is_irreducible(cand) && !excluded(cand)) return cand;
    int i = 0;
    while (i < degree) {
      if (++digits[i] < p) break;
      digits[i] = 0;
      ++i;
    }
    if (i == degree)
      fail(Errc::FieldTooSmall, "no irreducible polynomial available");
  }
}

}  // namespace invgen
