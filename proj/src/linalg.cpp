#include "invgen/linalg.hpp"

#include <algorithm>

namespace invgen {

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < r.cols() && pr < r.rows(); ++c) {
    std::size_t sel = pr;
    while (sel < r.rows() && r(sel, c).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(sel, j), r(pr, j));
    Scalar inv = r(pr, c).inverse();
    for (std::size_t j = c; j < r.cols(); ++j) r(pr, j) *= inv;
    for (std::size_t row = 0; row < r.rows(); ++row) {
      if (row == pr || r(row, c).is_zero()) continue;
      Scalar f = r(row, c);
      for (std::size_t j = c; j < r.cols(); ++j) r(row, j) -= f * r(pr, j);
    }
    pivots.push_back(c);
    ++pr;
  }
  return {std::move(r), std::move(pivots)};
}

Subspace Subspace::span(const Matrix& rows) {
  RrefResult rr = rref(rows);
  Subspace s;
  Matrix basis(rows.field(), rr.rank(), rows.cols());
  for (std::size_t i = 0; i < rr.rank(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) basis(i, j) = rr.r(i, j);
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(rr.pivots);
  return s;
}

Subspace Subspace::span_rows(const FieldSpec& f, std::size_t n,
                             const std::vector<Vec>& rows) {
  return span(Matrix::from_row_vectors(f, n, rows));
}

Subspace Subspace::zero(const FieldSpec& f, std::size_t n) {
  Subspace s;
  s.basis_ = Matrix(f, 0, n);
  return s;
}

Subspace Subspace::full(const FieldSpec& f, std::size_t n) {
  Subspace s;
  s.basis_ = Matrix::identity(f, n);
  for (std::size_t i = 0; i < n; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::trusted_rref(Matrix rows, std::vector<std::size_t> pivots) {
  Subspace s;
  s.basis_ = std::move(rows);
  s.pivots_ = std::move(pivots);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  Vec w = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar& c = w[pivots_[i]];
    if (c.is_zero()) continue;
    Scalar f = c;  // pivot entries are 1
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= f * basis_(i, j);
  }
  return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim())
    fail(Errc::AmbientMismatch, "ambient dimensions differ");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis().row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return basis_ == o.basis_;
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
  if (auto c = ambient_dim() <=> o.ambient_dim(); c != 0) return c;
  if (auto c = dim() <=> o.dim(); c != 0) return c;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < ambient_dim(); ++j)
      if (auto c = basis_(i, j) <=> o.basis_(i, j); c != 0) return c;
  return std::strong_ordering::equal;
}

Subspace kernel(const Matrix& m) {
  const FieldSpec& f = m.field();
  std::size_t n = m.cols();
  if (m.rows() == 0) return Subspace::full(f, n);
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (std::size_t fcol = 0; fcol < n; ++fcol) {
    if (is_pivot[fcol]) continue;
    Vec x(n, Scalar::zero(f));
    x[fcol] = Scalar::one(f);
    for (std::size_t i = 0; i < rr.rank(); ++i)
      x[rr.pivots[i]] = -rr.r(i, fcol);
    rows.push_back(std::move(x));
  }
  return Subspace::span_rows(f, n, rows);
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) fail(Errc::AmbientMismatch, "rhs length mismatch");
  const FieldSpec& f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RrefResult rr = rref(aug);
  Vec x(m.cols(), Scalar::zero(f));
  for (std::size_t i = 0; i < rr.rank(); ++i) {
    if (rr.pivots[i] == m.cols()) return std::nullopt;  // 0 = 1 row
    x[rr.pivots[i]] = rr.r(i, m.cols());
  }
  return x;
}

LatticeResult lattice(const Subspace& w1, const Subspace& w2) {
  if (w1.ambient_dim() != w2.ambient_dim() || w1.field() != w2.field())
    fail(Errc::AmbientMismatch, "subspaces live in different ambient spaces");
  Subspace sum = Subspace::span(w1.basis().vstack(w2.basis()));
  Subspace a1 = kernel(w1.basis());
  Subspace a2 = kernel(w2.basis());
  Subspace inter = kernel(a1.basis().vstack(a2.basis()));
  return {std::move(sum), std::move(inter)};
}

Subspace image(const Subspace& w, const Matrix& a) {
  if (a.cols() != w.ambient_dim())
    fail(Errc::AmbientMismatch, "operator does not act on the ambient space");
  return Subspace::span(w.basis() * a.transpose());
}

Matrix completion_rows(const Subspace& inner, const Subspace& outer) {
  std::size_t n = inner.ambient_dim();
  Matrix acc = inner.basis();
  std::size_t rank = Subspace::span(acc).dim();
  std::vector<Vec> added;
  for (std::size_t i = 0; i < outer.dim(); ++i) {
    Vec cand = outer.basis().row(i);
    Matrix trial = acc.vstack(Matrix::from_row_vectors(inner.field(), n, {cand}));
    std::size_t r = Subspace::span(trial).dim();
    if (r > rank) {
      rank = r;
      acc = trial;
      added.push_back(std::move(cand));
    }
  }
  return Matrix::from_row_vectors(inner.field(), n, added);
}

BigInt gaussian_binomial(const BigInt& q, int n, int d) {
  if (d < 0 || d > n) return 0;
  BigInt num = 1, den = 1;
  for (int i = 0; i < d; ++i) {
    num *= boost::multiprecision::pow(q, n - i) - 1;
    den *= boost::multiprecision::pow(q, i + 1) - 1;
  }
  return num / den;
}

BigInt subspace_count(const FieldSpec& f, int n, int d) {
  if (!f.is_prime_field())
    fail(Errc::FieldNotFinite, "subspace counting needs a finite field");
  return gaussian_binomial(BigInt(f.p), n, d);
}

void for_each_subspace(const FieldSpec& f, int n, int d,
                       const std::function<void(const Subspace&)>& fn,
                       std::uint64_t cap) {
  if (!f.is_prime_field())
    fail(Errc::FieldNotFinite, "subspace enumeration needs a finite field");
  if (d < 0 || d > n) return;
  BigInt total = subspace_count(f, n, d);
  if (total > BigInt(cap))
    fail(Errc::EnumerationTooLarge,
         "would enumerate " + total.str() + " subspaces (cap " +
             std::to_string(cap) + ")");
  if (d == 0) {
    fn(Subspace::zero(f, n));
    return;
  }
  std::int64_t p = f.p;
  // pivot patterns = d-subsets of columns, lexicographic
  std::vector<std::size_t> piv(d);
  for (int i = 0; i < d; ++i) piv[i] = i;
  auto next_combination = [&]() -> bool {
    int i = d - 1;
    while (i >= 0 && piv[i] == static_cast<std::size_t>(n - d + i)) --i;
    if (i < 0) return false;
    ++piv[i];
    for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
    return true;
  };
  do {
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    // free slots (row, col): col > pivot(row) and col not a pivot
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < d; ++i)
      for (int j = static_cast<int>(piv[i]) + 1; j < n; ++j)
        if (!is_pivot[j]) slots.emplace_back(i, j);
    std::vector<std::int64_t> digits(slots.size(), 0);
    for (;;) {
      Matrix basis(f, d, n);
      for (int i = 0; i < d; ++i) basis(i, piv[i]) = Scalar::one(f);
      for (std::size_t s = 0; s < slots.size(); ++s)
        basis(slots[s].first, slots[s].second) =
            Scalar::from_residue(f, digits[s]);
      fn(Subspace::trusted_rref(std::move(basis), piv));
      // little-endian increment
      std::size_t s = 0;
      while (s < digits.size()) {
        if (++digits[s] < p) break;
        digits[s] = 0;
        ++s;
      }
      if (s == digits.size()) break;
    }
  } while (next_combination());
}

}  // namespace invgen
