#include "invgen/matrix.hpp"

#include <sstream>

namespace invgen {

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(Errc::InvalidInput, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar::of(f, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_row_vectors(const FieldSpec& f, std::size_t cols,
                                const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) fail(Errc::InvalidInput, "row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) a_[i * cols_ + j] = v[j];
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
    fail(Errc::AmbientMismatch, "matrix shapes differ in +");
  Matrix m = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
    fail(Errc::AmbientMismatch, "matrix shapes differ in -");
  Matrix m = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] -= o.a_[k];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || field_ != o.field_)
    fail(Errc::AmbientMismatch, "matrix shapes differ in *");
  Matrix m(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        m(i, j) += aik * o(k, j);
    }
  }
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m = *this;
  for (auto& x : m.a_) x *= c;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Matrix Matrix::vstack(const Matrix& b) const {
  if (rows_ == 0 && cols_ == 0) return b;
  if (b.rows_ == 0 && b.cols_ == 0) return *this;
  if (cols_ != b.cols_ || field_ != b.field_)
    fail(Errc::AmbientMismatch, "column counts differ in vstack");
  Matrix m(field_, rows_ + b.rows_, cols_);
  m.a_.assign(a_.begin(), a_.end());
  m.a_.insert(m.a_.end(), b.a_.begin(), b.a_.end());
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         a_ == o.a_;
}

Matrix Matrix::unflatten(const FieldSpec& f, std::size_t rows,
                         std::size_t cols, const Vec& entries) {
  if (entries.size() != rows * cols)
    fail(Errc::InvalidInput, "entry count mismatch in unflatten");
  Matrix m(f, rows, cols);
  m.a_ = entries;
  return m;
}

Scalar Matrix::trace() const {
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << (*this)(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Vec apply(const Matrix& a, const Vec& v) {
  if (v.size() != a.cols()) fail(Errc::AmbientMismatch, "shape mismatch in apply");
  Vec out(a.rows(), Scalar::zero(a.field()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size() || a.empty())
    fail(Errc::AmbientMismatch, "shape mismatch in dot");
  Scalar s = Scalar::zero(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec vec_scaled(const Vec& a, const Scalar& c) {
  Vec out = a;
  for (auto& x : out) x *= c;
  return out;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::inverse() const {
  if (!is_square()) fail(Errc::InvalidInput, "inverse of non-square matrix");
  std::size_t n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = Scalar::one(field_);
  }
  // Gauss-Jordan with first-nonzero pivoting
  std::size_t pr = 0;
  for (std::size_t c = 0; c < n && pr < n; ++c) {
    std::size_t sel = pr;
    while (sel < n && aug(sel, c).is_zero()) ++sel;
    if (sel == n) fail(Errc::InvalidInput, "matrix singular");
    if (sel != pr)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(sel, j), aug(pr, j));
    Scalar inv = aug(pr, c).inverse();
    for (std::size_t j = 0; j < 2 * n; ++j) aug(pr, j) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == pr || aug(r, c).is_zero()) continue;
      Scalar f = aug(r, c);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(r, j) -= f * aug(pr, j);
    }
    ++pr;
  }
  if (pr < n) fail(Errc::InvalidInput, "matrix singular");
  Matrix out(field_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

}  // namespace invgen
