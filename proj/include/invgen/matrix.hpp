#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "invgen/field.hpp"

namespace invgen {

using Vec = std::vector<Scalar>;

// Dense exact matrix, row-major.  All entries share one FieldSpec.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_rows(const FieldSpec& f,
                          const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix from_row_vectors(const FieldSpec& f, std::size_t cols,
                                 const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  Matrix inverse() const;  // throws InvalidInput on singular input

  // stack rows of b below *this (column counts must agree)
  Matrix vstack(const Matrix& b) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Vec flatten() const { return a_; }  // row-major
  static Matrix unflatten(const FieldSpec& f, std::size_t rows,
                          std::size_t cols, const Vec& entries);

  Scalar trace() const;
  std::string str() const;  // for diagnostics

 private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

Vec apply(const Matrix& a, const Vec& v);       // a * v (column convention)
Scalar dot(const Vec& a, const Vec& b);         // plain coordinate dot product
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Scalar& c);
bool vec_is_zero(const Vec& v);

}  // namespace invgen
