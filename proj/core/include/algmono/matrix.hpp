#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algmono/laurent.hpp"
#include "algmono/scalar.hpp"

namespace algmono {

/// Dense row-major matrix. Empty dimensions are allowed (0 x n, n x 0).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix out(cols_, rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    Matrix out(r1 - r0, c1 - c0, T(0));
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) out(i - r0, j - c0) = (*this)(i, j);
    return out;
  }

  /// [this | other]
  Matrix hconcat(const Matrix& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("hconcat: row mismatch");
    Matrix out(rows_, cols_ + other.cols_, T(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
    }
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (!is_zero_value((*this)(src, j))) (*this)(dst, j) += factor * (*this)(src, j);
  }
  /// col[dst] += col[src] * factor
  void add_col_multiple(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t i = 0; i < rows_; ++i)
      if (!is_zero_value((*this)(i, src))) (*this)(i, dst) += (*this)(i, src) * factor;
  }
  void scale_row(std::size_t r, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) *= factor;
  }
  void scale_col(std::size_t c, const T& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) *= factor;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!is_zero_value(v)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix out(a.rows_, b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero_value(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!is_zero_value(b(k, j))) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: dimension mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static bool is_zero_value(const T& v) {
    if constexpr (requires { v.is_zero(); }) return v.is_zero();
    else return v == T(0);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Matrix over Lambda = k[t, t^-1].
using LambdaMatrix = Matrix<LaurentPoly>;
/// Matrix over the coefficient field k.
using KMatrix = Matrix<Scalar>;
using IntMatrix = Matrix<long>;

using KVector = std::vector<Scalar>;

KMatrix to_field(const IntMatrix& m, FieldSpec field);
KMatrix to_field(const KMatrix& m, FieldSpec field);
LambdaMatrix to_lambda(const KMatrix& m);

/// Rank over the field of the entries. Rational matrices are reduced
/// fraction-free (Bareiss) on integer-scaled rows; F_p matrices by Gaussian
/// elimination.
std::size_t rank(const KMatrix& m);
/// Basis of the right null space {x : m x = 0}, in reduced echelon form.
std::vector<KVector> kernel_basis(const KMatrix& m);
KVector mat_vec(const KMatrix& m, const KVector& x);
/// Matrix with the given vectors as columns (rows = `dim` when the list is empty).
KMatrix from_columns(const std::vector<KVector>& columns, std::size_t dim);

/// Determinant of a square integer matrix (Bareiss, exact).
mpz_class determinant(const IntMatrix& m);
/// Determinant over Lambda (fraction-free elimination with exact division).
LaurentPoly determinant(const LambdaMatrix& m);

std::string to_string(const LambdaMatrix& m);

}  // namespace algmono
