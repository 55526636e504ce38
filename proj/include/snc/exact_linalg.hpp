#pragma once

// Exact integer / rational dense matrices. Everything here is arbitrary
// precision; there is no fixed-width fast path.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "snc/error.hpp"

namespace snc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      fail(ErrorCode::DimensionMismatch, "matrix entry count does not match rows*cols");
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  template <class U>
  static Matrix from_rows(std::initializer_list<std::initializer_list<U>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
      std::size_t j = 0;
      for (const auto& v : row) m(i, j++) = T(v);
      ++i;
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) fail(ErrorCode::DimensionMismatch, "column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const noexcept { return data_; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }
  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator-(const Matrix& a) {
    Matrix out = a;
    for (auto& v : out.data_) v = -v;
    return out;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) fail(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// U * m * V == d, with U and V unimodular and d diagonal with
/// d_0 | d_1 | ... and every d_i >= 0.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  std::vector<Integer> invariant_factors() const;  // nonzero diagonal entries
  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Bareiss fraction-free determinant.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// Reduced row echelon form; pivot column indices are appended to `pivots`.
RatMatrix reduced_row_echelon(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Columns form a basis of ker(m). The result has m.cols() rows.
RatMatrix rational_kernel_basis(const RatMatrix& m);

/// Some x with a * x == b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

RatMatrix inverse(const RatMatrix& m);
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Extends the given columns (ℚ-independent) to a unimodular basis of ℤ^ambient_rank.
/// Returns nullopt when they generate a proper finite-index sublattice of
/// their saturation. Throws DependentInput for ℚ-dependent columns.
std::optional<IntMatrix> extend_to_lattice_basis(const IntMatrix& vectors, std::size_t ambient_rank);

/// Index [saturation : span] of the lattice spanned by the columns; throws
/// DependentInput when they are ℚ-dependent.
Integer lattice_index(const IntMatrix& vectors);

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

Integer gcd(const IntVector& v);
/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(IntVector v);

std::string to_string(const Rational& q);
/// Accepts "a", "-a", "a/b".
Rational parse_rational(const std::string& text);

}  // namespace snc
