#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "incalg/scalar.hpp"

namespace incalg {

/// Dense matrix over an exact field. Zero-sized matrices are legal; a
/// 0 x k or k x 0 matrix is the unique map into or out of the zero space.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, Field field = Field::rationals());
  Mat(std::initializer_list<std::initializer_list<std::int64_t>> rows, Field field = Field::rationals());

  static Mat identity(std::size_t n, Field field = Field::rationals());
  static Mat zero(std::size_t rows, std::size_t cols, Field field = Field::rationals()) {
    return Mat(rows, cols, field);
  }
  /// Columns of `columns` placed side by side; all must share a row count.
  static Mat from_columns(std::size_t rows, std::span<const Mat> columns, Field field);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] Field field() const { return field_; }
  [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { (*this)(r, c) = Scalar(v, field_); }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Mat transpose() const;
  [[nodiscard]] Mat column(std::size_t c) const;
  [[nodiscard]] Mat select_columns(std::span<const std::size_t> cols) const;
  [[nodiscard]] Mat select_rows(std::span<const std::size_t> rows) const;
  /// [this | other]
  [[nodiscard]] Mat hstack(const Mat& other) const;
  /// [this ; other]
  [[nodiscard]] Mat vstack(const Mat& other) const;
  /// Same entries read in another field (rationals must have denominators
  /// invertible there).
  [[nodiscard]] Mat change_field(Field field) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  [[nodiscard]] Mat scaled(const Scalar& s) const;
  friend bool operator==(const Mat& a, const Mat& b);

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::rationals();
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. The pivot of each column is its first nonzero
/// entry at or below the current row; no other pivoting heuristics.
RowEchelon row_echelon(Mat a);

std::size_t rank(const Mat& a);

/// Columns form a basis of { v : a v = 0 }.
Mat kernel_basis(const Mat& a);

/// A subset of the columns of `a` forming a basis of its column space.
Mat image_basis(const Mat& a);

/// Some x with a x = b, or nullopt. `b` is a column vector (or a matrix, in
/// which case every column is solved simultaneously).
std::optional<Mat> solve(const Mat& a, const Mat& b);

/// Like solve, throwing NoSolution instead of returning nullopt.
Mat solve_or_throw(const Mat& a, const Mat& b);

/// Coset representatives of ambient / span(subspace) plus the projection
/// onto their coordinates: projection * representatives = I and
/// projection * subspace = 0.
struct QuotientBasis {
  Mat representatives;  // ambient_dim x q
  Mat projection;       // q x ambient_dim
};

QuotientBasis quotient_basis(std::size_t ambient_dim, const Mat& subspace);

/// Columns of `candidates` that extend a basis of span(base) to a basis of
/// span(base) + span(candidates), chosen greedily left to right.
Mat extend_basis(const Mat& base, const Mat& candidates);

}  // namespace incalg
