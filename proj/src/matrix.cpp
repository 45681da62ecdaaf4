#include "incalg/matrix.hpp"

#include <sstream>
#include <utility>

#include "incalg/errors.hpp"

namespace incalg {

Mat::Mat(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

Mat::Mat(std::initializer_list<std::initializer_list<std::int64_t>> rows, Field field)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()), field_(field) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (const auto v : row) data_.emplace_back(v, field);
  }
}

Mat Mat::identity(std::size_t n, Field field) {
  Mat m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Mat Mat::from_columns(std::size_t rows, std::span<const Mat> columns, Field field) {
  std::size_t total = 0;
  for (const auto& c : columns) {
    if (c.rows() != rows) throw DimensionMismatch("from_columns: row count mismatch");
    total += c.cols();
  }
  Mat out(rows, total, field);
  std::size_t offset = 0;
  for (const auto& c : columns) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      for (std::size_t i = 0; i < rows; ++i) out(i, offset + j) = c(i, j);
    }
    offset += c.cols();
  }
  return out;
}

bool Mat::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Mat Mat::column(std::size_t c) const {
  Mat out(rows_, 1, field_);
  for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, c);
  return out;
}

Mat Mat::select_columns(std::span<const std::size_t> cols) const {
  Mat out(rows_, cols.size(), field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
  }
  return out;
}

Mat Mat::select_rows(std::span<const std::size_t> rows) const {
  Mat out(rows.size(), cols_, field_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(rows[i], j);
  }
  return out;
}

Mat Mat::hstack(const Mat& other) const {
  if (rows_ != other.rows_) throw DimensionMismatch("hstack: row count mismatch");
  Mat out(rows_, cols_ + other.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
  }
  return out;
}

Mat Mat::vstack(const Mat& other) const {
  if (cols_ != other.cols_) throw DimensionMismatch("vstack: column count mismatch");
  Mat out(rows_ + other.rows_, cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
  }
  for (std::size_t i = 0; i < other.rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(rows_ + i, j) = other(i, j);
  }
  return out;
}

Mat Mat::change_field(Field field) const {
  Mat out(rows_, cols_, field);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    const auto& s = data_[k];
    if (field_.is_rational()) {
      out.data_[k] = Scalar(s.rational(), field);
    } else {
      out.data_[k] = Scalar(static_cast<std::int64_t>(s.residue()), field);
    }
  }
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
  Mat out(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shapes differ");
  Mat out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference: shapes differ");
  Mat out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ", ";
      os << m(i, j);
    }
    os << "]";
  }
  return os << "]";
}

// ---------------------------------------------------------------- elimination

RowEchelon row_echelon(Mat a) {
  RowEchelon out;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
    }
    if (!a(r, c).is_one()) {
      const Scalar inv = a(r, c).inverse();
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(r, j).is_zero()) a(r, j) *= inv;
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const Mat& a) { return row_echelon(a).pivots.size(); }

Mat kernel_basis(const Mat& a) {
  const auto ech = row_echelon(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (const auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Mat k(n, free_cols.size(), a.field());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    const std::size_t f = free_cols[t];
    k(f, t) = Scalar::one(a.field());
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      const Scalar& v = ech.reduced(i, f);
      if (!v.is_zero()) k(ech.pivots[i], t) = -v;
    }
  }
  return k;
}

Mat image_basis(const Mat& a) {
  const auto ech = row_echelon(a);
  return a.select_columns(ech.pivots);
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: right-hand side has wrong length");
  const auto ech = row_echelon(a.hstack(b));
  Mat x(a.cols(), b.cols(), a.field());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    const std::size_t p = ech.pivots[i];
    if (p >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = ech.reduced(i, a.cols() + j);
  }
  return x;
}

Mat solve_or_throw(const Mat& a, const Mat& b) {
  auto x = solve(a, b);
  if (!x) throw NoSolution("linear system has no solution");
  return std::move(*x);
}

QuotientBasis quotient_basis(std::size_t ambient_dim, const Mat& subspace) {
  if (subspace.rows() != ambient_dim) throw DimensionMismatch("quotient_basis: subspace has wrong ambient dimension");
  const Field f = subspace.field();
  const auto ech = row_echelon(subspace.transpose());
  std::vector<bool> is_pivot(ambient_dim, false);
  for (const auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (!is_pivot[c]) rest.push_back(c);
  }
  QuotientBasis q{Mat(ambient_dim, rest.size(), f), Mat(rest.size(), ambient_dim, f)};
  for (std::size_t t = 0; t < rest.size(); ++t) {
    q.representatives(rest[t], t) = Scalar::one(f);
    q.projection(t, rest[t]) = Scalar::one(f);
  }
  // A pivot coordinate e_p is congruent to minus the non-pivot part of its row.
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    for (std::size_t t = 0; t < rest.size(); ++t) {
      const Scalar& v = ech.reduced(r, rest[t]);
      if (!v.is_zero()) q.projection(t, ech.pivots[r]) = -v;
    }
  }
  return q;
}

Mat extend_basis(const Mat& base, const Mat& candidates) {
  if (base.rows() != candidates.rows()) throw DimensionMismatch("extend_basis: ambient dimensions differ");
  const auto ech = row_echelon(base.hstack(candidates));
  std::vector<std::size_t> chosen;
  for (const auto p : ech.pivots) {
    if (p >= base.cols()) chosen.push_back(p - base.cols());
  }
  return candidates.select_columns(chosen);
}

}  // namespace incalg
