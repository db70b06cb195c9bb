#pragma once

#include "comat/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace comat {

/// Sparse exact matrix. Entries are kept in a sorted map with no stored
/// zeros, so equality of representations is equality of matrices.
class Matrix {
 public:
  using Index = std::pair<int, int>;

  Matrix() = default;
  Matrix(Field f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw algebra_error("Matrix: negative dimension");
  }

  static Matrix identity(Field f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
  }
  static Matrix zero(Field f, int rows, int cols) { return Matrix(f, rows, cols); }

  /// Column vector from entries.
  static Matrix column(Field f, const std::vector<Scalar>& v) {
    Matrix m(f, static_cast<int>(v.size()), 1);
    for (int i = 0; i < static_cast<int>(v.size()); ++i) m.set(i, 0, v[i]);
    return m;
  }

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::map<Index, Scalar>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Scalar get(int r, int c) const {
    check_index(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Scalar::zero(field_) : it->second;
  }

  void set(int r, int c, const Scalar& v) {
    check_index(r, c);
    if (!(v.field() == field_)) throw algebra_error("Matrix: scalar field mismatch");
    if (v.is_zero())
      entries_.erase({r, c});
    else
      entries_[{r, c}] = v;
  }

  void add_to(int r, int c, const Scalar& v) { set(r, c, get(r, c) + v); }

  Matrix operator+(const Matrix& o) const {
    check_shape(o);
    Matrix out = *this;
    for (const auto& [ij, v] : o.entries_) out.add_to(ij.first, ij.second, v);
    return out;
  }
  Matrix operator-(const Matrix& o) const { return *this + o.scaled(Scalar::of(field_, -1)); }

  Matrix scaled(const Scalar& s) const {
    Matrix out(field_, rows_, cols_);
    if (s.is_zero()) return out;
    for (const auto& [ij, v] : entries_) out.set(ij.first, ij.second, v * s);
    return out;
  }

  Matrix operator*(const Matrix& o) const {
    if (!(field_ == o.field_)) throw algebra_error("Matrix: field mismatch in product");
    if (cols_ != o.rows_) throw algebra_error("Matrix: shape mismatch in product");
    // group right factor by row for sparse accumulation
    std::vector<std::vector<std::pair<int, Scalar>>> by_row(o.rows_);
    for (const auto& [ij, v] : o.entries_) by_row[ij.first].push_back({ij.second, v});
    Matrix out(field_, rows_, o.cols_);
    for (const auto& [ij, v] : entries_) {
      for (const auto& [k, w] : by_row[ij.second]) out.add_to(ij.first, k, v * w);
    }
    return out;
  }

  Matrix transpose() const {
    Matrix out(field_, cols_, rows_);
    for (const auto& [ij, v] : entries_) out.set(ij.second, ij.first, v);
    return out;
  }

  /// Kronecker product in the lexicographic (left factor major) basis.
  Matrix tensor(const Matrix& o) const {
    if (!(field_ == o.field_)) throw algebra_error("Matrix: field mismatch in tensor");
    Matrix out(field_, rows_ * o.rows_, cols_ * o.cols_);
    for (const auto& [ij, v] : entries_)
      for (const auto& [kl, w] : o.entries_)
        out.set(ij.first * o.rows_ + kl.first, ij.second * o.cols_ + kl.second, v * w);
    return out;
  }

  Matrix submatrix_cols(const std::vector<int>& cols) const {
    Matrix out(field_, rows_, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
      for (int i = 0; i < rows_; ++i) out.set(i, j, get(i, cols[j]));
    return out;
  }

  Matrix col(int j) const { return submatrix_cols({j}); }

  /// Horizontal concatenation [this | o].
  Matrix hcat(const Matrix& o) const {
    if (rows_ != o.rows_ || !(field_ == o.field_)) throw algebra_error("Matrix: hcat mismatch");
    Matrix out(field_, rows_, cols_ + o.cols_);
    for (const auto& [ij, v] : entries_) out.set(ij.first, ij.second, v);
    for (const auto& [ij, v] : o.entries_) out.set(ij.first, cols_ + ij.second, v);
    return out;
  }

  /// Vertical concatenation [this ; o].
  Matrix vcat(const Matrix& o) const {
    if (cols_ != o.cols_ || !(field_ == o.field_)) throw algebra_error("Matrix: vcat mismatch");
    Matrix out(field_, rows_ + o.rows_, cols_);
    for (const auto& [ij, v] : entries_) out.set(ij.first, ij.second, v);
    for (const auto& [ij, v] : o.entries_) out.set(rows_ + ij.first, ij.second, v);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      s += i == 0 ? "[" : " ";
      for (int j = 0; j < cols_; ++j) s += (j ? " " : "[") + get(i, j).str();
      s += "]";
      s += i + 1 == rows_ ? "]" : "\n";
    }
    if (rows_ == 0) s = "[]";
    return s;
  }

 private:
  void check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw algebra_error("Matrix: index out of range");
  }
  void check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
      throw algebra_error("Matrix: shape or field mismatch");
  }

  Field field_{};
  int rows_ = 0;
  int cols_ = 0;
  std::map<Index, Scalar> entries_;
};

}  // namespace comat
