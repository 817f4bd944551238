#pragma once

// Dense row-major matrices over exact scalars. Sizes in this library stay
// around 30x30, so everything is plain O(n^3) textbook linear algebra.

#include <cstddef>
#include <initializer_list>

#include "latcusp/numeric.hpp"

namespace latcusp {

template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(size_t rows, size_t cols, std::initializer_list<T> entries)
      : rows_(rows), cols_(cols), data_(entries) {
    if (data_.size() != rows * cols) throw SpecError("matrix literal has wrong size");
  }

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw SpecError("matrix product: dimension mismatch");
    Mat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != v.size()) throw SpecError("matrix-vector product: dimension mismatch");
    std::vector<T> r(rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Mat operator-() const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
  }

  Mat operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw SpecError("matrix sum: dimension mismatch");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    for (const T& x : data_)
      if (x != 0) return false;
    return true;
  }

  std::vector<T> col(size_t j) const {
    std::vector<T> c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<T> row(size_t i) const {
    std::vector<T> r(cols_);
    for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  void set_col(size_t j, const std::vector<T>& c) {
    for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  void swap_rows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row a += c * row b
  void add_row(size_t a, size_t b, const T& c) {
    for (size_t j = 0; j < cols_; ++j) (*this)(a, j) += c * (*this)(b, j);
  }
  // col a += c * col b
  void add_col(size_t a, size_t b, const T& c) {
    for (size_t i = 0; i < rows_; ++i) (*this)(i, a) += c * (*this)(i, b);
  }
  void scale_row(size_t a, const T& c) {
    for (size_t j = 0; j < cols_; ++j) (*this)(a, j) *= c;
  }

 private:
  size_t rows_, cols_;
  std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

inline bool is_integral(const RatMat& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!is_integral(m(i, j))) return false;
  return true;
}

inline IntMat to_int(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = to_int(m(i, j));
  return r;
}

// Fraction-free (Bareiss) determinant.
Int det(const IntMat& a);

// Exact determinant by Gaussian elimination.
Rat det(const RatMat& a);

// Exact inverse by Gauss-Jordan; throws SpecError on a singular input.
RatMat inverse(const RatMat& a);

// v^T * g * w, the standard pairing helper.
template <class T, class S>
Rat pair_with(const Mat<T>& g, const std::vector<S>& v, const std::vector<S>& w) {
  if (v.size() != g.rows() || w.size() != g.cols()) throw SpecError("pairing: dimension mismatch");
  Rat acc;
  for (size_t i = 0; i < g.rows(); ++i) {
    if (v[i] == 0) continue;
    Rat line;
    for (size_t j = 0; j < g.cols(); ++j) {
      if (w[j] == 0) continue;
      line += Rat(g(i, j)) * Rat(w[j]);
    }
    acc += Rat(v[i]) * line;
  }
  return acc;
}

}  // namespace latcusp
