#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "quadform/rational.hpp"

namespace quadform {

// Dense row-major matrix over an exact ring (Int, Rat, F2).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : init) {
      assert(static_cast<int>(row.size()) == cols_);
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) {
    assert(0 <= i && i < rows_ && 0 <= j && j < cols_);
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const T& operator()(int i, int j) const {
    assert(0 <= i && i < rows_ && 0 <= j && j < cols_);
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    assert(static_cast<int>(x.size()) == cols_);
    std::vector<T> y(rows_, T(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == T(0))) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  std::vector<T> column(int j) const {
    std::vector<T> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void set_column(int j, const std::vector<T>& c) {
    assert(static_cast<int>(c.size()) == rows_);
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0))) return false;
    return true;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  void swap_rows(int a, int b) {
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(int a, int b) {
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row a += f * row b
  void add_row(int a, int b, const T& f) {
    for (int j = 0; j < cols_; ++j) (*this)(a, j) += f * (*this)(b, j);
  }
  void add_col(int a, int b, const T& f) {
    for (int i = 0; i < rows_; ++i) (*this)(i, a) += f * (*this)(i, b);
  }
  void scale_row(int a, const T& f) {
    for (int j = 0; j < cols_; ++j) (*this)(a, j) *= f;
  }
  void scale_col(int a, const T& f) {
    for (int i = 0; i < rows_; ++i) (*this)(i, a) *= f;
  }

  // concatenate columns [A | B]
  static Matrix hcat(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ || a.cols_ == 0 || b.cols_ == 0);
    int rows = a.cols_ ? a.rows_ : b.rows_;
    Matrix r(rows, a.cols_ + b.cols_);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
      for (int j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
    }
    return r;
  }

  // concatenate rows [A ; B]
  static Matrix vcat(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.cols_ || a.rows_ == 0 || b.rows_ == 0);
    int cols = a.rows_ ? a.cols_ : b.cols_;
    Matrix r(a.rows_ + b.rows_, cols);
    for (int j = 0; j < cols; ++j) {
      for (int i = 0; i < a.rows_; ++i) r(i, j) = a(i, j);
      for (int i = 0; i < b.rows_; ++i) r(a.rows_ + i, j) = b(i, j);
    }
    return r;
  }

  template <typename U, typename Fn>
  Matrix<U> map(Fn fn) const {
    Matrix<U> r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = fn((*this)(i, j));
    return r;
  }

 private:
  int rows_{0};
  int cols_{0};
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline RatMatrix to_rat(const IntMatrix& m) {
  return m.template map<Rat>([](const Int& x) { return Rat(x); });
}

inline Matrix<F2> to_f2(const IntMatrix& m) {
  return m.template map<F2>([](const Int& x) { return F2(x); });
}

template <typename T>
std::vector<T> scaled(const std::vector<T>& v, const T& f) {
  std::vector<T> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = f * v[i];
  return r;
}

template <typename T>
std::vector<T> vec_add(const std::vector<T>& a, const std::vector<T>& b) {
  assert(a.size() == b.size());
  std::vector<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <typename T>
std::vector<T> vec_sub(const std::vector<T>& a, const std::vector<T>& b) {
  assert(a.size() == b.size());
  std::vector<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace quadform
