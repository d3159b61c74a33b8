#ifndef GSPIN_EXACT_MATRIX_HPP
#define GSPIN_EXACT_MATRIX_HPP

#include "gspin/exact/rat.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gspin {

// Dense row-major matrix over a commutative ring T.  T must be constructible
// from int (0 and 1) and support +, -, *.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) { }
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols)
      throw std::invalid_argument("matrix data size mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_)
        throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = T(1);
    return m;
  }
  static Matrix column(const std::vector<T>& v) { return Matrix(v.size(), 1, v); }
  static Matrix row(const std::vector<T>& v) { return Matrix(1, v.size(), v); }
  static Matrix diagonal(const std::vector<T>& v) {
    Matrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      m(i, i) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data_mut() { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
      throw std::out_of_range("matrix block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j)
        b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
      throw std::out_of_range("matrix block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j)
        (*this)(r0 + i, c0 + j) = b(i, j);
  }

  std::vector<T> col_vector(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0)))
        return false;
    return true;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& x : data_)
      out.push_back(f(x));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
      r.data_[k] = T(0) - data_[k];
    return r;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_)
      x = s * x;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == T(0))
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) += x * b(k, j);
      }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Mat = Matrix<Rat>;
using RatVec = std::vector<Rat>;

// Block diagonal assembly of square or rectangular pieces.
template <class T>
Matrix<T> block_diag(const std::vector<Matrix<T>>& parts) {
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    r += p.rows();
    c += p.cols();
  }
  Matrix<T> m(r, c);
  r = c = 0;
  for (const auto& p : parts) {
    m.set_block(r, c, p);
    r += p.rows();
    c += p.cols();
  }
  return m;
}

// Determinant by expansion over column subsets, valid over any commutative ring.
template <class T>
T det_by_minors(const Matrix<T>& a) {
  if (!a.square())
    throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0)
    return T(1);
  if (n > 24)
    throw std::invalid_argument("det_by_minors limited to n <= 24");
  // minors[mask] = det of rows 0..popcount(mask)-1 against the columns in mask
  std::vector<T> minors(std::size_t(1) << n, T(0));
  minors[0] = T(1);
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    T acc(0);
    int sign = 1;
    for (std::size_t j = n; j-- > 0;) {
      if (!(mask & (std::size_t(1) << j)))
        continue;
      // sign from the position of column j among the chosen columns, counted from the right
      const T& e = a(row, j);
      if (!(e == T(0))) {
        T term = e * minors[mask & ~(std::size_t(1) << j)];
        if (sign > 0)
          acc += term;
        else
          acc -= term;
      }
      sign = -sign;
    }
    minors[mask] = acc;
  }
  return minors.back();
}

// Matrix of cofactors transposed.
template <class T>
Matrix<T> adjugate(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  Matrix<T> adj(n, n);
  if (n == 1) {
    adj(0, 0) = T(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<T> minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i)
          continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j)
            continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      T d = det_by_minors(minor);
      adj(j, i) = (i + j) % 2 == 0 ? d : T(0) - d;
    }
  return adj;
}

// Inverse of an upper or lower unipotent matrix by the finite Neumann series.
template <class T>
Matrix<T> unipotent_inverse(const Matrix<T>& u) {
  const std::size_t n = u.rows();
  Matrix<T> nil = u - Matrix<T>::identity(n);
  Matrix<T> result = Matrix<T>::identity(n);
  Matrix<T> power = Matrix<T>::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * nil;
    if (k % 2 == 1)
      result -= power;
    else
      result += power;
  }
  return result;
}

std::string to_string(const Mat& m);

}  // namespace gspin

#endif
