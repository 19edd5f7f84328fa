#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "charpoly/scalar.hpp"

namespace charpoly {

template <class T>
bool entry_is_finite(const T& x) {
  return is_finite(x);
}

template <class T>
bool entry_is_finite(const std::complex<T>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense n x n matrix stored row-major.
///
/// Construction from explicit entries rejects non-finite values; element
/// access afterwards is unchecked so the matrix can serve as a workspace.
template <class T>
class Matrix {
 public:
  using value_type = T;

  explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(0)) {
    if (n == 0) throw std::invalid_argument("Matrix: dimension must be at least 1");
  }

  Matrix(std::size_t n, std::vector<T> row_major) : n_(n), data_(std::move(row_major)) {
    if (n == 0) throw std::invalid_argument("Matrix: dimension must be at least 1");
    if (data_.size() != n * n) {
      throw std::invalid_argument("Matrix: expected " + std::to_string(n * n) + " entries, got " +
                                  std::to_string(data_.size()));
    }
    for (const T& x : data_) {
      if (!entry_is_finite(x)) throw std::invalid_argument("Matrix: non-finite entry");
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t size() const { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  std::span<const T> entries() const { return data_; }

  /// Element-wise conversion to another scalar type (e.g. narrowing to the
  /// Reduced tier).
  template <class U>
  Matrix<U> cast() const {
    std::vector<U> out;
    out.reserve(data_.size());
    for (const T& x : data_) out.push_back(static_cast<U>(x));
    return Matrix<U>(n_, std::move(out));
  }

  T trace() const {
    T s(0);
    for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("Matrix product: dimension mismatch");
  Matrix<T> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const T aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t(j, i) = a(i, j);
  return t;
}

template <class T>
double max_abs(const Matrix<T>& a) {
  double m = 0.0;
  for (const T& x : a.entries()) m = std::max(m, std::fabs(to_double(x)));
  return m;
}

/// I + x*U
template <class T>
Matrix<T> shifted_identity(const Matrix<T>& u, T x) {
  Matrix<T> m(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) m(i, j) = x * u(i, j);
    m(i, i) += T(1);
  }
  return m;
}

}  // namespace charpoly
