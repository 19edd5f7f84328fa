#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "charpoly/matrix.hpp"

namespace charpoly {

/// Upper Hessenberg matrix: every entry below the first subdiagonal is an
/// exact zero.
template <class T>
class HessenbergMatrix {
 public:
  /// Wraps a matrix that already has the Hessenberg zero pattern; throws
  /// std::invalid_argument otherwise.
  static HessenbergMatrix from_dense(Matrix<T> m) {
    const std::size_t n = m.size();
    for (std::size_t i = 2; i < n; ++i)
      for (std::size_t k = 0; k + 1 < i; ++k)
        if (!(m(i, k) == T(0))) throw std::invalid_argument("matrix is not upper Hessenberg");
    return HessenbergMatrix(std::move(m));
  }

  std::size_t size() const { return m_.size(); }
  const T& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix<T>& matrix() const { return m_; }

 private:
  explicit HessenbergMatrix(Matrix<T> m) : m_(std::move(m)) {}

  template <class U>
  friend HessenbergMatrix<U> reduce_to_hessenberg(Matrix<U> a);

  Matrix<T> m_;
};

/// Householder similarity reduction H = Q^T U Q.  Q is never formed.
///
/// For column k the reflector maps x = U[k+1.., k] onto a multiple of e1,
/// with v = x + sign(x0)|x| e1.  When the part of x below its first entry is
/// negligible (<= eps |x|, eps of the active tier) the reflector is skipped
/// and those entries are set to exact zeros.
template <class T>
HessenbergMatrix<T> reduce_to_hessenberg(Matrix<T> a) {
  using std::sqrt;
  const std::size_t n = a.size();
  std::vector<T> v(n);
  std::vector<T> w(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t first = k + 1;
    const std::size_t m = n - first;  // reflector length

    T tail_sq(0);
    for (std::size_t r = first + 1; r < n; ++r) tail_sq += a(r, k) * a(r, k);
    const T x0 = a(first, k);

    const T norm = sqrt(x0 * x0 + tail_sq);
    if (tail_sq == T(0) || sqrt(tail_sq) <= epsilon<T>() * norm) {  // also catches underflowed squares
      for (std::size_t r = first + 1; r < n; ++r) a(r, k) = T(0);
      continue;
    }

    const T alpha = (x0 < T(0)) ? norm : -norm;  // H x = alpha e1
    v[0] = x0 - alpha;
    for (std::size_t r = 1; r < m; ++r) v[r] = a(first + r, k);
    const T beta = T(2) / (v[0] * v[0] + tail_sq);

    // Left: rows first.., columns first.. ; A <- A - beta v (v^T A)
    for (std::size_t c = first; c < n; ++c) w[c] = T(0);
    for (std::size_t r = 0; r < m; ++r) {
      const T vr = v[r];
      auto row = a.row(first + r);
      for (std::size_t c = first; c < n; ++c) w[c] += vr * row[c];
    }
    for (std::size_t r = 0; r < m; ++r) {
      const T scaled = beta * v[r];
      auto row = a.row(first + r);
      for (std::size_t c = first; c < n; ++c) row[c] -= scaled * w[c];
    }
    a(first, k) = alpha;
    for (std::size_t r = first + 1; r < n; ++r) a(r, k) = T(0);

    // Right: all rows, columns first.. ; A <- A - beta (A v) v^T
    for (std::size_t r = 0; r < n; ++r) {
      auto row = a.row(r);
      T s(0);
      for (std::size_t c = 0; c < m; ++c) s += row[first + c] * v[c];
      s *= beta;
      for (std::size_t c = 0; c < m; ++c) row[first + c] -= s * v[c];
    }
  }
  return HessenbergMatrix<T>(std::move(a));
}

}  // namespace charpoly
