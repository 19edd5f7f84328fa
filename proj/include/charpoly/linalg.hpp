#pragma once

// Determinants and matrix power traces.  These are the point-evaluation and
// power-sum building blocks used by the reference methods and by the tests.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "charpoly/matrix.hpp"

namespace charpoly {

template <class T>
using ComplexScalar = std::complex<T>;

namespace detail {

template <class T>
auto pivot_magnitude(const T& x) {
  using std::abs;
  return abs(x);
}

// Squared modulus: same ordering as |z| without a square root.
template <class T>
T pivot_magnitude(const std::complex<T>& z) {
  return std::norm(z);
}

// In-place LU with partial pivoting; returns the determinant.
template <class E>
E lu_determinant(Matrix<E>& a) {
  const std::size_t n = a.size();
  E det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    auto best = pivot_magnitude(a(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      const auto m = pivot_magnitude(a(r, k));
      if (m > best) {
        best = m;
        p = r;
      }
    }
    if (best == decltype(best)(0)) return E(0);
    if (p != k) {
      std::swap_ranges(a.row(k).begin(), a.row(k).end(), a.row(p).begin());
      det = -det;
    }
    const E pivot = a(k, k);
    det *= pivot;
    for (std::size_t r = k + 1; r < n; ++r) {
      const E f = a(r, k) / pivot;
      if (f == E(0)) continue;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return det;
}

}  // namespace detail

/// Determinant by LU factorisation with partial pivoting.  Returns exactly
/// zero when a pivot column is entirely zero.
template <class T>
T det_lu(Matrix<T> m) {
  return detail::lu_determinant(m);
}

/// Complex determinant; pivots on the largest modulus.
template <class T>
ComplexScalar<T> det_lu_complex(Matrix<ComplexScalar<T>> m) {
  return detail::lu_determinant(m);
}

/// Traces of U^1 .. U^kmax, by repeated multiplication U^k = U^(k-1) U.
template <class T>
std::vector<T> matpow_trace(const Matrix<T>& u, std::size_t kmax) {
  if (kmax == 0) throw std::invalid_argument("matpow_trace: kmax must be at least 1");
  std::vector<T> t;
  t.reserve(kmax);
  Matrix<T> power = u;
  t.push_back(power.trace());
  for (std::size_t k = 2; k <= kmax; ++k) {
    power = power * u;
    t.push_back(power.trace());
  }
  return t;
}

}  // namespace charpoly
