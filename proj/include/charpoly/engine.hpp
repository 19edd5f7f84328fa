#pragma once

// Coefficients of det(I + xU) by Gaussian elimination over polynomial
// entries of I + xH, H the Hessenberg form of U.
//
// The elimination runs from the bottom-right corner to the top-left.  Column
// j of the working matrix is kept as a table of coefficients t(k, i) (the
// x^k coefficient of entry (i, j)); the elimination factors are never built.
// No scalar division occurs, so the procedure cannot break down.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "charpoly/hessenberg.hpp"
#include "charpoly/matrix.hpp"
#include "charpoly/poly.hpp"

namespace charpoly {

/// Working coefficient table, t(k, i) for k, i in 1..n (1-based, as in the
/// elimination recurrence).  Each column i is contiguous in k.
template <class T>
class CoeffTable {
 public:
  explicit CoeffTable(std::size_t n) : n_(n), data_((n + 1) * (n + 1), T(0)) {}

  std::size_t size() const { return n_; }

  T& operator()(std::size_t k, std::size_t i) { return data_[i * (n_ + 1) + k]; }
  const T& operator()(std::size_t k, std::size_t i) const { return data_[i * (n_ + 1) + k]; }

  T* column(std::size_t i) { return data_.data() + i * (n_ + 1); }

 private:
  std::size_t n_;
  std::vector<T> data_;
};

namespace detail {

// Runs the elimination keeping only degrees <= max_degree.  With
// max_degree == n this is the full algorithm.  The recurrence loop starts at
// min(n-j, max_degree-1), so no coefficient above max_degree is ever formed,
// and every coefficient that is formed goes through exactly the same
// operations as in the untruncated run.
template <class T>
std::vector<T> eliminate(const HessenbergMatrix<T>& h, std::size_t max_degree) {
  const std::size_t n = h.size();
  std::vector<T> c(max_degree + 1, T(0));
  c[0] = T(1);
  if (max_degree == 0) return c;

  CoeffTable<T> t(n);
  for (std::size_t j = n; j >= 1; --j) {
    const std::size_t recurrence_top = std::min(n - j, max_degree - 1);
    const std::size_t fold_top = std::min(n - j, max_degree);

    for (std::size_t i = 1; i <= j; ++i) {
      const T u_ij = h(i - 1, j - 1);
      T* ti = t.column(i);
      if (recurrence_top > 0) {
        // k must descend: ti[k] is read before ti[k+1] is overwritten.
        const T sub = h(j, j - 1);  // U(j+1, j)
        const T* tnext = t.column(j + 1);
        for (std::size_t k = recurrence_top; k >= 1; --k) ti[k + 1] = u_ij * tnext[k] - sub * ti[k];
      }
      ti[1] = u_ij;
    }

    T* tj = t.column(j);
    if (fold_top > 0) {
      const T* tnext = t.column(j + 1);
      for (std::size_t k = 1; k <= fold_top; ++k) tj[k] += tnext[k];
    }
  }

  for (std::size_t k = 1; k <= max_degree; ++k) c[k] = t(k, 1);
  return c;
}

}  // namespace detail

/// Coefficients c_0..c_n of det(I + xH); c_0 = 1 exactly.
template <class T>
PolyCoeffs<T> pbar_coeffs_hessenberg(const HessenbergMatrix<T>& h) {
  return {detail::eliminate(h, h.size()), PolyKind::PBar, std::nullopt};
}

/// c_0..c_A only.  Bitwise equal to the first A+1 entries of
/// pbar_coeffs_hessenberg in the same tier.
template <class T>
PolyCoeffs<T> pbar_coeffs_truncated(const HessenbergMatrix<T>& h, std::size_t max_degree) {
  if (max_degree > h.size()) {
    throw std::out_of_range("degree " + std::to_string(max_degree) + " exceeds dimension " +
                            std::to_string(h.size()));
  }
  return {detail::eliminate(h, max_degree), PolyKind::PBar, max_degree};
}

/// det(I + xU) for a general square U: Hessenberg reduction followed by the
/// polynomial elimination.  Total cost stays below 4 n^3 flops for n >= 32.
template <class T>
PolyCoeffs<T> pbar_coeffs(const Matrix<T>& u) {
  return pbar_coeffs_hessenberg(reduce_to_hessenberg(u));
}

/// The x^A coefficient of det(I + xU), i.e. the A-particle canonical trace.
template <class T>
T canonical_trace_coefficient(const Matrix<T>& u, std::size_t a) {
  if (a > u.size()) {
    throw std::out_of_range("degree " + std::to_string(a) + " exceeds dimension " +
                            std::to_string(u.size()));
  }
  return pbar_coeffs_truncated(reduce_to_hessenberg(u), a).coeffs[a];
}

/// Monic coefficients of det(xI - U).
template <class T>
PolyCoeffs<T> charpoly_coeffs(const Matrix<T>& u) {
  return pbar_to_p(pbar_coeffs(u), u.size());
}

}  // namespace charpoly
