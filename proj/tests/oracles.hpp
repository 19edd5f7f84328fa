#pragma once

// Test-only reference computations.  Nothing here shares code with the
// library routines it is used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "charpoly/matrix.hpp"

namespace charpoly::testing {

/// Determinant by recursive cofactor expansion along the first row.
inline double cofactor_det(const std::vector<std::vector<double>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  double det = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0.0) continue;
    std::vector<std::vector<double>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(a[r][cc]);
      minor.push_back(std::move(row));
    }
    const double sign = (c % 2 == 0) ? 1.0 : -1.0;
    det += sign * a[0][c] * cofactor_det(minor);
  }
  return det;
}

inline double cofactor_det(const Matrix<double>& m) {
  std::vector<std::vector<double>> a(m.size(), std::vector<double>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) a[i][j] = m(i, j);
  return cofactor_det(a);
}

/// Coefficient k of det(I + xU) is the sum of all k x k principal minors of
/// U.  Enumerates index subsets by bitmask; n <= ~12.
inline std::vector<double> principal_minor_pbar(const Matrix<double>& u) {
  const std::size_t n = u.size();
  std::vector<double> c(n + 1, 0.0);
  c[0] = 1.0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    std::vector<std::vector<double>> sub(idx.size(), std::vector<double>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = u(idx[a], idx[b]);
    c[idx.size()] += cofactor_det(sub);
  }
  return c;
}

/// 1-norm condition number, inverse by Gauss-Jordan with partial pivoting.
/// Returns +inf for an exactly singular matrix.
inline double condition_number_1(const Matrix<double>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n)), inv(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    inv[i][i] = 1.0;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  }
  auto norm1 = [n](const std::vector<std::vector<double>>& x) {
    double best = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += std::fabs(x[i][j]);
      best = std::max(best, s);
    }
    return best;
  };
  const double anorm = norm1(a);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    if (a[p][c] == 0.0) return std::numeric_limits<double>::infinity();
    std::swap(a[c], a[p]);
    std::swap(inv[c], inv[p]);
    const double d = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0.0) continue;
      const double f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return anorm * norm1(inv);
}

inline double max_abs_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

}  // namespace charpoly::testing
