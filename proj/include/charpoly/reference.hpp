#pragma once

// Independent routes to the same coefficients.  They serve as oracles for
// the elimination engine and as its comparison set in the accuracy and
// speed studies.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "charpoly/linalg.hpp"
#include "charpoly/matrix.hpp"
#include "charpoly/poly.hpp"

namespace charpoly {

/// A prescribed spectrum: real eigenvalues plus complex-conjugate pairs
/// (re, im), im > 0, each pair standing for re +- i im.
struct SpectrumSpec {
  std::vector<double> real_eigs;
  std::vector<std::pair<double, double>> complex_pairs;

  std::size_t multiplicity() const { return real_eigs.size() + 2 * complex_pairs.size(); }

  void validate() const {
    for (const auto& [re, im] : complex_pairs) {
      if (!(im > 0.0)) throw std::invalid_argument("SpectrumSpec: pair imaginary part must be > 0");
      if (!std::isfinite(re) || !std::isfinite(im))
        throw std::invalid_argument("SpectrumSpec: non-finite eigenvalue");
    }
    for (double e : real_eigs)
      if (!std::isfinite(e)) throw std::invalid_argument("SpectrumSpec: non-finite eigenvalue");
  }
};

class NumericalBreakdown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// e_k from P(x) coefficients: a_{n-k} = (-1)^k e_k.
template <class T>
PolyCoeffs<T> p_from_elementary(const std::vector<T>& e) {
  const std::size_t n = e.size() - 1;
  std::vector<T> a(n + 1);
  for (std::size_t k = 0; k <= n; ++k) a[n - k] = (k % 2 == 0) ? e[k] : -e[k];
  return {std::move(a), PolyKind::P, std::nullopt};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Newton's identities

/// Elementary symmetric functions e_0..e_kmax of the eigenvalues, from the
/// power sums t_k = Tr(U^k):  k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) t_i.
/// e_k is also the x^k coefficient of det(I + xU).
template <class T>
std::vector<T> newton_elementary(const Matrix<T>& u, std::size_t kmax) {
  std::vector<T> e(kmax + 1, T(0));
  e[0] = T(1);
  if (kmax == 0) return e;
  const std::vector<T> t = matpow_trace(u, kmax);
  for (std::size_t k = 1; k <= kmax; ++k) {
    T acc(0);
    for (std::size_t i = 1; i <= k; ++i) {
      const T term = e[k - i] * t[i - 1];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e[k] = acc / T(static_cast<double>(k));
  }
  return e;
}

/// Monic det(xI - U) via Newton's identities.
template <class T>
PolyCoeffs<T> newton_coeffs(const Matrix<T>& u) {
  return detail::p_from_elementary(newton_elementary(u, u.size()));
}

// ---------------------------------------------------------------------------
// Faddeev-LeVerrier

template <class T>
struct FaddeevRun {
  std::vector<T> elementary;  // e_0..e_kmax
  std::size_t multiplications = 0;
};

/// M_1 = U, c_1 = Tr M_1;  M_(k+1) = U (M_k - c_k I),  c_(k+1) = Tr M_(k+1) / (k+1).
/// Then e_k = (-1)^(k+1) c_k.  Stopping at kmax costs kmax - 1 matrix
/// products.
template <class T>
FaddeevRun<T> faddeev_elementary(const Matrix<T>& u, std::size_t kmax) {
  FaddeevRun<T> run;
  run.elementary.assign(kmax + 1, T(0));
  run.elementary[0] = T(1);
  if (kmax == 0) return run;

  Matrix<T> m = u;
  T c = m.trace();
  run.elementary[1] = c;
  for (std::size_t k = 1; k < kmax; ++k) {
    for (std::size_t i = 0; i < m.size(); ++i) m(i, i) -= c;
    m = u * m;
    ++run.multiplications;
    c = m.trace() / T(static_cast<double>(k + 1));
    run.elementary[k + 1] = (k % 2 == 0) ? c : -c;  // (-1)^(k+2) c_(k+1)
  }
  return run;
}

/// Monic det(xI - U) via the Faddeev-LeVerrier recurrence: a_(n-k) = -c_k.
template <class T>
PolyCoeffs<T> faddeev_leverrier(const Matrix<T>& u) {
  return detail::p_from_elementary(faddeev_elementary(u, u.size()).elementary);
}

// ---------------------------------------------------------------------------
// Discrete Fourier transform of determinants on the unit circle

/// Tolerance for the imaginary part left over by the inverse transform,
/// relative to the largest bin.  1e-8 in binary64, looser in binary32.
template <class T>
double dft_imag_tolerance() {
  return std::max(1e-8, 1e4 * static_cast<double>(epsilon<T>()));
}

/// a_A = (1/N) sum_m exp(-2 pi i m A / N) det(z_m I - U),  z_m = exp(2 pi i m / N).
///
/// With only N samples of a degree-N polynomial, z_m^N = 1 folds a_N into
/// bin 0, so a_0 = bin_0 - 1 (a_N = 1).  Sampling N+1 roots would avoid the
/// fold at the cost of one more determinant.
///
/// Throws NumericalBreakdown if any bin keeps an imaginary part above
/// dft_imag_tolerance<T>() relative to the largest bin.
template <class T>
PolyCoeffs<T> ormand_dft_coeffs(const Matrix<T>& u) {
  using C = ComplexScalar<T>;
  const std::size_t n = u.size();
  const T two_pi_over_n = T(2.0 * std::numbers::pi / static_cast<double>(n));

  std::vector<C> samples(n);
  std::vector<C> roots(n);
  for (std::size_t m = 0; m < n; ++m) {
    roots[m] = std::polar(T(1), two_pi_over_n * T(static_cast<double>(m)));
    Matrix<C> shifted(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) shifted(i, j) = C(-u(i, j));
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += roots[m];
    samples[m] = det_lu_complex(std::move(shifted));
  }

  // Fixed summation order m = 0..n-1 for every bin.
  std::vector<C> bins(n);
  for (std::size_t a = 0; a < n; ++a) {
    C acc(0);
    for (std::size_t m = 0; m < n; ++m) acc += std::conj(roots[(m * a) % n]) * samples[m];
    bins[a] = acc / T(static_cast<double>(n));
  }

  double largest = 0.0;
  double worst_imag = 0.0;
  for (const C& b : bins) {
    largest = std::max(largest, static_cast<double>(std::abs(b)));
    worst_imag = std::max(worst_imag, static_cast<double>(std::fabs(b.imag())));
  }
  if (!std::isfinite(largest) || worst_imag > dft_imag_tolerance<T>() * std::max(largest, 1e-300)) {
    throw NumericalBreakdown("ormand_dft_coeffs: imaginary residue " + std::to_string(worst_imag) +
                             " relative to bin magnitude " + std::to_string(largest));
  }

  std::vector<T> a(n + 1);
  a[0] = bins[0].real() - T(1);
  for (std::size_t k = 1; k < n; ++k) a[k] = bins[k].real();
  a[n] = T(1);
  return {std::move(a), PolyKind::P, std::nullopt};
}

// ---------------------------------------------------------------------------
// Product over a known spectrum

/// Monic prod (x - eps_i), multiplied in by ascending |eps|.  Conjugate pairs
/// enter as the real quadratic x^2 - 2 re x + (re^2 + im^2).
inline PolyCoeffs<double> eigenproduct_coeffs(const SpectrumSpec& spec) {
  spec.validate();
  struct Factor {
    double magnitude;
    double re;
    double im;  // 0 for a real eigenvalue
  };
  std::vector<Factor> factors;
  for (double e : spec.real_eigs) factors.push_back({std::fabs(e), e, 0.0});
  for (const auto& [re, im] : spec.complex_pairs) factors.push_back({std::hypot(re, im), re, im});
  std::stable_sort(factors.begin(), factors.end(),
                   [](const Factor& a, const Factor& b) { return a.magnitude < b.magnitude; });

  std::vector<double> p{1.0};
  for (const Factor& f : factors) {
    if (f.im == 0.0) {
      std::vector<double> next(p.size() + 1, 0.0);
      for (std::size_t k = 0; k < p.size(); ++k) {
        next[k + 1] += p[k];
        next[k] -= f.re * p[k];
      }
      p = std::move(next);
    } else {
      const double lin = -2.0 * f.re;
      const double cst = f.re * f.re + f.im * f.im;
      std::vector<double> next(p.size() + 2, 0.0);
      for (std::size_t k = 0; k < p.size(); ++k) {
        next[k + 2] += p[k];
        next[k + 1] += lin * p[k];
        next[k] += cst * p[k];
      }
      p = std::move(next);
    }
  }
  return {std::move(p), PolyKind::P, std::nullopt};
}

// ---------------------------------------------------------------------------
// Permutation expansion

inline constexpr std::size_t kLeibnizMaxDimension = 8;

/// det(I + xU) summed over all n! permutations.  Exact up to the rounding of
/// the individual products; limited to n <= 8.
template <class T>
PolyCoeffs<T> leibniz_pbar(const Matrix<T>& u) {
  const std::size_t n = u.size();
  if (n > kLeibnizMaxDimension) {
    throw std::invalid_argument("leibniz_pbar: dimension " + std::to_string(n) + " exceeds " +
                                std::to_string(kLeibnizMaxDimension));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<T> total(n + 1, T(0));
  std::vector<T> term(n + 1);

  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;

    std::fill(term.begin(), term.end(), T(0));
    term[0] = T(1);
    std::size_t deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const T lin = u(i, perm[i]);
      if (perm[i] == i) {
        // (1 + lin x)
        for (std::size_t k = deg + 1; k >= 1; --k) term[k] += lin * term[k - 1];
        ++deg;
      } else {
        // (lin x)
        for (std::size_t k = deg + 1; k >= 1; --k) term[k] = lin * term[k - 1];
        term[0] = T(0);
        ++deg;
      }
    }
    for (std::size_t k = 0; k <= n; ++k) {
      if (inversions % 2 == 0)
        total[k] += term[k];
      else
        total[k] -= term[k];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return {std::move(total), PolyKind::PBar, std::nullopt};
}

// ---------------------------------------------------------------------------
// Dense polynomial elimination, no Hessenberg reduction

/// det(I + xU) by fraction-free (Bareiss) elimination on the dense
/// polynomial matrix I + xU, bottom-right pivot first.  Every pivot is a
/// principal minor of I + xU and so has constant term exactly 1; the exact
/// polynomial divisions are therefore carried out as power-series divisions
/// without any scalar division.  Entries are kept as full degree-n
/// polynomials (products truncated mod x^(n+1)), so every step costs O(n^2)
/// per entry and the whole elimination O(n^5).
template <class T>
PolyCoeffs<T> naive_poly_gauss(const Matrix<T>& u) {
  const std::size_t n = u.size();
  const std::size_t stride = n + 1;
  std::vector<T> store(n * n * stride, T(0));
  auto entry = [&](std::size_t i, std::size_t j) { return store.data() + (i * n + j) * stride; };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T* p = entry(i, j);
      p[0] = (i == j) ? T(1) : T(0);
      p[1] = u(i, j);
    }
  }

  std::vector<T> prev(stride, T(0));
  prev[0] = T(1);
  std::vector<T> num(stride);

  for (std::size_t k = n - 1; k >= 1; --k) {
    const T* piv = entry(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const T* aik = entry(i, k);
      for (std::size_t j = 0; j < k; ++j) {
        T* aij = entry(i, j);
        const T* akj = entry(k, j);
        // num = piv * aij - aik * akj  mod x^(n+1)
        for (std::size_t d = 0; d <= n; ++d) {
          T acc(0);
          for (std::size_t p = 0; p <= d; ++p) acc += piv[p] * aij[d - p] - aik[p] * akj[d - p];
          num[d] = acc;
        }
        // aij = num / prev as a power series; prev[0] == 1
        for (std::size_t d = 0; d <= n; ++d) {
          T q = num[d];
          for (std::size_t p = 1; p <= d; ++p) q -= prev[p] * aij[d - p];
          aij[d] = q;
        }
      }
    }
    std::copy(piv, piv + stride, prev.begin());
  }

  const T* det = entry(0, 0);
  return {std::vector<T>(det, det + stride), PolyKind::PBar, std::nullopt};
}

}  // namespace charpoly
