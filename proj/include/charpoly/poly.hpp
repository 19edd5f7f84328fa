#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "charpoly/scalar.hpp"

namespace charpoly {

/// PBar: coefficients of det(I + xU).  P: coefficients of det(xI - U).
enum class PolyKind { PBar, P };

/// Ascending-degree coefficient list: coeffs[k] multiplies x^k.
template <class T>
struct PolyCoeffs {
  std::vector<T> coeffs;
  PolyKind kind = PolyKind::PBar;
  std::optional<std::size_t> degree_limit;

  std::size_t size() const { return coeffs.size(); }
  const T& operator[](std::size_t k) const { return coeffs[k]; }
  T& operator[](std::size_t k) { return coeffs[k]; }
};

/// Horner evaluation, highest degree first.
template <class T>
T poly_eval(const PolyCoeffs<T>& p, T x) {
  if (p.coeffs.empty()) throw std::invalid_argument("poly_eval: empty polynomial");
  T acc = p.coeffs.back();
  for (std::size_t k = p.coeffs.size() - 1; k-- > 0;) acc = acc * x + p.coeffs[k];
  return acc;
}

namespace detail {

// det(I + xU) = (-x)^n det((-1/x)I - U): out[A] = (-1)^s in[n-A], with s the
// PBar-side index (n-A going to P, A coming back).
template <class T>
std::vector<T> reflect_coefficients(const std::vector<T>& in, std::size_t n, bool to_p) {
  if (in.size() != n + 1) throw std::invalid_argument("coefficient list length does not match n + 1");
  std::vector<T> out(n + 1);
  for (std::size_t a = 0; a <= n; ++a) {
    const T& src = in[n - a];
    const std::size_t s = to_p ? n - a : a;
    out[a] = (s % 2 == 0) ? src : -src;
  }
  return out;
}

}  // namespace detail

/// a_A = (-1)^(n-A) * pbar[n-A]
template <class T>
PolyCoeffs<T> pbar_to_p(const PolyCoeffs<T>& pbar, std::size_t n) {
  if (pbar.kind != PolyKind::PBar) throw std::invalid_argument("pbar_to_p: input is not PBar");
  return {detail::reflect_coefficients(pbar.coeffs, n, true), PolyKind::P, std::nullopt};
}

/// pbar[A] = (-1)^A * a_(n-A)
template <class T>
PolyCoeffs<T> p_to_pbar(const PolyCoeffs<T>& p, std::size_t n) {
  if (p.kind != PolyKind::P) throw std::invalid_argument("p_to_pbar: input is not P");
  return {detail::reflect_coefficients(p.coeffs, n, false), PolyKind::PBar, std::nullopt};
}

}  // namespace charpoly
