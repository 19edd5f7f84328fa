#pragma once

// Seeded test ensembles.
//
// The generator is SplitMix64, fully specified here so that any
// implementation reproduces the same stream:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Uniform doubles on [0, 1) take the top 53 bits: (z >> 11) * 2^-53.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "charpoly/matrix.hpp"
#include "charpoly/reference.hpp"

namespace charpoly {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::uint64_t state_;
};

/// Seed for the index-th sample of a study with the given base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 g(base ^ (index * 0xD1B54A32D192ED03ULL));
  return g.next();
}

/// Entries i.i.d. uniform on [-1/sqrt(n), 1/sqrt(n)].
inline Matrix<double> gen_uniform_scaled(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("gen_uniform_scaled: n must be at least 1");
  SplitMix64 rng(seed);
  const double bound = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<double> v(n * n);
  for (double& x : v) x = rng.uniform(-bound, bound);
  return Matrix<double>(n, std::move(v));
}

namespace detail {

// a <- R a R with R = I - 2 v v^T / v^T v.
inline void reflect_similarity(Matrix<double>& a, const std::vector<double>& v) {
  const std::size_t n = a.size();
  double vtv = 0.0;
  for (double x : v) vtv += x * x;
  if (vtv == 0.0) return;
  const double beta = 2.0 / vtv;

  std::vector<double> w(n, 0.0);  // v^T a
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) w[c] += v[r] * a(r, c);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) -= beta * v[r] * w[c];

  for (std::size_t r = 0; r < n; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < n; ++c) s += a(r, c) * v[c];
    s *= beta;
    for (std::size_t c = 0; c < n; ++c) a(r, c) -= s * v[c];
  }
}

}  // namespace detail

/// Q D Q^T where D is block diagonal (1x1 real blocks, 2x2 blocks
/// [[re, im], [-im, re]] for conjugate pairs) and Q is a product of n
/// Householder reflectors with seeded random directions.
inline Matrix<double> gen_known_spectrum(const SpectrumSpec& spec, std::uint64_t seed) {
  spec.validate();
  const std::size_t n = spec.multiplicity();
  if (n == 0) throw std::invalid_argument("gen_known_spectrum: empty spectrum");

  Matrix<double> a(n);
  std::size_t pos = 0;
  for (double e : spec.real_eigs) {
    a(pos, pos) = e;
    ++pos;
  }
  for (const auto& [re, im] : spec.complex_pairs) {
    a(pos, pos) = re;
    a(pos, pos + 1) = im;
    a(pos + 1, pos) = -im;
    a(pos + 1, pos + 1) = re;
    pos += 2;
  }

  SplitMix64 rng(seed);
  std::vector<double> v(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (double& x : v) x = rng.uniform(-1.0, 1.0);
    detail::reflect_similarity(a, v);
  }
  return a;
}

/// Real eigenvalue magnitudes log-spaced from 10^(-decades/2) to
/// 10^(+decades/2); every second eigenvalue is negated.
inline SpectrumSpec spread_spectrum(std::size_t n, double decades) {
  if (n == 0) throw std::invalid_argument("spread_spectrum: n must be at least 1");
  if (!(decades >= 0.0)) throw std::invalid_argument("spread_spectrum: decades must be >= 0");
  SpectrumSpec spec;
  for (std::size_t i = 0; i < n; ++i) {
    const double exponent =
        (n == 1) ? 0.0 : -decades / 2.0 + decades * static_cast<double>(i) / static_cast<double>(n - 1);
    const double mag = std::pow(10.0, exponent);
    spec.real_eigs.push_back(i % 2 == 1 ? -mag : mag);
  }
  return spec;
}

struct GeneratedMatrix {
  Matrix<double> matrix;
  std::optional<SpectrumSpec> spectrum;  // present when the exact spectrum is known
};

inline GeneratedMatrix gen_spread_spectrum(std::size_t n, double decades, std::uint64_t seed) {
  SpectrumSpec spec = spread_spectrum(n, decades);
  Matrix<double> m = gen_known_spectrum(spec, seed);
  return {std::move(m), std::move(spec)};
}

struct UniformScaled {};
struct KnownSpectrum {
  SpectrumSpec spectrum;
};
struct SpreadSpectrum {
  double decades = 0.0;
};

struct GeneratorConfig {
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::variant<UniformScaled, KnownSpectrum, SpreadSpectrum> ensemble;
};

inline GeneratedMatrix generate(const GeneratorConfig& cfg) {
  struct Visitor {
    const GeneratorConfig& cfg;
    GeneratedMatrix operator()(const UniformScaled&) const {
      return {gen_uniform_scaled(cfg.n, cfg.seed), std::nullopt};
    }
    GeneratedMatrix operator()(const KnownSpectrum& k) const {
      if (k.spectrum.multiplicity() != cfg.n)
        throw std::invalid_argument("known spectrum multiplicity does not match n");
      return {gen_known_spectrum(k.spectrum, cfg.seed), k.spectrum};
    }
    GeneratedMatrix operator()(const SpreadSpectrum& s) const {
      return gen_spread_spectrum(cfg.n, s.decades, cfg.seed);
    }
  };
  return std::visit(Visitor{cfg}, cfg.ensemble);
}

}  // namespace charpoly
