#pragma once

// Accuracy and cost studies:
//   * binary32 versus binary64 deviation of a single coefficient per method,
//   * exact operation counts of the elimination stage and full pipeline,
//   * wall-clock scaling per method.
//
// No diagonalisation-based method is included; the comparison set is the
// Newton, Faddeev-LeVerrier and DFT routes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "charpoly/engine.hpp"
#include "charpoly/hessenberg.hpp"
#include "charpoly/matrix.hpp"
#include "charpoly/matrix_gen.hpp"
#include "charpoly/matrix_io.hpp"
#include "charpoly/poly.hpp"
#include "charpoly/reference.hpp"
#include "charpoly/scalar.hpp"

namespace charpoly {

enum class Method { Engine, Newton, Faddeev, Dft, Leibniz, Naive };

inline constexpr Method kAllMethods[] = {Method::Engine, Method::Newton,  Method::Faddeev,
                                         Method::Dft,    Method::Leibniz, Method::Naive};

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::Engine: return "engine";
    case Method::Newton: return "newton";
    case Method::Faddeev: return "faddeev";
    case Method::Dft: return "dft";
    case Method::Leibniz: return "leibniz";
    case Method::Naive: return "naive";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view s) {
  for (Method m : kAllMethods)
    if (method_name(m) == s) return m;
  return std::nullopt;
}

/// Full det(I + xU) coefficients by the chosen method.
template <class T>
PolyCoeffs<T> compute_pbar(Method method, const Matrix<T>& u) {
  const std::size_t n = u.size();
  switch (method) {
    case Method::Engine: return pbar_coeffs(u);
    case Method::Newton: return p_to_pbar(newton_coeffs(u), n);
    case Method::Faddeev: return p_to_pbar(faddeev_leverrier(u), n);
    case Method::Dft:
      if constexpr (std::is_floating_point_v<T>) {
        return p_to_pbar(ormand_dft_coeffs(u), n);
      } else {
        throw std::invalid_argument("dft is not available in the instrumented tier");
      }
    case Method::Leibniz: return leibniz_pbar(u);
    case Method::Naive: return naive_poly_gauss(u);
  }
  throw std::invalid_argument("unknown method");
}

/// The x^a coefficient of det(I + xU).  Engine, Newton and Faddeev stop at
/// degree a; the others compute everything and pick one entry.
template <class T>
T target_coefficient(Method method, const Matrix<T>& u, std::size_t a) {
  if (a > u.size()) throw std::out_of_range("target coefficient exceeds dimension");
  switch (method) {
    case Method::Engine: return canonical_trace_coefficient(u, a);
    case Method::Newton: return newton_elementary(u, a)[a];
    case Method::Faddeev: return faddeev_elementary(u, a).elementary[a];
    default: return compute_pbar(method, u).coeffs[a];
  }
}

// ---------------------------------------------------------------------------
// Coefficient comparison

/// max_k |a_k - b_k| / max_k |b_k|
template <class T>
double max_error_relative_to_largest(const PolyCoeffs<T>& got, const PolyCoeffs<double>& ref) {
  if (got.size() != ref.size()) throw std::invalid_argument("coefficient lists differ in length");
  double scale = 0.0;
  double err = 0.0;
  for (std::size_t k = 0; k < ref.size(); ++k) {
    scale = std::max(scale, std::fabs(ref[k]));
    err = std::max(err, std::fabs(to_double(got[k]) - ref[k]));
  }
  return scale > 0.0 ? err / scale : err;
}

/// |a_k - b_k| / |b_k| for every k with b_k != 0.
template <class T>
std::vector<double> per_coefficient_relative_errors(const PolyCoeffs<T>& got,
                                                    const PolyCoeffs<double>& ref) {
  if (got.size() != ref.size()) throw std::invalid_argument("coefficient lists differ in length");
  std::vector<double> out;
  for (std::size_t k = 0; k < ref.size(); ++k) {
    if (ref[k] == 0.0) continue;
    out.push_back(std::fabs(to_double(got[k]) - ref[k]) / std::fabs(ref[k]));
  }
  return out;
}

inline double median(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median of empty sample");
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  double hi = v[mid];
  if (v.size() % 2 == 1) return hi;
  double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Precision study

/// |reduced - standard| / |standard|; empty when standard == 0.
inline std::optional<double> relative_deviation(double reduced, double standard) {
  if (standard == 0.0) return std::nullopt;
  return std::fabs(reduced - standard) / std::fabs(standard);
}

struct PrecisionReport {
  std::string method;
  std::size_t n_samples = 0;  // samples entering the mean
  double mean_rel_dev = 0.0;
  double ci95_halfwidth = 0.0;
  std::size_t n_overflow = 0;        // non-finite or broken-down binary32 results
  std::size_t n_zero_reference = 0;  // binary64 value exactly zero, excluded

  friend bool operator==(const PrecisionReport&, const PrecisionReport&) = default;
};

/// Mean and 95% half-width (normal approximation, 1.96 sigma / sqrt(n)).
inline std::pair<double, double> mean_and_ci95(std::span<const double> xs) {
  if (xs.empty()) return {std::nan(""), std::nan("")};
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / static_cast<double>(xs.size());
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  return {mean, 1.96 * sd / std::sqrt(static_cast<double>(xs.size()))};
}

enum class SampleSeeding {
  PerSample,  // sample s uses derive_seed(config.seed, s)
  Repeat,     // every sample reuses config.seed
};

/// For every sample matrix and method, computes the target coefficient of
/// det(I + xU) in binary32 and binary64 and accumulates the relative
/// deviation.  Deterministic for a given config.
inline std::vector<PrecisionReport> run_precision_study(const GeneratorConfig& config,
                                                        std::span<const Method> methods,
                                                        std::size_t target, std::size_t n_samples,
                                                        SampleSeeding seeding = SampleSeeding::PerSample) {
  if (n_samples < 2) throw std::invalid_argument("precision study needs at least 2 samples");
  if (methods.empty()) throw std::invalid_argument("precision study needs at least one method");
  if (target > config.n) throw std::invalid_argument("target coefficient exceeds dimension");

  std::vector<std::vector<double>> devs(methods.size());
  std::vector<PrecisionReport> reports(methods.size());
  for (std::size_t m = 0; m < methods.size(); ++m) reports[m].method = method_name(methods[m]);

  for (std::size_t s = 0; s < n_samples; ++s) {
    GeneratorConfig sample_cfg = config;
    if (seeding == SampleSeeding::PerSample) sample_cfg.seed = derive_seed(config.seed, s);
    const Matrix<double> u64 = generate(sample_cfg).matrix;
    const Matrix<float> u32 = u64.cast<float>();

    for (std::size_t m = 0; m < methods.size(); ++m) {
      const double standard = target_coefficient(methods[m], u64, target);
      double reduced = 0.0;
      bool broke = false;
      try {
        reduced = static_cast<double>(target_coefficient(methods[m], u32, target));
      } catch (const NumericalBreakdown&) {
        broke = true;
      }
      if (broke || !std::isfinite(reduced) || !std::isfinite(standard)) {
        ++reports[m].n_overflow;
        continue;
      }
      const auto dev = relative_deviation(reduced, standard);
      if (!dev) {
        ++reports[m].n_zero_reference;
        continue;
      }
      devs[m].push_back(*dev);
    }
  }

  for (std::size_t m = 0; m < methods.size(); ++m) {
    const auto [mean, ci] = mean_and_ci95(devs[m]);
    reports[m].n_samples = devs[m].size();
    reports[m].mean_rel_dev = mean;
    reports[m].ci95_halfwidth = ci;
  }
  return reports;
}

// ---------------------------------------------------------------------------
// Operation counts

/// Elimination-stage operations, counting 3 per recurrence update (two
/// products, one subtraction) and 1 per fold addition:
///   3 (n^3 - n) / 6 + n (n - 1) / 2 = n^3/2 + n^2/2 - n.
constexpr std::uint64_t elimination_flops_closed_form(std::uint64_t n) {
  return (n * n * n + n * n - 2 * n) / 2;
}

/// The reference count n^3/2 + n^2 - n/2.  It exceeds the closed form above
/// by n (n + 1) / 2, exactly one unit per copy t(1, i) = U(i, j).
constexpr std::uint64_t reference_flop_formula(std::uint64_t n) {
  return (n * n * n + 2 * n * n - n) / 2;
}

inline constexpr std::size_t kPipelineBoundMinDimension = 32;

struct FlopCensusRecord {
  std::size_t n = 0;
  std::uint64_t hessenberg_flops = 0;
  std::uint64_t elimination_flops = 0;
  std::uint64_t elimination_divisions = 0;
  std::uint64_t pipeline_flops = 0;

  bool matches_closed_form() const { return elimination_flops == elimination_flops_closed_form(n); }
  /// |count - reference| <= n^2
  bool within_reference_slack() const {
    const auto pub = static_cast<double>(reference_flop_formula(n));
    return std::fabs(static_cast<double>(elimination_flops) - pub) <= static_cast<double>(n * n);
  }
  bool below_four_n_cubed() const { return pipeline_flops < 4ULL * n * n * n; }
};

/// Instrumented run of the full pipeline on one uniform-random matrix per n.
inline FlopCensusRecord flop_census_one(std::size_t n, std::uint64_t seed) {
  const Matrix<Flop64> u = gen_uniform_scaled(n, derive_seed(seed, n)).cast<Flop64>();
  FlopCensusRecord rec;
  rec.n = n;
  const FlopScope total;
  FlopScope stage;
  const HessenbergMatrix<Flop64> h = reduce_to_hessenberg(u);
  rec.hessenberg_flops = stage.elapsed().flops();
  stage = FlopScope();
  (void)pbar_coeffs_hessenberg(h);
  const FlopCounts elim = stage.elapsed();
  rec.elimination_flops = elim.flops();
  rec.elimination_divisions = elim.divs;
  rec.pipeline_flops = total.elapsed().flops();
  return rec;
}

inline std::vector<FlopCensusRecord> run_flop_census(std::span<const std::size_t> n_values,
                                                     std::uint64_t seed = 1) {
  if (n_values.empty()) throw std::invalid_argument("flop census needs at least one n");
  std::vector<FlopCensusRecord> out;
  for (std::size_t n : n_values) out.push_back(flop_census_one(n, seed));
  return out;
}

// ---------------------------------------------------------------------------
// Wall-clock scaling

struct BenchRecord {
  std::size_t n = 0;
  std::string method;
  std::optional<std::uint64_t> flops;  // present only for instrumented runs
  double wall_seconds = 0.0;           // median seconds per matrix
  std::size_t samples = 0;
};

/// Operation count of one instrumented run; empty for methods that have no
/// instrumented form (dft).
inline std::optional<std::uint64_t> count_flops(Method method, const Matrix<double>& u) {
  if (method == Method::Dft) return std::nullopt;
  const Matrix<Flop64> counted = u.cast<Flop64>();
  const FlopScope scope;
  (void)compute_pbar(method, counted);
  return scope.elapsed().flops();
}

/// Minimum timed span per matrix; fast calls are repeated to reach it.
inline constexpr double kMinTimedSeconds = 5e-3;

/// Times each method on samples_per_n uniform-random matrices per n.
/// Single-threaded; matrix generation is outside the timed region.
inline std::vector<BenchRecord> run_scaling_bench(std::span<const std::size_t> n_values,
                                                  std::span<const Method> methods,
                                                  std::size_t samples_per_n, std::uint64_t seed = 1,
                                                  bool instrumented = false) {
  if (n_values.empty() || methods.empty() || samples_per_n == 0)
    throw std::invalid_argument("scaling bench needs n values, methods and samples");
  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> out;
  volatile double sink = 0.0;
  for (std::size_t n : n_values) {
    std::vector<Matrix<double>> mats;
    for (std::size_t s = 0; s < samples_per_n; ++s)
      mats.push_back(gen_uniform_scaled(n, derive_seed(seed, n * 1000003ULL + s)));
    for (Method method : methods) {
      std::vector<double> times;
      for (const auto& u : mats) {
        std::size_t reps = 0;
        double elapsed = 0.0;
        const auto t0 = clock::now();
        do {
          sink = sink + compute_pbar(method, u).coeffs.back();
          ++reps;
          elapsed = std::chrono::duration<double>(clock::now() - t0).count();
        } while (elapsed < kMinTimedSeconds);
        times.push_back(elapsed / static_cast<double>(reps));
      }
      BenchRecord rec;
      rec.n = n;
      rec.method = method_name(method);
      rec.wall_seconds = median(times);
      rec.samples = samples_per_n;
      if (instrumented) rec.flops = count_flops(method, mats.front());
      out.push_back(std::move(rec));
    }
  }
  return out;
}

/// Least-squares slope of log(wall_seconds) against log(n) over the records
/// of one method.
inline double loglog_slope(std::span<const BenchRecord> records, std::string_view method) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : records)
    if (r.method == method && r.wall_seconds > 0.0)
      pts.emplace_back(std::log(static_cast<double>(r.n)), std::log(r.wall_seconds));
  if (pts.size() < 2) throw std::invalid_argument("slope fit needs at least two points");
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0.0, sxx = 0.0;
  for (const auto& [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  return sxy / sxx;
}

// ---------------------------------------------------------------------------
// CSV output

inline void write_bench_csv(std::ostream& os, std::span<const BenchRecord> records) {
  os << "n,method,flops,wall_seconds,samples\n";
  for (const auto& r : records) {
    os << r.n << ',' << r.method << ',';
    if (r.flops) os << *r.flops;
    os << ',' << format_double(r.wall_seconds) << ',' << r.samples << '\n';
  }
}

/// One row per n: dimension, per-method seconds, then each method's cost
/// relative to the first method.
inline void write_bench_table(std::ostream& os, std::span<const BenchRecord> records,
                              std::span<const Method> methods) {
  os << "n";
  for (Method m : methods) os << ',' << method_name(m);
  for (std::size_t i = 1; i < methods.size(); ++i)
    os << ",ratio_" << method_name(methods[i]) << '_' << method_name(methods[0]);
  os << '\n';

  std::vector<std::size_t> ns;
  for (const auto& r : records)
    if (std::find(ns.begin(), ns.end(), r.n) == ns.end()) ns.push_back(r.n);
  for (std::size_t n : ns) {
    std::vector<double> t;
    for (Method m : methods) {
      double v = std::nan("");
      for (const auto& r : records)
        if (r.n == n && r.method == method_name(m)) v = r.wall_seconds;
      t.push_back(v);
    }
    os << n;
    for (double v : t) os << ',' << format_double(v);
    for (std::size_t i = 1; i < t.size(); ++i) os << ',' << format_double(t[i] / t[0]);
    os << '\n';
  }
}

inline void write_precision_csv(std::ostream& os, std::span<const PrecisionReport> reports) {
  os << "method,n_samples,mean_rel_dev,ci95,n_overflow\n";
  for (const auto& r : reports) {
    os << r.method << ',' << r.n_samples << ',' << format_double(r.mean_rel_dev) << ','
       << format_double(r.ci95_halfwidth) << ',' << r.n_overflow << '\n';
  }
}

}  // namespace charpoly
