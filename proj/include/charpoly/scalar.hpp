#pragma once

// Scalar precision tiers.
//
//   Standard     -> double
//   Reduced      -> float  (every operation is carried out in binary32)
//   Instrumented -> Flop64 (double arithmetic plus per-thread operation counters)
//
// Flop64 performs exactly the same binary64 operations as double, so results
// are bitwise identical; it only adds bookkeeping.

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string_view>

namespace charpoly {

enum class ScalarTier { Standard, Reduced, Instrumented };

struct FlopCounts {
  std::uint64_t adds = 0;  // additions and subtractions
  std::uint64_t muls = 0;
  std::uint64_t divs = 0;
  std::uint64_t sqrts = 0;  // tracked, but not part of flops()

  std::uint64_t flops() const { return adds + muls + divs; }

  friend FlopCounts operator-(const FlopCounts& a, const FlopCounts& b) {
    return {a.adds - b.adds, a.muls - b.muls, a.divs - b.divs, a.sqrts - b.sqrts};
  }
  friend bool operator==(const FlopCounts&, const FlopCounts&) = default;
};

namespace detail {
// One counter set per thread, so concurrent instrumented runs never share state.
inline thread_local FlopCounts tls_flop_counts;
}  // namespace detail

inline const FlopCounts& flop_counts() { return detail::tls_flop_counts; }
inline void reset_flop_counts() { detail::tls_flop_counts = {}; }

/// Measures the operations executed on the current thread between
/// construction and elapsed().
class FlopScope {
 public:
  FlopScope() : start_(flop_counts()) {}
  FlopCounts elapsed() const { return flop_counts() - start_; }

 private:
  FlopCounts start_;
};

class Flop64 {
 public:
  constexpr Flop64() = default;
  constexpr Flop64(double v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr double value() const { return v_; }
  constexpr explicit operator double() const { return v_; }

  Flop64& operator+=(Flop64 o) {
    ++detail::tls_flop_counts.adds;
    v_ += o.v_;
    return *this;
  }
  Flop64& operator-=(Flop64 o) {
    ++detail::tls_flop_counts.adds;
    v_ -= o.v_;
    return *this;
  }
  Flop64& operator*=(Flop64 o) {
    ++detail::tls_flop_counts.muls;
    v_ *= o.v_;
    return *this;
  }
  Flop64& operator/=(Flop64 o) {
    ++detail::tls_flop_counts.divs;
    v_ /= o.v_;
    return *this;
  }

  friend Flop64 operator+(Flop64 a, Flop64 b) { return a += b; }
  friend Flop64 operator-(Flop64 a, Flop64 b) { return a -= b; }
  friend Flop64 operator*(Flop64 a, Flop64 b) { return a *= b; }
  friend Flop64 operator/(Flop64 a, Flop64 b) { return a /= b; }
  // Sign flips are exact and not counted.
  friend constexpr Flop64 operator-(Flop64 a) { return Flop64(-a.v_); }

  friend constexpr bool operator==(Flop64 a, Flop64 b) { return a.v_ == b.v_; }
  friend constexpr std::partial_ordering operator<=>(Flop64 a, Flop64 b) {
    return a.v_ <=> b.v_;
  }

  friend std::ostream& operator<<(std::ostream& os, Flop64 x) { return os << x.v_; }

 private:
  double v_ = 0.0;
};

inline Flop64 sqrt(Flop64 x) {
  ++detail::tls_flop_counts.sqrts;
  return Flop64(std::sqrt(x.value()));
}
inline Flop64 abs(Flop64 x) { return Flop64(std::fabs(x.value())); }
inline bool isfinite(Flop64 x) { return std::isfinite(x.value()); }

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  using base = double;
  static constexpr ScalarTier tier = ScalarTier::Standard;
  static constexpr std::string_view name = "b64";
};

template <>
struct ScalarTraits<float> {
  using base = float;
  static constexpr ScalarTier tier = ScalarTier::Reduced;
  static constexpr std::string_view name = "b32";
};

template <>
struct ScalarTraits<Flop64> {
  using base = double;
  static constexpr ScalarTier tier = ScalarTier::Instrumented;
  static constexpr std::string_view name = "b64-counted";
};

template <class T>
concept Scalar = requires { typename ScalarTraits<T>::base; };

/// Machine epsilon of the arithmetic T actually performs.
template <Scalar T>
constexpr T epsilon() {
  return T(std::numeric_limits<typename ScalarTraits<T>::base>::epsilon());
}

template <Scalar T>
constexpr double to_double(T x) {
  return static_cast<double>(x);
}

template <Scalar T>
bool is_finite(T x) {
  using std::isfinite;
  return isfinite(x);
}

}  // namespace charpoly
