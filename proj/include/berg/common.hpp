#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace berg {

using Complex = std::complex<double>;

/// A point of the open unit disk. Callers keep |z| < 1; operations with
/// singular denominators additionally enforce the boundary guard below.
using DiskPoint = Complex;

namespace defaults {
// Guard on denominators of the form 1 - conj(a)*w.
inline constexpr double boundary_eps = 1e-12;
// Truncation order of operator matrices.
inline constexpr int truncation_order = 200;
// Extra series terms kept when expanding linear-fractional symbols.
inline constexpr int series_guard = 64;
// Quadrature grid.
inline constexpr int radial_count = 160;
inline constexpr int angular_count = 192;
// Bergman radius for averaging functions / Carleson statistics.
inline constexpr double carleson_r = 1.0;
// Profile radii used by boundary sweeps.
inline constexpr double profile_radii[] = {0.5, 0.7, 0.85, 0.93, 0.97, 0.99};
// Vanishing-trend threshold, relative to the profile maximum.
inline constexpr double tol_vanish = 1e-2;
// Bracket-stability bound for "comparable" claims (max/min ratio).
inline constexpr double bracket_bound = 50.0;
// Last-annulus fraction above which a lambda-integral is flagged divergent.
inline constexpr double tail_divergence = 5e-2;
// Quadrature tail warning threshold for plain norms.
inline constexpr double tail_warn = 1e-3;
// Lattice size cap.
inline constexpr int lattice_cap = 100000;
// Default RNG seed recorded in reports.
inline constexpr std::uint64_t seed = 20250809;
}  // namespace defaults

/// Thrown when a numeric procedure cannot continue (singular denominator,
/// divergent quadrature node, SVD failure, PSD violation, ...).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Deterministic splitmix64 stream. Used everywhere randomness is needed so
/// that identical seeds give identical results on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Area-uniform point with |z| <= max_radius.
  DiskPoint disk_point(double max_radius) {
    const double r = max_radius * std::sqrt(uniform01());
    const double theta = uniform(0.0, 2.0 * pi());
    return std::polar(r, theta);
  }

  /// Standard normal (Box-Muller, no caching: call order fixes the stream).
  double normal() {
    const double u = 1.0 - uniform01();
    const double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * pi() * v);
  }

  Complex complex_normal() { return {normal(), normal()}; }

  int sign() { return (next_u64() & 1u) ? 1 : -1; }

  static constexpr double pi() { return 3.14159265358979323846; }

 private:
  std::uint64_t state_;
};

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace berg
