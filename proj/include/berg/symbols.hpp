#pragma once

#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "berg/common.hpp"

namespace berg {

enum class SymbolRole { kWeight, kSelfMap };

/// Finite Taylor polynomial c0 + c1 z + ... + cd z^d.
struct TaylorPoly {
  Eigen::VectorXcd coeffs;
};

/// z -> (a z + b) / (c z + d), analytic on the closed disk (|d| > |c|).
struct LinearFractional {
  Complex a{0.0}, b{0.0}, c{0.0}, d{1.0};
};

struct ValidationReport {
  bool passed = false;
  double sup_observed = 0.0;
  DiskPoint witness{0.0, 0.0};
  std::string message;
};

/// An analytic weight or self-map of the disk, stored exactly as either a
/// finite Taylor polynomial or a linear-fractional map.
class AnalyticSymbol {
 public:
  AnalyticSymbol() : rep_(TaylorPoly{Eigen::VectorXcd::Zero(1)}), role_(SymbolRole::kWeight) {}

  static AnalyticSymbol poly(std::vector<Complex> coeffs, SymbolRole role = SymbolRole::kWeight);
  static AnalyticSymbol lft(Complex a, Complex b, Complex c, Complex d,
                            SymbolRole role = SymbolRole::kWeight);
  static AnalyticSymbol constant(Complex value) { return poly({value}); }
  static AnalyticSymbol zero() { return poly({Complex{0.0}}); }
  static AnalyticSymbol identity_map() { return poly({0.0, 1.0}, SymbolRole::kSelfMap); }
  static AnalyticSymbol scaled_identity(Complex c) { return poly({0.0, c}, SymbolRole::kSelfMap); }

  SymbolRole role() const { return role_; }
  bool is_poly() const { return std::holds_alternative<TaylorPoly>(rep_); }
  const TaylorPoly& as_poly() const { return std::get<TaylorPoly>(rep_); }
  const LinearFractional& as_lft() const { return std::get<LinearFractional>(rep_); }

  /// Degree for polynomials (trailing zeros dropped), -1 for the zero poly.
  int poly_degree() const;

 private:
  std::variant<TaylorPoly, LinearFractional> rep_;
  SymbolRole role_;
};

/// s^(order)(z). Orders above 2 are closed-form-unsupported for
/// linear-fractional symbols and throw.
Complex eval_symbol(const AnalyticSymbol& s, DiskPoint z, int order = 0);

/// Max-modulus sampling on circles of radius 1 - 2^-k, k = 1..20. Passes iff
/// every sampled value has modulus < 1.
ValidationReport validate_self_map(const AnalyticSymbol& s);

struct SymbolQuadruple {
  AnalyticSymbol u, v, phi, psi;

  /// Validates phi and psi as self-maps; throws std::invalid_argument listing
  /// the witness point on failure.
  static SymbolQuadruple make(AnalyticSymbol u, AnalyticSymbol v, AnalyticSymbol phi,
                              AnalyticSymbol psi);
};

/// rho(z) = d(phi(z), psi(z)), the joint distance of the two self-maps.
double rho_at(const SymbolQuadruple& q, DiskPoint z);

// --- series utilities -------------------------------------------------------

/// First `length` Taylor coefficients. Exact for polynomials; for
/// linear-fractional symbols the geometric expansion's dropped tail decays
/// like (|c|/|d|)^length.
Eigen::VectorXcd taylor_series(const AnalyticSymbol& s, int length);

/// Coefficients of the product, truncated to `length`.
Eigen::VectorXcd convolve_trunc(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, int length);

/// Derivative as a truncated Taylor polynomial symbol.
AnalyticSymbol derivative_symbol(const AnalyticSymbol& s, int length = 256);

/// Product as a truncated Taylor polynomial symbol (exact for polynomials).
AnalyticSymbol product_symbol(const AnalyticSymbol& lhs, const AnalyticSymbol& rhs,
                              int length = 256);

/// max |s| over `samples` points of the circle |z| = radius.
double circle_sup(const AnalyticSymbol& s, double radius, int samples = 1024);

}  // namespace berg
