#pragma once

#include <functional>
#include <optional>

#include <Eigen/Dense>

#include "berg/common.hpp"
#include "berg/disk_geometry.hpp"
#include "berg/quadrature.hpp"
#include "berg/symbols.hpp"

namespace berg {

/// Parameters of A^p_alpha (alpha > -1, p > 0), optionally carrying a target
/// exponent q.
struct SpaceParams {
  double alpha = 0.0;
  double p = 2.0;
  std::optional<double> q;

  void validate() const {
    if (!(alpha > -1.0)) throw std::invalid_argument("SpaceParams: alpha must be > -1");
    if (!(p > 0.0)) throw std::invalid_argument("SpaceParams: p must be > 0");
    if (q && !(*q > 0.0)) throw std::invalid_argument("SpaceParams: q must be > 0");
  }
};

/// ||z^n||^2 in A^2_alpha: Gamma(n+1) Gamma(2+alpha) / Gamma(n+2+alpha).
double monomial_norm_sq(int n, double alpha);

/// Integer power of a complex number.
Complex ipow(Complex z, int n);

/// Reproducing kernel of order n at z in A^2_alpha.
struct KernelSpec {
  DiskPoint z{0.0, 0.0};
  int order = 0;
  double alpha = 0.0;
};

/// K_z^[n](w) = w^n (2+a)(3+a)...(n+1+a) (1 - conj(z) w)^-(2+a+n).
Complex kernel_eval(const KernelSpec& k, DiskPoint w);

/// ||K_z^[n]||^2 = (K_z^[n])^(n)(z), in closed form.
double kernel_norm_sq(const KernelSpec& k);

/// Monomial-basis coefficients of K_z^[n] up to degree length-1 (the series
/// route; cross-checks the closed forms and feeds matrix quadratic forms).
Eigen::VectorXcd kernel_coefficients(const KernelSpec& k, int length);

struct NormResult {
  double value = 0.0;
  double tail_fraction = 0.0;

  bool tail_warning() const { return tail_fraction > defaults::tail_warn; }
};

/// ||f||_{A^p_alpha}. Exact coefficient sum for p = 2 with polynomial input,
/// quadrature otherwise.
NormResult bergman_p_norm(const AnalyticSymbol& f, const SpaceParams& sp, const QuadGrid& grid);
NormResult bergman_p_norm(const std::function<Complex(DiskPoint)>& f, double p,
                          const QuadGrid& grid);

/// ||f||_{H^p}; exact coefficient l^2 norm when p = 2, circle means otherwise.
double hardy_norm(const AnalyticSymbol& f, double p = 2.0);

struct LittlewoodPaley {
  double lhs = 0.0;   // sum |c_n|^2
  double rhs = 0.0;   // |c_0|^2 + 2 sum n |c_n|^2 / (n+1)
  double ratio = 0.0; // lhs / rhs
};

/// Coefficient-exact comparison of the H^2 norm with its area-integral form.
LittlewoodPaley littlewood_paley_check(const AnalyticSymbol& f);

/// <f, g> in A^2_alpha by exact coefficient pairing.
Complex inner_product_a2(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g, double alpha);

enum class TestFamily { kBergmanF, kHardyG };

/// Normalized kernel-type test function
///   F_{a,N}^[i](z) = z^i / (1 - conj(a) z)^{N+i}
/// with f = (1-|a|^2)^{N+i-(2+alpha)/p} F (Bergman) and
/// g = (1-|a|^2)^{N+i-1/p} F (Hardy) normalizations.
struct TestFunctionSpec {
  TestFamily family = TestFamily::kBergmanF;
  DiskPoint a{0.0, 0.0};
  int N = 2;
  int i = 0;
  SpaceParams space;

  void validate() const;
};

Complex test_function(const TestFunctionSpec& spec, DiskPoint z);

/// Smallest admissible orders when the caller does not choose.
int default_f_order(double alpha, double p);
int default_atom_order(double alpha, double p);

/// Lattice atom sum_j c_j (1-|a_j|^2)^{N+i-(2+alpha)/p} z^i / (1-conj(a_j) z)^{N+i}.
Complex atom_function(const Lattice& lattice, const Eigen::VectorXcd& coeffs, int N, int i,
                      const SpaceParams& sp, DiskPoint z);

}  // namespace berg
