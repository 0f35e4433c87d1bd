#include "berg/quadrature.hpp"

#include <cmath>
#include <sstream>

namespace berg {

namespace {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights are
// mu0 * (first eigenvector component)^2.
Rule1D golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& subdiag, double mu0) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, subdiag, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericError("golub_welsch: tridiagonal eigensolver failed");
  }
  Rule1D rule;
  rule.nodes = solver.eigenvalues().array();
  rule.weights = mu0 * solver.eigenvectors().row(0).array().square().transpose();
  return rule;
}

}  // namespace

Rule1D gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1 > 0 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) sub(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(diag, sub, 2.0);
}

Rule1D gauss_jacobi(int n, double a) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be >= 1");
  if (!(a > -1.0)) throw std::invalid_argument("gauss_jacobi: weight exponent must be > -1");
  // Monic Jacobi (a, 0) recurrence on [-1, 1].
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n - 1 > 0 ? n - 1 : 0);
  diag(0) = -a / (a + 2.0);
  for (int k = 1; k < n; ++k) {
    const double den = (2.0 * k + a) * (2.0 * k + a + 2.0);
    diag(k) = -a * a / den;
    const double t = 2.0 * k + a;
    const double beta = 4.0 * k * k * (k + a) * (k + a) / (t * t * (t * t - 1.0));
    sub(k - 1) = std::sqrt(beta);
  }
  const double mu0 = std::pow(2.0, a + 1.0) / (a + 1.0);
  return golub_welsch(diag, sub, mu0);
}

QuadGrid build_grid(double alpha, int radial_count, int angular_count) {
  if (!(alpha > -1.0)) throw std::invalid_argument("build_grid: alpha must be > -1");
  if (radial_count < 8 || angular_count < 8) {
    throw std::invalid_argument("build_grid: node counts must be >= 8");
  }

  // Substituting t = r^2 turns the radial density (alpha+1)(1-r^2)^alpha 2r dr
  // into (alpha+1)(1-t)^alpha dt on [0,1]; mapped to [-1,1] this is a Jacobi
  // weight, so the rule below has total mass exactly 1.
  Rule1D jac = gauss_jacobi(radial_count, alpha);
  QuadGrid g;
  g.alpha_ = alpha;
  g.radial_count_ = radial_count;
  g.angular_count_ = angular_count;
  g.radial_nodes_.resize(radial_count);
  g.radial_weights_.resize(radial_count);
  const double scale = (alpha + 1.0) / std::pow(2.0, alpha + 1.0);
  for (int k = 0; k < radial_count; ++k) {
    const double t = 0.5 * (1.0 + jac.nodes(k));
    g.radial_nodes_(k) = std::sqrt(t);
    g.radial_weights_(k) = scale * jac.weights(k);
  }

  const int total = radial_count * angular_count;
  g.nodes_.resize(total);
  g.w_alpha_.resize(total);
  g.w_lambda_.resize(total);
  for (int k = 0; k < radial_count; ++k) {
    const double r = g.radial_nodes_(k);
    const double wa = g.radial_weights_(k) / angular_count;
    const double wl = wa / ((alpha + 1.0) * std::pow(1.0 - r * r, 2.0 + alpha));
    for (int l = 0; l < angular_count; ++l) {
      const double theta = 2.0 * kPi * (l + 0.5) / angular_count;
      const int idx = k * angular_count + l;
      g.nodes_(idx) = std::polar(r, theta);
      g.w_alpha_(idx) = wa;
      g.w_lambda_(idx) = wl;
    }
  }
  return g;
}

IntegralResult integrate(const std::function<Complex(DiskPoint)>& f, const QuadGrid& grid,
                         Measure measure, const std::optional<RegionMask>& mask) {
  const int n = grid.node_count();
  const int m = grid.angular_count();
  const int rings = grid.radial_count();
  const Eigen::ArrayXd& w = grid.weights(measure);

  std::vector<char> inside;
  if (mask) {
    inside.resize(n);
    for (int i = 0; i < n; ++i) inside[i] = mask->contains(grid.nodes()(i)) ? 1 : 0;
  }

  IntegralResult res;
  Complex total{0.0, 0.0};
  double abs_total = 0.0;
  double abs_last_ring = 0.0;
  std::vector<double> abs_at(mask ? n : 0, 0.0);

  for (int i = 0; i < n; ++i) {
    if (mask && !inside[i]) continue;
    const DiskPoint z = grid.nodes()(i);
    const Complex fz = f(z);
    if (!std::isfinite(fz.real()) || !std::isfinite(fz.imag())) {
      std::ostringstream os;
      os << "integrate: non-finite integrand at node " << i << " (z = " << z.real() << " + "
         << z.imag() << "i)";
      throw NumericError(os.str());
    }
    const Complex term = w(i) * fz;
    total += term;
    const double a = std::abs(term);
    abs_total += a;
    if (grid.ring_of(i) == rings - 1) abs_last_ring += a;
    if (mask) abs_at[i] = a;
  }

  if (mask) {
    // inside nodes with an outside neighbour (same ring +-1 angle, same angle +-1 ring)
    for (int i = 0; i < n; ++i) {
      if (!inside[i]) continue;
      const int k = i / m, l = i % m;
      const bool boundary = !inside[k * m + (l + 1) % m] || !inside[k * m + (l + m - 1) % m] ||
                            (k > 0 && !inside[(k - 1) * m + l]) ||
                            (k + 1 < rings && !inside[(k + 1) * m + l]);
      if (boundary) res.mask_boundary_error += abs_at[i];
    }
  }

  res.value = total;
  res.tail_fraction = abs_total > 0.0 ? abs_last_ring / abs_total : 0.0;
  return res;
}

namespace {

double bisect_crossing(const std::function<double(double)>& g, double lo, double hi) {
  double glo = g(lo);
  for (int it = 0; it < 60 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if ((glo < 0.0) == (gm < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double masked_integral_refined(const std::function<double(DiskPoint)>& f,
                               const std::function<double(DiskPoint)>& level, double alpha,
                               int angular_count, int scan_count) {
  static const Rule1D seg_rule = gauss_legendre(24);
  const double r_max = 1.0 - 1e-12;
  double total = 0.0;

  for (int l = 0; l < angular_count; ++l) {
    const double theta = 2.0 * kPi * (l + 0.5) / angular_count;
    const Complex dir = std::polar(1.0, theta);
    auto g = [&](double r) { return level(r * dir); };

    // bracket all sign changes of the level function along the ray
    std::vector<double> cuts;
    cuts.push_back(0.0);
    double prev_r = 0.0;
    double prev_g = g(0.0);
    for (int s = 1; s <= scan_count; ++s) {
      const double r = r_max * s / scan_count;
      const double gr = g(r);
      if ((gr < 0.0) != (prev_g < 0.0)) cuts.push_back(bisect_crossing(g, prev_r, r));
      prev_r = r;
      prev_g = gr;
    }
    cuts.push_back(r_max);

    double ray = 0.0;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
      const double a = cuts[s], b = cuts[s + 1];
      if (b - a < 1e-15) continue;
      const double mid = 0.5 * (a + b);
      if (!(g(mid) < 0.0)) continue;  // outside segment
      for (int q = 0; q < seg_rule.nodes.size(); ++q) {
        const double r = 0.5 * (a + b) + 0.5 * (b - a) * seg_rule.nodes(q);
        const double density = (alpha + 1.0) * std::pow(1.0 - r * r, alpha) * 2.0 * r;
        ray += 0.5 * (b - a) * seg_rule.weights(q) * f(r * dir) * density;
      }
    }
    total += ray;
  }
  return total / angular_count;
}

}  // namespace berg
