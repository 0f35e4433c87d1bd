#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "berg/common.hpp"

namespace berg {

/// One-dimensional Gaussian rules on [-1, 1], nodes ascending.
struct Rule1D {
  Eigen::ArrayXd nodes;
  Eigen::ArrayXd weights;
};

/// Gauss-Legendre rule (weight 1).
Rule1D gauss_legendre(int n);

/// Gauss-Jacobi rule with weight (1-x)^a, a > -1.
Rule1D gauss_jacobi(int n, double a);

enum class Measure { kAAlpha, kLambda };

/// Masked integration region. `contains` decides node membership; `level`
/// (inside iff level < 0, continuous) enables the refined boundary-located
/// path and is optional for plain node masking.
struct RegionMask {
  std::function<bool(DiskPoint)> contains;
  std::function<double(DiskPoint)> level;

  static RegionMask from_level(std::function<double(DiskPoint)> g) {
    RegionMask m;
    m.level = std::move(g);
    auto lvl = m.level;
    m.contains = [lvl](DiskPoint z) { return lvl(z) < 0.0; };
    return m;
  }
};

struct IntegralResult {
  Complex value{0.0, 0.0};
  // |last radial annulus| / total, both in absolute-sum scale.
  double tail_fraction = 0.0;
  // sum of w*|f| over inside nodes adjacent to the mask boundary.
  double mask_boundary_error = 0.0;
};

/// Tensor grid over the disk: radial Gauss-Jacobi adapted to the
/// (alpha+1)(1-r^2)^alpha density times a uniform angular rule. The full node
/// set integrates dA_alpha to 1 exactly up to eigensolver rounding.
class QuadGrid {
 public:
  QuadGrid() = default;

  double alpha() const { return alpha_; }
  int radial_count() const { return radial_count_; }
  int angular_count() const { return angular_count_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }

  const Eigen::ArrayXcd& nodes() const { return nodes_; }
  const Eigen::ArrayXd& weights_alpha() const { return w_alpha_; }
  const Eigen::ArrayXd& weights_lambda() const { return w_lambda_; }
  const Eigen::ArrayXd& radial_nodes() const { return radial_nodes_; }
  const Eigen::ArrayXd& radial_weights() const { return radial_weights_; }

  const Eigen::ArrayXd& weights(Measure m) const {
    return m == Measure::kAAlpha ? w_alpha_ : w_lambda_;
  }

  int ring_of(int node_index) const { return node_index / angular_count_; }

  friend QuadGrid build_grid(double alpha, int radial_count, int angular_count);

 private:
  double alpha_ = 0.0;
  int radial_count_ = 0;
  int angular_count_ = 0;
  Eigen::ArrayXd radial_nodes_;
  Eigen::ArrayXd radial_weights_;
  Eigen::ArrayXcd nodes_;
  Eigen::ArrayXd w_alpha_;
  Eigen::ArrayXd w_lambda_;
};

QuadGrid build_grid(double alpha, int radial_count, int angular_count);

/// Weighted node sum of f against dA_alpha or dlambda, optionally masked.
/// Throws NumericError naming the node if f is non-finite at an unmasked node.
IntegralResult integrate(const std::function<Complex(DiskPoint)>& f, const QuadGrid& grid,
                         Measure measure, const std::optional<RegionMask>& mask = std::nullopt);

/// Refined masked integral of a real integrand against dA_alpha: per angular
/// ray, radial crossings of the mask level function are located by bisection
/// and each inside segment is integrated with a local Gauss-Legendre rule.
/// Exact for radial masks; used where node masking is too coarse.
double masked_integral_refined(const std::function<double(DiskPoint)>& f,
                               const std::function<double(DiskPoint)>& level, double alpha,
                               int angular_count = 256, int scan_count = 96);

}  // namespace berg
