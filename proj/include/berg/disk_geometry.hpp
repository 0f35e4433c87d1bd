#pragma once

#include <cstdint>
#include <vector>

#include "berg/common.hpp"

namespace berg {

/// Euclidean parameters of a pseudo-hyperbolic disk E(z, s).
struct EuclideanDisk {
  DiskPoint center;
  double radius = 0.0;

  bool contains(DiskPoint w) const { return std::abs(w - center) < radius; }
};

/// Involutive automorphism exchanging a and 0: w -> (a - w) / (1 - conj(a) w).
DiskPoint mobius(DiskPoint a, DiskPoint w);

/// Pseudo-hyperbolic distance d(z, w) = |(z - w) / (1 - conj(z) w)| in [0, 1).
double pseudo_distance(DiskPoint z, DiskPoint w);

/// Bergman (hyperbolic) distance beta = atanh(d). Throws NumericError when
/// d >= 1 - 1e-15.
double bergman_distance(DiskPoint z, DiskPoint w);

/// Euclidean center/radius of E(z, s) = { w : d(z, w) < s }.
EuclideanDisk pseudo_disk_euclidean(DiskPoint z, double s);

/// Maximal Bergman-r-separated point set covering |z| <= coverage_radius with
/// Bergman disks of radius r.
struct Lattice {
  std::vector<DiskPoint> centers;
  double radius_r = 0.0;
  double coverage_radius = 0.0;
};

enum class LatticeOrdering {
  kSpiralOut,   // candidate net traversed center-outward
  kShuffled,    // same net, order shuffled by ordering_seed
};

struct LatticeOptions {
  LatticeOrdering ordering = LatticeOrdering::kSpiralOut;
  std::uint64_t ordering_seed = defaults::seed;
  // Bergman-metric spacing of the candidate net, relative to r.
  double net_spacing_factor = 0.05;
  int max_points = defaults::lattice_cap;
};

/// Greedy maximal separated set over a fine spiral candidate net: a candidate
/// is kept iff its Bergman distance to every kept point is >= r. Kept points
/// are pairwise r-separated (so the r/2 disks are disjoint) and every net
/// point ends within distance r of a center.
Lattice build_lattice(double r, double coverage_radius, const LatticeOptions& opts = {});

/// Max over `samples` random points (|z| <= coverage_radius) of the number of
/// centers within Bergman distance factor * r.
int covering_multiplicity(const Lattice& lat, double factor, int samples,
                          std::uint64_t seed = defaults::seed);

}  // namespace berg
