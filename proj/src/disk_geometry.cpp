#include "berg/disk_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace berg {

DiskPoint mobius(DiskPoint a, DiskPoint w) {
  const Complex denom = 1.0 - std::conj(a) * w;
  if (std::abs(denom) < defaults::boundary_eps) {
    throw NumericError("mobius: 1 - conj(a)*w underflows (points too close to the boundary)");
  }
  return (a - w) / denom;
}

double pseudo_distance(DiskPoint z, DiskPoint w) {
  return std::abs(mobius(z, w));
}

double bergman_distance(DiskPoint z, DiskPoint w) {
  const double d = pseudo_distance(z, w);
  if (d >= 1.0 - 1e-15) {
    throw NumericError("bergman_distance: pseudo-hyperbolic distance at the boundary, beta overflows");
  }
  return std::atanh(d);
}

EuclideanDisk pseudo_disk_euclidean(DiskPoint z, double s) {
  const double zz = std::norm(z);
  const double denom = 1.0 - s * s * zz;
  return EuclideanDisk{z * (1.0 - s * s) / denom, s * (1.0 - zz) / denom};
}

namespace {

// Center-outward candidate net with Bergman-metric spacing `h`: rings at
// hyperbolic radii k*h, ring k holding enough angles to keep arc spacing <= h.
std::vector<DiskPoint> spiral_net(double coverage_radius, double h) {
  std::vector<DiskPoint> net;
  net.emplace_back(0.0, 0.0);
  const double u_max = std::atanh(coverage_radius);
  const int rings = static_cast<int>(std::ceil(u_max / h));
  for (int k = 1; k <= rings; ++k) {
    const double u = std::min(k * h, u_max);
    const double t = std::tanh(u);
    // circumference of the hyperbolic circle of radius u is 2*pi*sinh(2u)/2
    const double circumference = kPi * std::sinh(2.0 * u);
    const int m = std::max(8, static_cast<int>(std::ceil(circumference / h)));
    const double offset = 0.61803398875 * k;  // decorrelate ring phases
    for (int l = 0; l < m; ++l) {
      const double theta = 2.0 * kPi * (l + offset) / m;
      net.push_back(std::polar(t, theta));
    }
  }
  return net;
}

}  // namespace

Lattice build_lattice(double r, double coverage_radius, const LatticeOptions& opts) {
  if (!(r > 0.0) || r > 5.0) {
    throw std::invalid_argument("build_lattice: r must lie in (0, 5]");
  }
  if (!(coverage_radius > 0.0) || coverage_radius > 1.0 - 1e-6) {
    throw std::invalid_argument("build_lattice: coverage_radius must lie in (0, 1 - 1e-6]");
  }

  // Size forecast: hyperbolic area of the coverage disk over the area of a
  // Bergman r/2 ball. Rejects hopeless (r, coverage) combinations up front.
  const double s = coverage_radius;
  const double area = s * s / (1.0 - s * s);
  const double cell = std::sinh(r / 2.0) * std::sinh(r / 2.0);
  if (area / cell > 4.0 * opts.max_points) {
    throw NumericError("build_lattice: forecast lattice size exceeds the configured cap");
  }

  const double h = std::min(opts.net_spacing_factor * r, 0.05);
  std::vector<DiskPoint> net = spiral_net(coverage_radius, h);

  if (opts.ordering == LatticeOrdering::kShuffled) {
    Rng rng(opts.ordering_seed);
    for (std::size_t i = net.size(); i > 1; --i) {
      const std::size_t j = rng.next_u64() % i;
      std::swap(net[i - 1], net[j]);
    }
  }

  const double sep = std::tanh(r);  // compare in pseudo-hyperbolic scale
  Lattice lat;
  lat.radius_r = r;
  lat.coverage_radius = coverage_radius;
  for (const DiskPoint& c : net) {
    bool keep = true;
    for (const DiskPoint& a : lat.centers) {
      // cheap reject: d(z,w) >= |z-w|/2, so |z-w| >= 2*sep guarantees separation
      if (std::abs(c - a) >= 2.0 * sep) continue;
      if (pseudo_distance(c, a) < sep) {
        keep = false;
        break;
      }
    }
    if (keep) {
      lat.centers.push_back(c);
      if (static_cast<int>(lat.centers.size()) > opts.max_points) {
        throw NumericError("build_lattice: lattice size exceeds the configured cap");
      }
    }
  }
  return lat;
}

int covering_multiplicity(const Lattice& lat, double factor, int samples, std::uint64_t seed) {
  if (!(factor > 0.0)) throw std::invalid_argument("covering_multiplicity: factor must be > 0");
  Rng rng(seed);
  const double s = std::tanh(factor * lat.radius_r);
  int max_count = 0;
  for (int i = 0; i < samples; ++i) {
    const DiskPoint z = rng.disk_point(lat.coverage_radius);
    int count = 0;
    for (const DiskPoint& a : lat.centers) {
      if (pseudo_distance(z, a) < s) ++count;
    }
    max_count = std::max(max_count, count);
  }
  return max_count;
}

}  // namespace berg
