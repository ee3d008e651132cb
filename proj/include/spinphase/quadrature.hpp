#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <vector>

namespace spinphase {

// Product quadrature over the sphere: Gauss-Legendre in cos(theta) times a
// uniform phi grid.  With band limit L the rule has (L+1) x (2L+2) nodes and
// integrates products of spherical harmonics with l, l' <= L exactly.
// Node order is theta-major: node = i_theta * n_phi + i_phi.
class SphereGrid {
 public:
  explicit SphereGrid(int band_limit);

  int band_limit() const { return band_limit_; }
  int n_theta() const { return static_cast<int>(theta_.size()); }
  int n_phi() const { return n_phi_; }
  int size() const { return n_theta() * n_phi_; }

  double node_theta(int node) const { return theta_[node / n_phi_]; }
  double node_phi(int node) const { return phi_[node % n_phi_]; }
  double weight(int node) const { return theta_weight_[node / n_phi_] * phi_weight_; }

 private:
  int band_limit_;
  int n_phi_;
  double phi_weight_;
  std::vector<double> theta_;
  std::vector<double> theta_weight_;
  std::vector<double> phi_;
};

using GridPtr = std::shared_ptr<const SphereGrid>;

GridPtr build_grid(int band_limit);

// Default band limit for work with products of two degree-(2j) expansions.
inline int recommended_band_limit(int two_j) { return 2 * two_j + 1; }

// Fixed-order weighted sum over the nodes (deterministic).
std::complex<double> integrate(const SphereGrid& grid,
                               const Eigen::VectorXcd& values);

}  // namespace spinphase
