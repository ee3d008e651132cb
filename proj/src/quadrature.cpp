#include "spinphase/quadrature.hpp"

#include <cmath>

#include "spinphase/errors.hpp"

namespace spinphase {

namespace {

// Legendre P_n(x) and its derivative.
void legendre_pair(int n, double x, double* p, double* dp) {
  double p0 = 1.0, p1 = x;
  if (n == 0) {
    *p = 1.0;
    *dp = 0.0;
    return;
  }
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  *p = p1;
  *dp = n * (x * p1 - p0) / (x * x - 1.0);
}

// Gauss-Legendre nodes (descending in x) and weights on [-1, 1] by Newton
// iteration, converged to ~1e-15.
void gauss_legendre(int n, std::vector<double>* nodes, std::vector<double>* weights) {
  nodes->resize(n);
  weights->resize(n);
  for (int k = 0; k < n; ++k) {
    double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
    double p, dp;
    for (int it = 0; it < 100; ++it) {
      legendre_pair(n, x, &p, &dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre_pair(n, x, &p, &dp);
    (*nodes)[k] = x;
    (*weights)[k] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

}  // namespace

SphereGrid::SphereGrid(int band_limit) : band_limit_(band_limit) {
  if (band_limit < 0) throw InvalidIndex("band limit must be >= 0");
  const int n_theta = band_limit + 1;
  n_phi_ = 2 * band_limit + 2;
  phi_weight_ = 2.0 * M_PI / n_phi_;

  std::vector<double> x, w;
  gauss_legendre(n_theta, &x, &w);
  theta_.resize(n_theta);
  theta_weight_ = w;
  for (int i = 0; i < n_theta; ++i) theta_[i] = std::acos(x[i]);

  phi_.resize(n_phi_);
  for (int k = 0; k < n_phi_; ++k) phi_[k] = 2.0 * M_PI * k / n_phi_;
}

GridPtr build_grid(int band_limit) {
  return std::make_shared<const SphereGrid>(band_limit);
}

std::complex<double> integrate(const SphereGrid& grid, const Eigen::VectorXcd& values) {
  if (values.size() != grid.size()) {
    throw GridMismatch("field sampled on a different grid");
  }
  std::complex<double> sum = 0.0;
  for (int node = 0; node < grid.size(); ++node) {
    sum += grid.weight(node) * values(node);
  }
  return sum;
}

}  // namespace spinphase
