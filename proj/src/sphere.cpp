#include "spinphase/sphere.hpp"

#include <cmath>

#include "spinphase/errors.hpp"
#include "spinphase/parallel.hpp"
#include "spinphase/special.hpp"

namespace spinphase {

SWKernel::SWKernel(HalfInt j, std::vector<int> eps_signs)
    : j_(j), eps_(std::move(eps_signs)) {
  if (!j.nonnegative()) throw InvalidIndex("spin j must be >= 0");
  const int two_j = j.twice();
  if (static_cast<int>(eps_.size()) != two_j + 1) {
    throw InvalidSigns("eps needs one sign per l = 0..2j");
  }
  if (eps_[0] != 1) throw InvalidSigns("eps_0 must be +1");
  for (int s : eps_) {
    if (s != 1 && s != -1) throw InvalidSigns("eps entries must be +-1");
  }

  const int d = two_j + 1;
  prefactor_ = std::sqrt(4.0 * M_PI / d);
  coeff_.resize(two_j + 1);
  for (int l = 0; l <= two_j; ++l) {
    coeff_[l] = Eigen::MatrixXd::Zero(d, d);
    for (int a = 0; a < d; ++a) {
      const HalfInt ma = HalfInt::from_twice(two_j - 2 * a);
      const double phase = ((j_ - ma).twice() / 2) % 2 == 0 ? 1.0 : -1.0;
      for (int b = 0; b < d; ++b) {
        const HalfInt mb = HalfInt::from_twice(two_j - 2 * b);
        const int m = a - b;  // order of the harmonic attached to (a, b)
        if (std::abs(m) > l) continue;
        coeff_[l](a, b) =
            eps_[l] * phase *
            clebsch_gordan(j_, mb, j_, -ma, HalfInt::from_twice(2 * l),
                           HalfInt::from_twice(2 * m));
      }
    }
  }
}

SWKernel SWKernel::standard(HalfInt j) {
  return SWKernel(j, std::vector<int>(j.twice() + 1, 1));
}

Matrix SWKernel::evaluate(double theta, double phi) const {
  const int d = dim();
  const HarmonicTable harmonics(j_.twice(), theta, phi);
  Matrix z = Matrix::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const int m = a - b;
      Complex sum = 0.0;
      for (int l = std::abs(m); l <= j_.twice(); ++l) {
        sum += coeff_[l](a, b) * harmonics(l, m);
      }
      z(a, b) = prefactor_ * sum;
    }
  }
  return z;
}

std::shared_ptr<const std::vector<Matrix>> SWKernel::table(const GridPtr& grid) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(grid.get());
    if (it != cache_.end() && it->second.grid.lock() == grid) {
      return it->second.table;
    }
  }
  auto matrices = std::make_shared<std::vector<Matrix>>(grid->size());
#pragma omp parallel for schedule(static) num_threads(thread_count())
  for (int node = 0; node < grid->size(); ++node) {
    (*matrices)[node] = evaluate(grid->node_theta(node), grid->node_phi(node));
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto& entry = cache_[grid.get()];
  entry.grid = grid;
  entry.table = std::move(matrices);
  return entry.table;
}

SphereField::SphereField(GridPtr g, Vector v) : grid(std::move(g)), values(std::move(v)) {
  if (!grid) throw GridMismatch("field needs a grid");
  if (values.size() != grid->size()) throw GridMismatch("value count != node count");
}

void require_same_grid(const SphereField& a, const SphereField& b) {
  if (a.grid != b.grid) throw GridMismatch("fields live on different grids");
}

SphereField operator+(const SphereField& a, const SphereField& b) {
  require_same_grid(a, b);
  return SphereField(a.grid, a.values + b.values);
}

SphereField operator-(const SphereField& a, const SphereField& b) {
  require_same_grid(a, b);
  return SphereField(a.grid, a.values - b.values);
}

SphereField operator*(Complex scale, const SphereField& f) {
  return SphereField(f.grid, scale * f.values);
}

SphereField conjugate(const SphereField& f) {
  return SphereField(f.grid, f.values.conjugate());
}

SphereField pointwise(const SphereField& a, const SphereField& b) {
  require_same_grid(a, b);
  return SphereField(a.grid, a.values.cwiseProduct(b.values));
}

double max_abs_difference(const SphereField& a, const SphereField& b) {
  require_same_grid(a, b);
  return (a.values - b.values).cwiseAbs().maxCoeff();
}

std::vector<Complex> harmonic_coeffs(const SphereField& field, int lmax) {
  const SphereGrid& grid = *field.grid;
  std::vector<Complex> coeffs((lmax + 1) * (lmax + 1), Complex(0.0));
  for (int node = 0; node < grid.size(); ++node) {
    const HarmonicTable harmonics(lmax, grid.node_theta(node), grid.node_phi(node));
    const Complex wf = grid.weight(node) * field.values(node);
    for (int l = 0; l <= lmax; ++l) {
      for (int m = -l; m <= l; ++m) {
        coeffs[HarmonicTable::lm_index(l, m)] += wf * std::conj(harmonics(l, m));
      }
    }
  }
  return coeffs;
}

namespace {

void require_dim(const SpinOperator& x, const SWKernel& kernel) {
  if (x.j != kernel.j()) throw DimensionMismatch("operator j != kernel j");
}

void require_normalized_window(const SpinState& phi) {
  if (!phi.is_normalized(1e-12)) throw NotNormalized("window state must be normalized");
}

}  // namespace

SphereField symbol_of_operator(const SpinOperator& x, const SWKernel& kernel,
                               const GridPtr& grid) {
  require_dim(x, kernel);
  auto table = kernel.table(grid);
  Vector values(grid->size());
#pragma omp parallel for schedule(static) num_threads(thread_count())
  for (int node = 0; node < grid->size(); ++node) {
    values(node) = (x.matrix * (*table)[node]).trace();
  }
  return SphereField(grid, std::move(values));
}

SpinOperator operator_of_symbol(const SphereField& f, const SWKernel& kernel) {
  const int two_j = kernel.j().twice();
  if (f.grid->band_limit() < 2 * two_j) {
    throw InsufficientBandLimit("grid band limit must be >= 2*(2j)");
  }
  auto table = kernel.table(f.grid);
  const int d = kernel.dim();
  Matrix x = Matrix::Zero(d, d);
  for (int node = 0; node < f.grid->size(); ++node) {
    x += (f.grid->weight(node) * f.values(node)) * (*table)[node];
  }
  x *= (two_j + 1.0) / (4.0 * M_PI);
  return SpinOperator{kernel.j(), std::move(x)};
}

SphereField amplitude_field(const SpinState& psi, const SpinState& phi,
                            const SWKernel& kernel, const GridPtr& grid) {
  if (psi.j() != kernel.j() || phi.j() != kernel.j()) {
    throw DimensionMismatch("state j != kernel j");
  }
  require_normalized_window(phi);
  const AmplitudeOperator dyad = amplitude_operator(psi, phi);
  return symbol_of_operator(SpinOperator{dyad.j, dyad.matrix}, kernel, grid);
}

Complex HalfSpinCoeffs::evaluate(double theta, double phi) const {
  const double sqrt_pi = std::sqrt(M_PI);
  return sqrt_pi * (a00 * spherical_harmonic(0, 0, theta, phi) +
                    a1m1 * spherical_harmonic(1, -1, theta, phi) +
                    a10 * spherical_harmonic(1, 0, theta, phi) +
                    a11 * spherical_harmonic(1, 1, theta, phi));
}

SphereField HalfSpinCoeffs::to_field(const GridPtr& grid) const {
  Vector values(grid->size());
  for (int node = 0; node < grid->size(); ++node) {
    values(node) = evaluate(grid->node_theta(node), grid->node_phi(node));
  }
  return SphereField(grid, std::move(values));
}

double HalfSpinCoeffs::max_abs_difference(const HalfSpinCoeffs& other) const {
  return std::max({std::abs(a00 - other.a00), std::abs(a1m1 - other.a1m1),
                   std::abs(a10 - other.a10), std::abs(a11 - other.a11)});
}

namespace {

void require_half(const SpinState& s) {
  if (s.j() != half()) throw DimensionMismatch("closed-form coefficients exist for j = 1/2");
}

}  // namespace

HalfSpinCoeffs amplitude_coeffs_half(const SpinState& psi, const SpinState& phi) {
  require_half(psi);
  require_half(phi);
  require_normalized_window(phi);
  const Complex pu = psi.components()(0), pd = psi.components()(1);
  const Complex wu = std::conj(phi.components()(0)), wd = std::conj(phi.components()(1));
  const double r2 = std::sqrt(2.0);
  return HalfSpinCoeffs{pu * wu + pd * wd, r2 * pd * wu, pu * wu - pd * wd,
                        -r2 * pu * wd};
}

SphereField wigner_field(const SpinState& psi, const SWKernel& kernel,
                         const GridPtr& grid) {
  if (psi.j() != kernel.j()) throw DimensionMismatch("state j != kernel j");
  if (!psi.is_normalized(1e-12)) throw NotNormalized("Wigner input must be normalized");
  const Matrix rho = psi.components() * psi.components().adjoint();
  return symbol_of_operator(SpinOperator{psi.j(), rho}, kernel, grid);
}

HalfSpinCoeffs wigner_coeffs_half(const SpinState& psi) {
  require_half(psi);
  if (!psi.is_normalized(1e-12)) throw NotNormalized("Wigner input must be normalized");
  const Complex pu = psi.components()(0), pd = psi.components()(1);
  const double r2 = std::sqrt(2.0);
  return HalfSpinCoeffs{1.0, r2 * pd * std::conj(pu),
                        std::norm(pu) - std::norm(pd), -r2 * pu * std::conj(pd)};
}

HalfSpinCoeffs rotated_coeffs_half(const SpinState& psi, const SpinState& phi,
                                   double alpha) {
  require_half(psi);
  require_half(phi);
  require_normalized_window(phi);
  const Complex pu = psi.components()(0), pd = psi.components()(1);
  const Complex wu = std::conj(phi.components()(0)), wd = std::conj(phi.components()(1));
  const double c = std::cos(0.5 * alpha), s = std::sin(0.5 * alpha);
  const double r2 = std::sqrt(2.0);
  return HalfSpinCoeffs{
      (pu * wu + pd * wd) * c - (pd * wu - pu * wd) * s,
      r2 * (pd * wu * c + pu * wu * s),
      (pu * wu - pd * wd) * c - (pd * wu + pu * wd) * s,
      -r2 * (pu * wd * c - pd * wd * s)};
}

SphereField star_product(const SphereField& f, const SphereField& g,
                         const SWKernel& kernel, StarRoute route) {
  require_same_grid(f, g);
  if (route == StarRoute::Operator) {
    const SpinOperator fo = operator_of_symbol(f, kernel);
    const SpinOperator go = operator_of_symbol(g, kernel);
    return symbol_of_operator(SpinOperator{fo.j, fo.matrix * go.matrix}, kernel,
                              f.grid);
  }

  const SphereGrid& grid = *f.grid;
  auto table = kernel.table(f.grid);
  const int n = grid.size();
  const double scale = std::pow((kernel.j().twice() + 1.0) / (4.0 * M_PI), 2);
  Vector out(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (int node = 0; node < n; ++node) {
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k) {
      const Matrix left = (*table)[node] * (*table)[k];
      const Complex fk = grid.weight(k) * f.values(k);
      Complex inner = 0.0;
      for (int l = 0; l < n; ++l) {
        // Tr(left * Delta_l) without forming the product matrix
        const Complex trace = (left.transpose().cwiseProduct((*table)[l])).sum();
        inner += grid.weight(l) * g.values(l) * trace;
      }
      acc += fk * inner;
    }
    out(node) = scale * acc;
  }
  return SphereField(f.grid, std::move(out));
}

SphereField husimi_field(const SpinState& psi, const SpinState& phi,
                         const SWKernel& kernel, const GridPtr& grid) {
  if (!psi.is_normalized(1e-12)) throw NotNormalized("Husimi needs normalized psi");
  require_normalized_window(phi);
  const SphereField amp = amplitude_field(psi, phi, kernel, grid);
  Vector values = amp.values.cwiseAbs2().cast<Complex>();

  // Sandwich route <phi| Delta rho Delta |phi>, kept as a live cross-check.
  auto table = kernel.table(grid);
  const Matrix rho = psi.components() * psi.components().adjoint();
  double worst = 0.0;
  for (int node = 0; node < grid->size(); ++node) {
    const Complex sandwich = phi.components().adjoint() * (*table)[node] * rho *
                             (*table)[node] * phi.components();
    worst = std::max(worst, std::abs(sandwich - values(node)));
  }
  if (worst > 1e-12) {
    throw ContractViolation("Husimi routes disagree by " + std::to_string(worst));
  }
  return SphereField(grid, std::move(values));
}

SphereField rotate_amplitude(const SpinState& psi, const SpinState& phi,
                             const SpinOperator& rotation, const SWKernel& kernel,
                             const GridPtr& grid) {
  if (rotation.j != kernel.j()) throw DimensionMismatch("rotation j != kernel j");
  if (!is_unitary(rotation.matrix, 1e-10)) {
    throw NotUnitary("rotation operator deviates from unitarity");
  }
  const SphereField r_symbol = symbol_of_operator(rotation, kernel, grid);
  const SphereField amp = amplitude_field(psi, phi, kernel, grid);
  return star_product(r_symbol, amp, kernel, StarRoute::Operator);
}

SuperposedFields superpose_and_reconstruct(const SpinState& psi1,
                                           const SpinState& psi2, Complex alpha,
                                           Complex beta, const SpinState& phi,
                                           const SWKernel& kernel,
                                           const GridPtr& grid) {
  const SphereField f1 = amplitude_field(psi1, phi, kernel, grid);
  const SphereField f2 = amplitude_field(psi2, phi, kernel, grid);
  SphereField amp = alpha * f1 + beta * f2;

  const SphereField w1 = star_product(f1, conjugate(f1), kernel);
  const SphereField w2 = star_product(f2, conjugate(f2), kernel);
  const SphereField cross12 = star_product(f1, conjugate(f2), kernel);
  const SphereField cross21 = star_product(f2, conjugate(f1), kernel);
  SphereField wigner = std::norm(alpha) * w1 + std::norm(beta) * w2 +
                       (alpha * std::conj(beta)) * cross12 +
                       (beta * std::conj(alpha)) * cross21;

  const SphereField h1 = pointwise(f1, conjugate(f1));
  const SphereField h2 = pointwise(f2, conjugate(f2));
  SphereField husimi = std::norm(alpha) * h1 + std::norm(beta) * h2 +
                       (alpha * std::conj(beta)) * pointwise(f1, conjugate(f2)) +
                       (beta * std::conj(alpha)) * pointwise(f2, conjugate(f1));

  return SuperposedFields{std::move(amp), std::move(wigner), std::move(husimi)};
}

Complex expectation_phase_space(const SpinOperator& a, const SpinState& psi,
                                const SpinState& phi, const SWKernel& kernel,
                                const GridPtr& grid) {
  require_dim(a, kernel);
  if (!psi.is_normalized(1e-12) || !phi.is_normalized(1e-12)) {
    throw NotNormalized("expectation needs normalized psi and phi");
  }
  const SphereField amp = amplitude_field(psi, phi, kernel, grid);
  const SphereField a_symbol = symbol_of_operator(a, kernel, grid);
  const SphereField a_star_psi = star_product(a_symbol, amp, kernel);
  const Complex overlap =
      integrate(*grid, amp.values.conjugate().cwiseProduct(a_star_psi.values));
  return (kernel.j().twice() + 1.0) / (4.0 * M_PI) * overlap;
}

}  // namespace spinphase
