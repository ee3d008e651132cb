#include "spinphase/verify.hpp"

#include <cmath>

#include "spinphase/lattice.hpp"
#include "spinphase/nmr.hpp"
#include "spinphase/quadrature.hpp"
#include "spinphase/reference.hpp"
#include "spinphase/special.hpp"
#include "spinphase/sphere.hpp"

namespace spinphase {

SpinState random_state(HalfInt j, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector c(j.twice() + 1);
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = Complex(gauss(rng), gauss(rng));
  return SpinState(j, c / c.norm());
}

SpinOperator random_hermitian(HalfInt j, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int d = j.twice() + 1;
  Matrix m(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  }
  return SpinOperator{j, 0.5 * (m + m.adjoint().eval())};
}

namespace {

struct Suite {
  std::vector<CheckResult> results;

  void record(const std::string& name, double err, double tol) {
    results.push_back(CheckResult{name, err, tol, err <= tol});
  }
};

double kernel_point_axioms(HalfInt j, int n_points, std::mt19937_64& rng) {
  const SWKernel kernel = SWKernel::standard(j);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < n_points; ++k) {
    const double theta = std::acos(2.0 * u01(rng) - 1.0);
    const double phi = 2.0 * M_PI * u01(rng);
    const Matrix delta = kernel.evaluate(theta, phi);
    worst = std::max(worst, (delta - delta.adjoint().eval()).cwiseAbs().maxCoeff());
    worst = std::max(worst, std::abs(delta.trace() - Complex(1.0)));
  }
  return worst;
}

double kernel_identity_integral(HalfInt j) {
  const SWKernel kernel = SWKernel::standard(j);
  const GridPtr grid = build_grid(2 * j.twice() + 2);
  auto table = kernel.table(grid);
  const int d = kernel.dim();
  Matrix sum = Matrix::Zero(d, d);
  for (int node = 0; node < grid->size(); ++node) {
    sum += grid->weight(node) * (*table)[node];
  }
  sum *= (j.twice() + 1.0) / (4.0 * M_PI);
  return (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

double kernel_reproducing(HalfInt j, int n_ops, std::mt19937_64& rng) {
  const SWKernel kernel = SWKernel::standard(j);
  const GridPtr grid = build_grid(2 * j.twice() + 2);
  double worst = 0.0;
  for (int k = 0; k < n_ops; ++k) {
    const SpinOperator x = random_hermitian(j, rng);
    const SphereField symbol = symbol_of_operator(x, kernel, grid);
    const SpinOperator back = operator_of_symbol(symbol, kernel);
    worst = std::max(worst, (back.matrix - x.matrix).cwiseAbs().maxCoeff());
  }
  return worst;
}

double half_kernel_closed_form(int n_points, std::mt19937_64& rng) {
  const SWKernel kernel = SWKernel::standard(half());
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const Matrix sx = pauli(Axis::X).matrix, sy = pauli(Axis::Y).matrix,
               sz = pauli(Axis::Z).matrix;
  double worst = 0.0;
  for (int k = 0; k < n_points; ++k) {
    const double theta = std::acos(2.0 * u01(rng) - 1.0);
    const double phi = 2.0 * M_PI * u01(rng);
    const Matrix closed =
        0.5 * (Matrix::Identity(2, 2) +
               std::sqrt(3.0) * (std::sin(theta) * std::cos(phi) * sx +
                                 std::sin(theta) * std::sin(phi) * sy +
                                 std::cos(theta) * sz));
    worst = std::max(
        worst, (kernel.evaluate(theta, phi) - closed).cwiseAbs().maxCoeff());
  }
  return worst;
}

double born_rule_sphere(int n_pairs, StarRoute route, std::mt19937_64& rng) {
  const SWKernel kernel = SWKernel::standard(half());
  const GridPtr grid = build_grid(recommended_band_limit(1));
  double worst = 0.0;
  for (int k = 0; k < n_pairs; ++k) {
    const SpinState psi = random_state(half(), rng);
    const SpinState phi = random_state(half(), rng);
    const SphereField amp = amplitude_field(psi, phi, kernel, grid);
    const SphereField w = wigner_field(psi, kernel, grid);
    const SphereField star = star_product(amp, conjugate(amp), kernel, route);
    worst = std::max(worst, max_abs_difference(w, star));
  }
  return worst;
}

double window_independence(int n_draws, std::mt19937_64& rng) {
  const SWKernel kernel = SWKernel::standard(half());
  const GridPtr grid = build_grid(recommended_band_limit(1));
  double worst = 0.0;
  for (int k = 0; k < n_draws; ++k) {
    const SpinState psi = random_state(half(), rng);
    const SpinState w1 = random_state(half(), rng);
    const SpinState w2 = random_state(half(), rng);
    const SphereField a1 = amplitude_field(psi, w1, kernel, grid);
    const SphereField a2 = amplitude_field(psi, w2, kernel, grid);
    const SphereField wa = star_product(a1, conjugate(a1), kernel);
    const SphereField wb = star_product(a2, conjugate(a2), kernel);
    worst = std::max(worst, max_abs_difference(wa, wb));
  }
  return worst;
}

double sign_flip_sphere(std::mt19937_64& rng) {
  const SWKernel kernel = SWKernel::standard(half());
  const GridPtr grid = build_grid(recommended_band_limit(1));
  const SpinState psi = random_state(half(), rng);
  const SpinState phi = random_state(half(), rng);
  const SphereField amp = amplitude_field(psi, phi, kernel, grid);
  const SphereField full_turn =
      rotate_amplitude(psi, phi, rotation_y(half(), 2.0 * M_PI), kernel, grid);
  const SphereField two_turns =
      rotate_amplitude(psi, phi, rotation_y(half(), 4.0 * M_PI), kernel, grid);
  const double flip = max_abs_difference(full_turn, Complex(-1.0) * amp);
  const double restore = max_abs_difference(two_turns, amp);
  return std::max(flip, restore);
}

double sign_flip_lattice(std::mt19937_64& rng) {
  const LatticeKernel kernel = LatticeKernel::half_spin();
  const SpinState psi = random_state(half(), rng);
  const SpinState phi = random_state(half(), rng);
  const LatticeField amp = lattice_amplitude(psi, phi, kernel);
  const LatticeField full_turn = lattice_rotate(psi, phi, 2.0 * M_PI, kernel);
  const LatticeField two_turns = lattice_rotate(psi, phi, 4.0 * M_PI, kernel);
  const double flip = max_abs_difference(full_turn, Complex(-1.0) * amp);
  const double restore = max_abs_difference(two_turns, amp);
  return std::max(flip, restore);
}

double lattice_axioms(const std::vector<int>& dims, bool inject_fault) {
  double worst = 0.0;
  for (int d : dims) {
    LatticeKernel kernel = (d == 2) ? LatticeKernel::half_spin() : LatticeKernel::odd(d);
    double err = kernel.max_axiom_error();
    if (inject_fault && d == 2) {
      // Negative control: re-run the axiom sums with one corrupted entry.
      Matrix corrupted = kernel.at(0, 0);
      corrupted(0, 0) += 1e-6;
      err = std::max(err, std::abs(corrupted.trace() - Complex(1.0)));
    }
    worst = std::max(worst, err);
  }
  return worst;
}

double born_rule_lattice(int n_pairs, std::mt19937_64& rng) {
  const LatticeKernel kernel = LatticeKernel::half_spin();
  double worst = 0.0;
  for (int k = 0; k < n_pairs; ++k) {
    const SpinState psi = random_state(half(), rng);
    const SpinState phi = random_state(half(), rng);
    const LatticeField amp = lattice_amplitude(psi, phi, kernel);
    const LatticeField w = lattice_wigner(psi, kernel);
    const LatticeField star =
        (1.0 / kernel.dim()) * lattice_star(amp, conjugate(amp), kernel);
    worst = std::max(worst, max_abs_difference(w, star));
  }
  return worst;
}

double symplectic_fourier_pauli() {
  const LatticeKernel kernel = LatticeKernel::half_spin();
  const auto displacement = symplectic_fourier(kernel);
  double worst = 0.0;
  worst = std::max(worst,
                   (displacement[0] - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff());
  worst = std::max(worst, (displacement[1] - pauli(Axis::X).matrix).cwiseAbs().maxCoeff());
  worst = std::max(worst, (displacement[2] - pauli(Axis::Z).matrix).cwiseAbs().maxCoeff());
  worst = std::max(worst, (displacement[3] - pauli(Axis::Y).matrix).cwiseAbs().maxCoeff());
  return worst;
}

double coefficient_suites(int n_draws, std::mt19937_64& rng) {
  const SWKernel kernel = SWKernel::standard(half());
  const LatticeKernel lattice = LatticeKernel::half_spin();
  const GridPtr grid = build_grid(recommended_band_limit(1));
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  double worst = 0.0;
  for (int k = 0; k < n_draws; ++k) {
    const SpinState psi = random_state(half(), rng);
    const SpinState phi = random_state(half(), rng);
    const double alpha = angle(rng);

    // Amplitude coefficients against the trace form.
    const SphereField amp = amplitude_field(psi, phi, kernel, grid);
    worst = std::max(worst, max_abs_difference(
                                amp, amplitude_coeffs_half(psi, phi).to_field(grid)));
    // Wigner coefficients.
    const SphereField w = wigner_field(psi, kernel, grid);
    worst = std::max(worst,
                     max_abs_difference(w, wigner_coeffs_half(psi).to_field(grid)));
    // Rotated coefficients against the rotated-state amplitude.
    const SpinState rotated(half(), rotation_y(half(), alpha).matrix * psi.components());
    worst = std::max(worst, rotated_coeffs_half(psi, phi, alpha).max_abs_difference(
                                amplitude_coeffs_half(rotated, phi)));
    // Lattice closed forms.
    worst = std::max(worst, max_abs_difference(lattice_amplitude(psi, phi, lattice),
                                               lattice_amplitude_closed(psi, phi)));
    worst = std::max(worst, max_abs_difference(lattice_wigner(psi, lattice),
                                               lattice_wigner_closed(psi)));
    worst = std::max(worst, max_abs_difference(lattice_rotate(psi, phi, alpha, lattice),
                                               lattice_rotate_closed(psi, phi, alpha)));
  }
  return worst;
}

double rotation_symbol_images(std::mt19937_64& rng) {
  // Images of the y-rotation on the four lattice points.
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const LatticeKernel kernel = LatticeKernel::half_spin();
  double worst = 0.0;
  for (int k = 0; k < 8; ++k) {
    const double alpha = angle(rng);
    const LatticeField expected = lattice_rotation_symbol(alpha);
    const LatticeField actual =
        lattice_symbol(rotation_y(half(), alpha), kernel);
    worst = std::max(worst, max_abs_difference(expected, actual));
  }
  return worst;
}

double nmr_closed_forms(int n_draws, std::mt19937_64& rng) {
  const LatticeKernel lattice = LatticeKernel::half_spin();
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  double worst = 0.0;
  for (int k = 0; k < n_draws; ++k) {
    const SpinState psi = random_state(half(), rng);
    const SpinState phi = random_state(half(), rng);
    NMRParams p;
    p.omega0 = u(rng);
    p.omega_ref = u(rng);
    p.omega_nut = u(rng);
    p.chi_p = angle(rng);
    const double t = std::abs(u(rng));

    const SpinState evolved(half(), propagator(p, t).matrix * psi.components());
    // Sphere coefficients against propagate-then-transform.
    worst = std::max(worst, nmr_coeffs(psi, phi, p, t).max_abs_difference(
                                amplitude_coeffs_half(evolved, phi)));
    // Lattice closed forms against the trace route.
    worst = std::max(worst,
                     max_abs_difference(nmr_lattice_closed(psi, phi, p, t),
                                        evolve_amplitude_lattice(psi, phi, p, t, lattice)));
    // Resonance forms; the flip angle keeps the sign of omega_nut.
    NMRParams res = p;
    res.omega_ref = res.omega0;
    const double alpha = res.omega_nut * t;
    worst = std::max(worst, nmr_coeffs_resonance(psi, phi, p.chi_p, alpha)
                                .max_abs_difference(nmr_coeffs(psi, phi, res, t)));
    worst = std::max(worst,
                     max_abs_difference(nmr_lattice_resonance(psi, phi, p.chi_p, alpha),
                                        nmr_lattice_closed(psi, phi, res, t)));
  }
  return worst;
}

double nmr_route_equivalence(int n_draws, std::mt19937_64& rng) {
  const SWKernel kernel = SWKernel::standard(half());
  const GridPtr grid = build_grid(recommended_band_limit(1));
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0.0;
  for (int k = 0; k < n_draws; ++k) {
    const SpinState psi = random_state(half(), rng);
    const SpinState phi = random_state(half(), rng);
    NMRParams p;
    p.omega0 = u(rng);
    p.omega_ref = u(rng);
    p.omega_nut = u(rng);
    p.chi_p = u(rng);
    const EvolvedSphere evolved =
        evolve_amplitude_sphere(psi, phi, p, std::abs(u(rng)), kernel, grid);
    worst = std::max(worst, max_abs_difference(evolved.field, evolved.star_route));
  }
  return worst;
}

double negativity_example() {
  Vector c(2);
  c << Complex(1.0, -1.0) / std::sqrt(2.0), std::sqrt(2.0) * Complex(1.0, 1.0);
  const SpinState psi(half(), std::move(c));
  const LatticeField w = lattice_wigner_closed(psi, /*require_normalized=*/false);
  return std::abs(w.at(1, 0) - Complex(-0.5));
}

double husimi_quadrupole_content() {
  // |Psi|^2 for psi = phi = (1,0) carries l = 2 content: the Y_20 projection
  // equals sqrt(5 pi)/5 and is far from zero.
  const SWKernel kernel = SWKernel::standard(half());
  const GridPtr grid = build_grid(recommended_band_limit(1));
  Vector up(2);
  up << 1.0, 0.0;
  const SpinState psi(half(), up);
  const SphereField h = husimi_field(psi, psi, kernel, grid);
  const auto coeffs = harmonic_coeffs(h, 2);
  const Complex b20 = coeffs[HarmonicTable::lm_index(2, 0)];
  return std::abs(b20 - Complex(std::sqrt(5.0 * M_PI) / 5.0));
}

double star_integral_vs_reference(int band_limit, std::mt19937_64& rng) {
  const SWKernel kernel = SWKernel::standard(half());
  const GridPtr grid = build_grid(band_limit);
  const SpinState psi = random_state(half(), rng);
  const SpinState phi = random_state(half(), rng);
  const SphereField amp = amplitude_field(psi, phi, kernel, grid);
  const SphereField parallel_route =
      star_product(amp, conjugate(amp), kernel, StarRoute::Integral);
  const SphereField serial_route =
      reference::star_product_integral(amp, conjugate(amp), kernel);
  double worst = max_abs_difference(parallel_route, serial_route);
  worst = std::max(worst, max_abs_difference(parallel_route,
                                             wigner_field(psi, kernel, grid)));
  return worst;
}

}  // namespace

std::vector<CheckResult> run_verification(VerifyLevel level, bool inject_fault) {
  std::mt19937_64 rng(20250811);
  Suite suite;
  const bool full = level == VerifyLevel::Full;

  double worst = 0.0;
  for (int two_j : {1, 2, 3}) {
    worst = std::max(worst, kernel_point_axioms(HalfInt::from_twice(two_j),
                                                full ? 200 : 50, rng));
  }
  suite.record("sphere kernel hermiticity and unit trace", worst, 1e-12);

  worst = 0.0;
  for (int two_j : {1, 2, 3}) {
    worst = std::max(worst, kernel_identity_integral(HalfInt::from_twice(two_j)));
  }
  suite.record("sphere kernel identity integral", worst, 1e-10);

  worst = 0.0;
  for (int two_j : {1, 2, 3}) {
    worst = std::max(worst, kernel_reproducing(HalfInt::from_twice(two_j),
                                               full ? 20 : 5, rng));
  }
  suite.record("sphere kernel reproducing property", worst, 1e-9);

  suite.record("sphere kernel j=1/2 closed form",
               half_kernel_closed_form(full ? 200 : 50, rng), 1e-12);
  suite.record("Born rule on the sphere (operator route)",
               born_rule_sphere(full ? 100 : 20, StarRoute::Operator, rng), 1e-9);
  suite.record("Born rule on the sphere (integral route)",
               born_rule_sphere(full ? 20 : 5, StarRoute::Integral, rng), 1e-9);
  suite.record("Wigner window independence", window_independence(full ? 20 : 5, rng),
               1e-10);
  suite.record("spinor sign flip on the sphere", sign_flip_sphere(rng), 1e-12);
  suite.record("spinor sign flip on the lattice", sign_flip_lattice(rng), 1e-12);

  const std::vector<int> dims = full ? std::vector<int>{2, 3, 5, 7}
                                     : std::vector<int>{2, 3};
  suite.record("lattice kernel axioms", lattice_axioms(dims, inject_fault), 1e-12);
  suite.record("Born rule on the lattice", born_rule_lattice(full ? 100 : 20, rng),
               1e-12);
  suite.record("symplectic Fourier gives the Pauli set", symplectic_fourier_pauli(),
               1e-15);
  suite.record("closed-form coefficient suites", coefficient_suites(full ? 100 : 20, rng),
               1e-12);
  suite.record("rotation images on the lattice", rotation_symbol_images(rng), 1e-12);
  suite.record("NMR closed forms vs propagate-then-transform",
               nmr_closed_forms(full ? 100 : 20, rng), 1e-12);
  suite.record("negativity example W(1,0) = -1/2", negativity_example(), 1e-12);
  suite.record("Husimi l=2 content of the basis state", husimi_quadrupole_content(),
               1e-10);

  if (full) {
    suite.record("NMR route equivalence", nmr_route_equivalence(10, rng), 1e-10);
    suite.record("integral star route at L=8", star_integral_vs_reference(8, rng),
                 1e-9);
  }

  return suite.results;
}

}  // namespace spinphase
