// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every tolerance is pinned here, next to its check; criteria with
// several parts report the part that comes closest to (or crosses) its
// tolerance.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "spinphase/lattice.hpp"
#include "spinphase/nmr.hpp"
#include "spinphase/quadrature.hpp"
#include "spinphase/special.hpp"
#include "spinphase/sphere.hpp"
#include "spinphase/verify.hpp"

using namespace spinphase;

namespace {

// Tracks the binding sub-check of a criterion: the one with the largest
// error-to-tolerance ratio.
class Gate {
 public:
  void check(double error, double tolerance) {
    const double ratio = error / tolerance;
    if (ratio >= ratio_) {
      ratio_ = ratio;
      error_ = error;
      tolerance_ = tolerance;
    }
  }
  bool pass() const { return ratio_ <= 1.0; }
  double error() const { return error_; }
  double tolerance() const { return tolerance_; }

 private:
  double ratio_ = 0.0;
  double error_ = 0.0;
  double tolerance_ = 0.0;
};

struct Row {
  int number;
  std::string description;
  Gate gate;
  double seconds;
};

std::vector<Row> rows;

template <typename Fn>
void criterion(int number, const std::string& description, Fn fn) {
  const auto start = std::chrono::steady_clock::now();
  Gate gate;
  fn(gate);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rows.push_back(Row{number, description, gate, seconds});
}

HalfInt h2(int twice) { return HalfInt::from_twice(twice); }

SpinState basis_up() {
  Vector c(2);
  c << 1.0, 0.0;
  return SpinState(half(), c);
}

SpinState basis_down() {
  Vector c(2);
  c << 0.0, 1.0;
  return SpinState(half(), c);
}

void criterion1(Gate& gate) {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int two_j : {1, 2, 3}) {
    const HalfInt j = h2(two_j);
    const SWKernel kernel = SWKernel::standard(j);
    for (int k = 0; k < 200; ++k) {
      const double theta = std::acos(2.0 * u01(rng) - 1.0);
      const double phi = 2.0 * M_PI * u01(rng);
      const Matrix delta = kernel.evaluate(theta, phi);
      gate.check((delta - delta.adjoint().eval()).cwiseAbs().maxCoeff(), 1e-12);
      gate.check(std::abs(delta.trace() - Complex(1.0)), 1e-12);
    }
    const GridPtr grid = build_grid(2 * two_j + 2);
    auto table = kernel.table(grid);
    Matrix sum = Matrix::Zero(kernel.dim(), kernel.dim());
    for (int node = 0; node < grid->size(); ++node) {
      sum += grid->weight(node) * (*table)[node];
    }
    sum *= (two_j + 1.0) / (4.0 * M_PI);
    gate.check(
        (sum - Matrix::Identity(kernel.dim(), kernel.dim())).cwiseAbs().maxCoeff(),
        1e-10);
    for (int k = 0; k < 20; ++k) {
      const SpinOperator x = random_hermitian(j, rng);
      const SpinOperator back =
          operator_of_symbol(symbol_of_operator(x, kernel, grid), kernel);
      gate.check((back.matrix - x.matrix).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

void criterion2(Gate& gate) {
  std::mt19937_64 rng(102);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const SWKernel kernel = SWKernel::standard(half());
  const Matrix sx = pauli(Axis::X).matrix, sy = pauli(Axis::Y).matrix,
               sz = pauli(Axis::Z).matrix;
  for (int k = 0; k < 200; ++k) {
    const double theta = std::acos(2.0 * u01(rng) - 1.0);
    const double phi = 2.0 * M_PI * u01(rng);
    const Matrix closed =
        0.5 * (Matrix::Identity(2, 2) +
               std::sqrt(3.0) * (std::sin(theta) * std::cos(phi) * sx +
                                 std::sin(theta) * std::sin(phi) * sy +
                                 std::cos(theta) * sz));
    gate.check((kernel.evaluate(theta, phi) - closed).cwiseAbs().maxCoeff(), 1e-12);
  }
}

void criterion3(Gate& gate) {
  std::mt19937_64 rng(103);
  const SWKernel kernel = SWKernel::standard(half());
  const LatticeKernel lattice = LatticeKernel::half_spin();
  const GridPtr grid = build_grid(recommended_band_limit(1));
  for (int k = 0; k < 100; ++k) {
    const SpinState psi = random_state(half(), rng);
    const SpinState phi = random_state(half(), rng);
    const SphereField amp = amplitude_field(psi, phi, kernel, grid);
    const SphereField w = wigner_field(psi, kernel, grid);
    gate.check(max_abs_difference(star_product(amp, conjugate(amp), kernel), w), 1e-9);
    gate.check(max_abs_difference(
                   star_product(amp, conjugate(amp), kernel, StarRoute::Integral), w),
               1e-9);
    const LatticeField lamp = lattice_amplitude(psi, phi, lattice);
    gate.check(max_abs_difference(lattice_wigner(psi, lattice),
                                  0.5 * lattice_star(lamp, conjugate(lamp), lattice)),
               1e-12);
    const SpinState other = random_state(half(), rng);
    const SphereField amp2 = amplitude_field(psi, other, kernel, grid);
    gate.check(max_abs_difference(star_product(amp, conjugate(amp), kernel),
                                  star_product(amp2, conjugate(amp2), kernel)),
               1e-10);
  }
}

void criterion4(Gate& gate) {
  std::mt19937_64 rng(104);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 4.0 * M_PI);
  const SWKernel kernel = SWKernel::standard(half());
  const LatticeKernel lattice = LatticeKernel::half_spin();
  const GridPtr grid = build_grid(recommended_band_limit(1));
  for (int k = 0; k < 100; ++k) {
    const SpinState psi = random_state(half(), rng);
    const SpinState phi = random_state(half(), rng);
    const double alpha = angle(rng);

    gate.check(max_abs_difference(amplitude_coeffs_half(psi, phi).to_field(grid),
                                  amplitude_field(psi, phi, kernel, grid)),
               1e-12);
    gate.check(max_abs_difference(wigner_coeffs_half(psi).to_field(grid),
                                  wigner_field(psi, kernel, grid)),
               1e-12);
    const SpinState rpsi(half(), rotation_y(half(), alpha).matrix * psi.components());
    gate.check(rotated_coeffs_half(psi, phi, alpha).max_abs_difference(
                   amplitude_coeffs_half(rpsi, phi)),
               1e-12);
    gate.check(max_abs_difference(lattice_amplitude_closed(psi, phi),
                                  lattice_amplitude(psi, phi, lattice)),
               1e-12);
    gate.check(max_abs_difference(lattice_wigner_closed(psi),
                                  lattice_wigner(psi, lattice)),
               1e-12);
    gate.check(max_abs_difference(lattice_rotation_symbol(alpha),
                                  lattice_symbol(rotation_y(half(), alpha), lattice)),
               1e-12);
    gate.check(max_abs_difference(lattice_rotate_closed(psi, phi, alpha),
                                  lattice_rotate(psi, phi, alpha, lattice)),
               1e-12);

    NMRParams p;
    p.omega0 = u(rng);
    p.omega_ref = u(rng);
    p.omega_nut = u(rng);
    p.chi_p = angle(rng);
    const double t = std::abs(u(rng));
    const SpinState moved(half(), propagator(p, t).matrix * psi.components());
    gate.check(nmr_coeffs(psi, phi, p, t).max_abs_difference(
                   amplitude_coeffs_half(moved, phi)),
               1e-12);
    gate.check(max_abs_difference(nmr_lattice_closed(psi, phi, p, t),
                                  evolve_amplitude_lattice(psi, phi, p, t, lattice)),
               1e-12);
    NMRParams res = p;
    res.omega_ref = res.omega0;
    const double flip = res.omega_nut * t;
    gate.check(nmr_coeffs_resonance(psi, phi, p.chi_p, flip)
                   .max_abs_difference(nmr_coeffs(psi, phi, res, t)),
               1e-12);
    gate.check(max_abs_difference(nmr_lattice_resonance(psi, phi, p.chi_p, flip),
                                  nmr_lattice_closed(psi, phi, res, t)),
               1e-12);
  }
}

void criterion5(Gate& gate) {
  std::mt19937_64 rng(105);
  const SWKernel kernel = SWKernel::standard(half());
  const LatticeKernel lattice = LatticeKernel::half_spin();
  const GridPtr grid = build_grid(recommended_band_limit(1));
  for (int k = 0; k < 10; ++k) {
    const SpinState psi = random_state(half(), rng);
    const SpinState phi = random_state(half(), rng);
    const SphereField amp = amplitude_field(psi, phi, kernel, grid);
    gate.check(max_abs_difference(rotate_amplitude(psi, phi, rotation_y(half(), 2.0 * M_PI),
                                                   kernel, grid),
                                  Complex(-1.0) * amp),
               1e-12);
    gate.check(max_abs_difference(rotate_amplitude(psi, phi, rotation_y(half(), 4.0 * M_PI),
                                                   kernel, grid),
                                  amp),
               1e-12);
    const LatticeField lamp = lattice_amplitude(psi, phi, lattice);
    gate.check(max_abs_difference(lattice_rotate(psi, phi, 2.0 * M_PI, lattice),
                                  Complex(-1.0) * lamp),
               1e-12);
    gate.check(max_abs_difference(lattice_rotate(psi, phi, 4.0 * M_PI, lattice), lamp),
               1e-12);
  }
}

void criterion6(Gate& gate) {
  for (int d : {2, 3, 5, 7}) {
    const LatticeKernel kernel =
        (d == 2) ? LatticeKernel::half_spin() : LatticeKernel::odd(d);
    gate.check(kernel.max_axiom_error(), 1e-12);
  }
  const auto displacement = symplectic_fourier(LatticeKernel::half_spin());
  gate.check((displacement[0] - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
  gate.check((displacement[1] - pauli(Axis::X).matrix).cwiseAbs().maxCoeff(), 1e-15);
  gate.check((displacement[2] - pauli(Axis::Z).matrix).cwiseAbs().maxCoeff(), 1e-15);
  gate.check((displacement[3] - pauli(Axis::Y).matrix).cwiseAbs().maxCoeff(), 1e-15);
}

void criterion7(Gate& gate) {
  Vector c(2);
  c << Complex(1.0, -1.0) / std::sqrt(2.0), std::sqrt(2.0) * Complex(1.0, 1.0);
  const SpinState psi(half(), std::move(c));
  const LatticeField w =
      lattice_wigner(psi, LatticeKernel::half_spin(), /*require_normalized=*/false);
  gate.check(std::abs(w.at(1, 0) - Complex(-0.5)), 1e-12);
}

void criterion8(Gate& gate) {
  std::mt19937_64 rng(108);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const SWKernel kernel = SWKernel::standard(half());
  const GridPtr grid = build_grid(recommended_band_limit(1));
  for (int k = 0; k < 50; ++k) {
    const SpinState psi1 = random_state(half(), rng);
    const SpinState psi2 = random_state(half(), rng);
    const SpinState phi = random_state(half(), rng);
    Complex a(u(rng), u(rng)), b(u(rng), u(rng));
    Vector combo = a * psi1.components() + b * psi2.components();
    const double n = combo.norm();
    a /= n;
    b /= n;
    const SpinState sum(half(), combo / n);
    const SuperposedFields out =
        superpose_and_reconstruct(psi1, psi2, a, b, phi, kernel, grid);
    gate.check(max_abs_difference(out.wigner, wigner_field(sum, kernel, grid)), 1e-10);
    const SphereField direct = amplitude_field(sum, phi, kernel, grid);
    gate.check(max_abs_difference(out.husimi, pointwise(direct, conjugate(direct))),
               1e-12);
  }
}

void criterion9(Gate& gate) {
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> u(0.2, 2.0);
  const SWKernel kernel = SWKernel::standard(half());
  const LatticeKernel lattice = LatticeKernel::half_spin();
  const GridPtr grid = build_grid(recommended_band_limit(1));
  for (int k = 0; k < 25; ++k) {
    const SpinState psi = random_state(half(), rng);
    const SpinState phi = random_state(half(), rng);

    // Resonance with chi = pi/2 is a y-rotation on both phase spaces.
    NMRParams p;
    p.omega0 = u(rng);
    p.omega_ref = p.omega0;
    p.omega_nut = u(rng);
    p.chi_p = M_PI / 2.0;
    const double t = u(rng);
    const double alpha = p.omega_nut * t;
    gate.check(nmr_coeffs(psi, phi, p, t).max_abs_difference(
                   rotated_coeffs_half(psi, phi, alpha)),
               1e-12);
    gate.check(max_abs_difference(evolve_amplitude_lattice(psi, phi, p, t, lattice),
                                  lattice_rotate_closed(psi, phi, alpha)),
               1e-12);

    // Switched-off control field: equilibrium-state amplitude moduli are
    // time invariant.
    NMRParams off;
    off.omega0 = u(rng);
    off.omega_ref = 0.3 * u(rng);
    off.omega_nut = 0.0;
    for (const SpinState& eq : {basis_up(), basis_down()}) {
      const LatticeField at0 = evolve_amplitude_lattice(eq, phi, off, 0.0, lattice);
      const LatticeField at_t = evolve_amplitude_lattice(eq, phi, off, u(rng), lattice);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          gate.check(std::abs(std::abs(at_t.at(a, b)) - std::abs(at0.at(a, b))), 1e-12);
        }
      }
      const HalfSpinCoeffs c0 = nmr_coeffs(eq, phi, off, 0.0);
      const HalfSpinCoeffs ct = nmr_coeffs(eq, phi, off, u(rng));
      gate.check(std::abs(std::abs(ct.a00) - std::abs(c0.a00)), 1e-12);
      gate.check(std::abs(std::abs(ct.a10) - std::abs(c0.a10)), 1e-12);
    }

    // Propagator unitarity and agreement of the two evolution routes.
    NMRParams q;
    q.omega0 = u(rng);
    q.omega_ref = u(rng);
    q.omega_nut = u(rng);
    q.chi_p = u(rng);
    const Matrix uu = propagator(q, t).matrix;
    gate.check((uu * uu.adjoint() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(),
               1e-10);
    const EvolvedSphere evolved = evolve_amplitude_sphere(psi, phi, q, t, kernel, grid);
    gate.check(max_abs_difference(evolved.field, evolved.star_route), 1e-10);
  }
}

void criterion10(Gate& gate) {
  std::mt19937_64 rng(110);
  const SWKernel kernel = SWKernel::standard(half());
  const GridPtr grid = build_grid(recommended_band_limit(1));
  for (int k = 0; k < 50; ++k) {
    const SpinState psi = random_state(half(), rng);
    const SpinState phi = random_state(half(), rng);
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
      const Complex expected = psi.components().dot(pauli(axis).matrix * psi.components());
      gate.check(std::abs(expectation_phase_space(pauli(axis), psi, phi, kernel, grid) -
                          expected),
                 1e-9);
    }
  }
}

void criterion11(Gate& gate) {
  // The l <= 1 Husimi expansion cannot hold: for psi = phi = (1,0) the Y_20
  // projection of |Psi|^2 equals sqrt(5 pi)/5 (closed form), far from zero.
  const SWKernel kernel = SWKernel::standard(half());
  const GridPtr grid = build_grid(recommended_band_limit(1));
  const SphereField h = husimi_field(basis_up(), basis_up(), kernel, grid);
  const Complex b20 = harmonic_coeffs(h, 2)[HarmonicTable::lm_index(2, 0)];
  gate.check(std::abs(b20) < 0.5 ? 1.0 : 0.0, 0.5);  // clearly nonzero
  gate.check(std::abs(b20 - Complex(std::sqrt(5.0 * M_PI) / 5.0)), 1e-10);
}

}  // namespace

int main() {
  criterion(1, "sphere kernel axioms (j = 1/2, 1, 3/2)", criterion1);
  criterion(2, "j = 1/2 kernel equals (I + sqrt3 n.sigma)/2", criterion2);
  criterion(3, "Born rule on both phase spaces + window independence", criterion3);
  criterion(4, "closed-form coefficient suites vs generic routes", criterion4);
  criterion(5, "spinor sign flip under 2 pi / 4 pi rotations", criterion5);
  criterion(6, "lattice kernel axioms d = 2,3,5,7 + Pauli displacement set", criterion6);
  criterion(7, "negativity example W(1,0) = -0.5 unnormalized", criterion7);
  criterion(8, "superposition cross-term reconstruction (50 draws)", criterion8);
  criterion(9, "NMR limits: y-rotation at resonance, precession moduli, routes",
            criterion9);
  criterion(10, "phase-space expectation values of the Pauli set", criterion10);
  criterion(11, "documented non-reproduction: quadrupole content of |Psi|^2",
            criterion11);

  int failures = 0;
  for (const Row& row : rows) {
    const bool pass = row.gate.pass();
    failures += pass ? 0 : 1;
    std::printf(
        "criterion %2d: %s  %s (binding error %.3e vs tolerance %.0e, %.2f s)\n",
        row.number, pass ? "PASS" : "FAIL", row.description.c_str(), row.gate.error(),
        row.gate.tolerance(), row.seconds);
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", rows.size());
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
