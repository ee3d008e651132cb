#include "spinphase/nmr.hpp"

#include <cmath>

#include "spinphase/errors.hpp"

namespace spinphase {

SpinOperator hamiltonian_lab(const NMRParams& p, double t) {
  const double phase = p.omega_ref * t + p.chi_p;
  Matrix h = 0.5 * p.omega0 * pauli(Axis::Z).matrix +
             0.5 * p.omega_nut *
                 (std::cos(phase) * pauli(Axis::X).matrix +
                  std::sin(phase) * pauli(Axis::Y).matrix);
  return SpinOperator{half(), std::move(h)};
}

SpinOperator hamiltonian_rot(const NMRParams& p) {
  Matrix h = 0.5 * p.omega_res() * pauli(Axis::Z).matrix +
             0.5 * p.omega_nut *
                 (std::cos(p.chi_p) * pauli(Axis::X).matrix +
                  std::sin(p.chi_p) * pauli(Axis::Y).matrix);
  return SpinOperator{half(), std::move(h)};
}

SpinOperator propagator(const NMRParams& p, double t) {
  const double weff = p.omega_eff();
  Matrix u(2, 2);
  if (weff == 0.0) {
    u = Matrix::Identity(2, 2);
    return SpinOperator{half(), std::move(u)};
  }
  const double alpha = p.flip_angle(t);
  const double c = std::cos(0.5 * alpha);
  const double s = std::sin(0.5 * alpha) / weff;
  const Complex i(0.0, 1.0);
  const Complex echi = std::exp(Complex(0.0, p.chi_p));
  u(0, 0) = c - i * p.omega_res() * s;
  u(0, 1) = -i * p.omega_nut * s / echi;
  u(1, 0) = -i * p.omega_nut * s * echi;
  u(1, 1) = c + i * p.omega_res() * s;
  return SpinOperator{half(), std::move(u)};
}

namespace {

SpinState propagated(const SpinState& psi, const NMRParams& p, double t) {
  return SpinState(psi.j(), propagator(p, t).matrix * psi.components());
}

}  // namespace

EvolvedSphere evolve_amplitude_sphere(const SpinState& psi, const SpinState& phi,
                                      const NMRParams& p, double t,
                                      const SWKernel& kernel, const GridPtr& grid) {
  if (!phi.is_normalized(1e-12)) throw NotNormalized("window state must be normalized");
  // Trace route: amplitude of the propagated state.
  SphereField trace_route = amplitude_field(propagated(psi, p, t), phi, kernel, grid);
  // Star route: symbol(U) * Psi.
  const SphereField u_symbol = symbol_of_operator(propagator(p, t), kernel, grid);
  const SphereField amp = amplitude_field(psi, phi, kernel, grid);
  SphereField star_route = star_product(u_symbol, amp, kernel);
  const double gap = max_abs_difference(trace_route, star_route);
  if (gap > 1e-10) {
    throw ContractViolation("evolution routes disagree by " + std::to_string(gap));
  }
  return EvolvedSphere{std::move(trace_route), std::move(star_route),
                       nmr_coeffs(psi, phi, p, t)};
}

HalfSpinCoeffs nmr_coeffs(const SpinState& psi, const SpinState& phi,
                          const NMRParams& p, double t) {
  if (psi.dim() != 2 || phi.dim() != 2) throw DimensionMismatch("closed forms exist for j = 1/2");
  if (!phi.is_normalized(1e-12)) throw NotNormalized("window state must be normalized");
  const double weff = p.omega_eff();
  if (weff == 0.0) return amplitude_coeffs_half(psi, phi);

  const Complex pu = psi.components()(0), pd = psi.components()(1);
  const Complex wu = std::conj(phi.components()(0)), wd = std::conj(phi.components()(1));
  const double alpha = p.flip_angle(t);
  const double c = std::cos(0.5 * alpha);
  const double s = std::sin(0.5 * alpha) / weff;
  const double wr = p.omega_res(), wn = p.omega_nut;
  const Complex i(0.0, 1.0);
  const Complex ep = std::exp(Complex(0.0, p.chi_p));
  const Complex em = std::exp(Complex(0.0, -p.chi_p));
  const double r2 = std::sqrt(2.0);

  HalfSpinCoeffs out;
  out.a00 = (pu * wu + pd * wd) * c -
            i * ((pu * wu - pd * wd) * wr + (em * pd * wu + ep * pu * wd) * wn) * s;
  out.a1m1 = r2 * (pd * wu * c + i * (pd * wu * wr - ep * pu * wu * wn) * s);
  out.a10 = (pu * wu - pd * wd) * c -
            i * ((pu * wu + pd * wd) * wr + (em * pd * wu - ep * pu * wd) * wn) * s;
  out.a11 = -r2 * (pu * wd * c - i * (pu * wd * wr + em * pd * wd * wn) * s);
  return out;
}

HalfSpinCoeffs nmr_coeffs_resonance(const SpinState& psi, const SpinState& phi,
                                    double chi_p, double alpha) {
  if (psi.dim() != 2 || phi.dim() != 2) throw DimensionMismatch("closed forms exist for j = 1/2");
  if (!phi.is_normalized(1e-12)) throw NotNormalized("window state must be normalized");
  const Complex pu = psi.components()(0), pd = psi.components()(1);
  const Complex wu = std::conj(phi.components()(0)), wd = std::conj(phi.components()(1));
  const double c = std::cos(0.5 * alpha), s = std::sin(0.5 * alpha);
  const Complex i(0.0, 1.0);
  const Complex ep = std::exp(Complex(0.0, chi_p));
  const Complex em = std::exp(Complex(0.0, -chi_p));
  const double r2 = std::sqrt(2.0);

  HalfSpinCoeffs out;
  out.a00 = (pu * wu + pd * wd) * c - i * (em * pd * wu + ep * pu * wd) * s;
  out.a1m1 = r2 * (pd * wu * c - i * ep * pu * wu * s);
  out.a10 = (pu * wu - pd * wd) * c - i * (em * pd * wu - ep * pu * wd) * s;
  out.a11 = -r2 * (pu * wd * c - i * em * pd * wd * s);
  return out;
}

LatticeField evolve_amplitude_lattice(const SpinState& psi, const SpinState& phi,
                                      const NMRParams& p, double t,
                                      const LatticeKernel& kernel) {
  if (kernel.dim() != 2) throw DimensionMismatch("evolution is a d = 2 construction");
  return lattice_amplitude(propagated(psi, p, t), phi, kernel);
}

LatticeField nmr_lattice_closed(const SpinState& psi, const SpinState& phi,
                                const NMRParams& p, double t) {
  if (psi.dim() != 2 || phi.dim() != 2) throw DimensionMismatch("closed forms exist for d = 2");
  if (!phi.is_normalized(1e-12)) throw NotNormalized("window state must be normalized");
  const double weff = p.omega_eff();
  if (weff == 0.0) return lattice_amplitude_closed(psi, phi);

  const Complex pu = psi.components()(0), pd = psi.components()(1);
  const Complex wu = std::conj(phi.components()(0)), wd = std::conj(phi.components()(1));
  const double alpha = p.flip_angle(t);
  const double c = std::cos(0.5 * alpha);
  const double s = std::sin(0.5 * alpha) / weff;
  const double wr = p.omega_res(), wn = p.omega_nut;
  const Complex i(0.0, 1.0);
  const Complex ep = std::exp(Complex(0.0, p.chi_p));
  const Complex em = std::exp(Complex(0.0, -p.chi_p));
  const Complex h(0.5, 0.5), hb(0.5, -0.5);

  // Shared brackets of the four closed forms.
  const Complex cross = pu * wd - pd * wu;
  const Complex diag = pu * wu * ep + pd * wd * em;

  Eigen::MatrixXcd v(2, 2);
  v(0, 0) = wu * (pu + pd) * c +
            (wd - i * wu) * (pu * wr + pd * wn * em) * s +
            h * (cross * c + (-cross * wr - diag * wn) * s);
  v(0, 1) = wd * (pu + pd) * c -
            (wu - i * wd) * (pd * wr - pu * wn * ep) * s +
            h * (-cross * c + (-cross * wr - diag * wn) * s);
  v(1, 0) = wu * (pu - pd) * c -
            (wd + i * wu) * (pu * wr + pd * wn * em) * s -
            h * (cross * c - (cross * wr + diag * wn) * s);
  v(1, 1) = wd * (pd - pu) * c +
            (wu + i * wd) * (pd * wr - pu * wn * ep) * s +
            h * (cross * c + (cross * wr + diag * wn) * s);
  return LatticeField(2, std::move(v));
}

LatticeField nmr_lattice_resonance(const SpinState& psi, const SpinState& phi,
                                   double chi_p, double alpha) {
  if (psi.dim() != 2 || phi.dim() != 2) throw DimensionMismatch("closed forms exist for d = 2");
  if (!phi.is_normalized(1e-12)) throw NotNormalized("window state must be normalized");
  const Complex pu = psi.components()(0), pd = psi.components()(1);
  const Complex wu = std::conj(phi.components()(0)), wd = std::conj(phi.components()(1));
  const double c = std::cos(0.5 * alpha), s = std::sin(0.5 * alpha);
  const Complex i(0.0, 1.0);
  const Complex ep = std::exp(Complex(0.0, chi_p));
  const Complex em = std::exp(Complex(0.0, -chi_p));
  const Complex h(0.5, 0.5), hb(0.5, -0.5);

  const Complex cross = pu * wd - pd * wu;
  const Complex diag = pu * wu * ep + pd * wd * em;

  Eigen::MatrixXcd v(2, 2);
  v(0, 0) = wu * (pu + pd) * c + pd * em * (wd - i * wu) * s +
            h * (cross * c - diag * s);
  v(0, 1) = pd * (wd + wu) * c - wd * (pd * em + i * pu * ep) * s +
            hb * (cross * c + diag * s);
  v(1, 0) = wu * (pu - pd) * c - pd * em * (wd + i * wu) * s -
            h * (cross * c - diag * s);
  v(1, 1) = pd * (wd - wu) * c + wd * (pd * em - i * pu * ep) * s -
            hb * (cross * c + diag * s);
  return LatticeField(2, std::move(v));
}

}  // namespace spinphase
