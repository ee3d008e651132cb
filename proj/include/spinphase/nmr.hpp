#pragma once

#include "spinphase/lattice.hpp"
#include "spinphase/sphere.hpp"
#include "spinphase/states.hpp"

namespace spinphase {

// Rotating-frame pulse parameters for a spin-1/2 dipole.  Frequencies are
// taken directly (the gyromagnetic ratio and field strengths only ever enter
// through omega0 and omega_nut); derived quantities are recomputed on demand.
struct NMRParams {
  double omega0 = 0.0;     // Larmor frequency
  double omega_nut = 0.0;  // nutation frequency of the control field
  double omega_ref = 0.0;  // spectrometer reference frequency
  double chi_p = 0.0;      // pulse phase angle

  double omega_res() const { return omega0 - omega_ref; }
  double omega_eff() const { return std::hypot(omega_res(), omega_nut); }
  double flip_angle(double t) const { return omega_eff() * t; }
};

// Lab-frame Hamiltonian at time t:
//   (omega0/2) sigma_z + (omega_nut/2) [cos(omega_ref t + chi) sigma_x
//                                       + sin(omega_ref t + chi) sigma_y]
SpinOperator hamiltonian_lab(const NMRParams& p, double t);

// Rotating-frame Hamiltonian (time independent):
//   (omega_res/2) sigma_z + (omega_nut/2)(sigma_x cos chi + sigma_y sin chi)
SpinOperator hamiltonian_rot(const NMRParams& p);

// Closed-form propagator U = exp(-i H_rot t); identity when omega_eff = 0.
SpinOperator propagator(const NMRParams& p, double t);

struct EvolvedSphere {
  SphereField field;       // trace route Tr(U Psi Delta)
  SphereField star_route;  // symbol(U) * Psi
  HalfSpinCoeffs coeffs;   // closed-form coefficients
};

// Rotating-frame amplitude after a pulse of duration t, computed through
// both routes; they agree to 1e-10 on every node.
EvolvedSphere evolve_amplitude_sphere(const SpinState& psi, const SpinState& phi,
                                      const NMRParams& p, double t,
                                      const SWKernel& kernel, const GridPtr& grid);

// Closed-form evolved coefficients, and their resonance limit.
HalfSpinCoeffs nmr_coeffs(const SpinState& psi, const SpinState& phi,
                          const NMRParams& p, double t);
HalfSpinCoeffs nmr_coeffs_resonance(const SpinState& psi, const SpinState& phi,
                                    double chi_p, double alpha);

// Evolved lattice amplitude Tr(U Psi Delta(alpha,beta)).
LatticeField evolve_amplitude_lattice(const SpinState& psi, const SpinState& phi,
                                      const NMRParams& p, double t,
                                      const LatticeKernel& kernel);

// Closed forms of the evolved lattice amplitude and their resonance limit.
LatticeField nmr_lattice_closed(const SpinState& psi, const SpinState& phi,
                                const NMRParams& p, double t);
LatticeField nmr_lattice_resonance(const SpinState& psi, const SpinState& phi,
                                   double chi_p, double alpha);

}  // namespace spinphase
