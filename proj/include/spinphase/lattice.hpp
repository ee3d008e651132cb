#pragma once

#include <vector>

#include "spinphase/states.hpp"

namespace spinphase {

// Discrete Weyl kernel on the (2j+1)^2 lattice: d^2 hermitian d x d matrices
// Delta(alpha, beta) with
//   Tr Delta = 1,
//   Tr(Delta Delta') = d delta_{alpha alpha'} delta_{beta beta'},
//   sum Delta = d I.
// d = 2 uses the verbatim four-matrix kernel; odd d the modular form with
// the half-shift resolved by the inverse of 2 mod d.  All four axioms are
// checked at construction to 1e-12.
class LatticeKernel {
 public:
  static LatticeKernel half_spin();   // d = 2
  static LatticeKernel odd(int d);    // d odd, >= 3

  int dim() const { return d_; }
  const Matrix& at(int alpha, int beta) const { return matrices_[alpha * d_ + beta]; }

  double max_axiom_error() const;

 private:
  LatticeKernel(int d, std::vector<Matrix> matrices);

  int d_;
  std::vector<Matrix> matrices_;
};

// Complex values on the d x d lattice; values(alpha, beta).
struct LatticeField {
  int d = 0;
  Eigen::MatrixXcd values;

  LatticeField() = default;
  LatticeField(int dim, Eigen::MatrixXcd v);

  Complex at(int alpha, int beta) const { return values(alpha, beta); }
};

LatticeField operator+(const LatticeField& a, const LatticeField& b);
LatticeField operator*(Complex scale, const LatticeField& f);
LatticeField conjugate(const LatticeField& f);
double max_abs_difference(const LatticeField& a, const LatticeField& b);

// X(alpha,beta) = Tr(X Delta(alpha,beta))
LatticeField lattice_symbol(const SpinOperator& x, const LatticeKernel& kernel);

// X = (1/d) sum X(alpha,beta) Delta(alpha,beta); inverse of lattice_symbol.
SpinOperator lattice_operator(const LatticeField& f, const LatticeKernel& kernel);

// Finite-sum star product
//   (F*G)(alpha,beta) = (1/d^2) sum F(p') G(p'')
//                       Tr(Delta(alpha,beta) Delta(p') Delta(p'')),
// evaluated literally; agrees with symbol(operator(F) operator(G)).
LatticeField lattice_star(const LatticeField& f, const LatticeField& g,
                          const LatticeKernel& kernel);

// Amplitude Psi(alpha,beta) = Tr(|psi><phi| Delta(alpha,beta)).
LatticeField lattice_amplitude(const SpinState& psi, const SpinState& phi,
                               const LatticeKernel& kernel);

// d = 2 closed forms of the four amplitude values.
LatticeField lattice_amplitude_closed(const SpinState& psi, const SpinState& phi);

// Wigner function W = (1/d) (Psi * conj Psi) = (1/d) Tr(|psi><psi| Delta);
// real, sums to <psi|psi> over the lattice, window independent.
// `normalized` = false admits the unnormalized input of the negativity
// example; everything else requires unit norm.
LatticeField lattice_wigner(const SpinState& psi, const LatticeKernel& kernel,
                            bool require_normalized = true);

// d = 2 closed forms of the Wigner values.
LatticeField lattice_wigner_closed(const SpinState& psi,
                                   bool require_normalized = true);

// Husimi H = |Psi|^2 >= 0.
LatticeField lattice_husimi(const SpinState& psi, const SpinState& phi,
                            const LatticeKernel& kernel);

// Displacement operators D(alpha,beta) =
//   (1/d) sum exp(2 pi i (alpha beta' - alpha' beta)/d) Delta(alpha',beta');
// for d = 2 these are (I, sigma_x, sigma_z, sigma_y) at
// (0,0), (0,1), (1,0), (1,1).  Indexed [alpha * d + beta].
std::vector<Matrix> symplectic_fourier(const LatticeKernel& kernel);

// Symbol of the y-axis rotation by alpha on the d = 2 lattice:
// R(0,0) = R(1,1) = exp(-i alpha/2), R(0,1) = R(1,0) = exp(+i alpha/2).
LatticeField lattice_rotation_symbol(double alpha);

// Rotated amplitude R * Psi; equals lattice_amplitude(R psi, phi).
LatticeField lattice_rotate(const SpinState& psi, const SpinState& phi,
                            double alpha, const LatticeKernel& kernel);

// d = 2 closed forms of the rotated amplitude.
LatticeField lattice_rotate_closed(const SpinState& psi, const SpinState& phi,
                                   double alpha);

}  // namespace spinphase
