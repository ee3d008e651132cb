#pragma once

#include <Eigen/Dense>
#include <complex>

#include "spinphase/halfint.hpp"

namespace spinphase {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Pure spin state |psi> of spin j: 2j+1 complex components ordered
// m = j, j-1, ..., -j.
class SpinState {
 public:
  SpinState(HalfInt j, Vector components);

  HalfInt j() const { return j_; }
  int dim() const { return j_.twice() + 1; }
  const Vector& components() const { return c_; }

  // Component by quantum number m.
  Complex component(HalfInt m) const;

  double norm() const { return c_.norm(); }
  bool is_normalized(double tol = 1e-12) const;

  // <this|other>
  Complex inner(const SpinState& other) const;

  SpinState normalized() const;

 private:
  HalfInt j_;
  Vector c_;
};

// Builds a state, optionally enforcing unit norm to 1e-12.
SpinState make_spin_state(HalfInt j, Vector components,
                          bool require_normalized = false);

// Coherent spin state pointing along (theta, phi):
//   c_m = sqrt((2j)! / ((j+m)!(j-m)!)) cos^{j+m}(theta/2) sin^{j-m}(theta/2)
//         * exp(-i m phi)
SpinState css_state(HalfInt j, double theta, double phi);

// Operator on the spin-j space; plain matrix plus the j it acts on.
struct SpinOperator {
  HalfInt j;
  Matrix matrix;

  int dim() const { return j.twice() + 1; }
};

// Dyad |psi><phi| of two states with equal j; entry (m, m') = psi_m conj(phi_m').
struct AmplitudeOperator {
  HalfInt j;
  Matrix matrix;

  int dim() const { return j.twice() + 1; }
};

AmplitudeOperator amplitude_operator(const SpinState& psi,
                                     const SpinState& phi);

enum class Axis { X, Y, Z };

// Pauli matrices (j = 1/2).
SpinOperator pauli(Axis axis);
SpinOperator identity_operator(HalfInt j);

// J_3 = diag(j, j-1, ..., -j) and J^2 = j(j+1) I.
SpinOperator angular_momentum_z(HalfInt j);
SpinOperator angular_momentum_squared(HalfInt j);
// Ladder-built cartesian generators for general j.
SpinOperator angular_momentum(HalfInt j, Axis axis);

// exp(-i angle H) for hermitian H, via eigendecomposition.
Matrix expi_hermitian(const Matrix& h, double angle);

// Rotation about the y-axis by alpha: exp(-i alpha J_y).  For j = 1/2 this
// is cos(alpha/2) I - i sin(alpha/2) sigma_y.
SpinOperator rotation_y(HalfInt j, double alpha);

// Euler-angle rotation exp(-i gamma J_z) exp(-i alpha J_y) exp(-i beta J_z).
SpinOperator rotation_zyz(HalfInt j, double gamma, double alpha, double beta);

bool is_unitary(const Matrix& u, double tol = 1e-10);

}  // namespace spinphase
