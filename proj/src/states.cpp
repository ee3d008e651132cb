#include "spinphase/states.hpp"

#include <cmath>

#include "spinphase/errors.hpp"

namespace spinphase {

std::string HalfInt::str() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::from_value(double value) {
  const double twice = 2.0 * value;
  const double rounded = std::round(twice);
  if (std::abs(twice - rounded) > 1e-9) {
    throw InvalidIndex("not a half-integer: " + std::to_string(value));
  }
  return HalfInt::from_twice(static_cast<int>(rounded));
}

SpinState::SpinState(HalfInt j, Vector components) : j_(j), c_(std::move(components)) {
  if (!j.nonnegative()) throw InvalidIndex("spin j must be >= 0, got " + j.str());
  if (c_.size() != j.twice() + 1) {
    throw DimensionMismatch("state for j=" + j.str() + " needs " +
                            std::to_string(j.twice() + 1) + " components, got " +
                            std::to_string(c_.size()));
  }
}

Complex SpinState::component(HalfInt m) const {
  const int offset = (j_.twice() - m.twice());
  if (offset < 0 || offset % 2 != 0 || offset / 2 >= dim()) {
    throw InvalidIndex("m=" + m.str() + " outside j=" + j_.str());
  }
  return c_(offset / 2);
}

bool SpinState::is_normalized(double tol) const {
  return std::abs(c_.squaredNorm() - 1.0) <= tol;
}

Complex SpinState::inner(const SpinState& other) const {
  if (j_ != other.j_) throw DimensionMismatch("inner product across different j");
  return c_.dot(other.c_);  // Eigen's dot conjugates the left factor
}

SpinState SpinState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw NotNormalized("cannot normalize the zero state");
  return SpinState(j_, c_ / n);
}

SpinState make_spin_state(HalfInt j, Vector components, bool require_normalized) {
  SpinState state(j, std::move(components));
  if (require_normalized && !state.is_normalized(1e-12)) {
    throw NotNormalized("squared norm deviates from 1 by more than 1e-12");
  }
  return state;
}

SpinState css_state(HalfInt j, double theta, double phi) {
  if (!j.nonnegative()) throw InvalidIndex("spin j must be >= 0");
  const int two_j = j.twice();
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  Vector comps(two_j + 1);
  for (int row = 0; row <= two_j; ++row) {
    const int two_m = two_j - 2 * row;
    // binomial (2j choose j+m) under the square root
    const int jpm = (two_j + two_m) / 2;
    double binom = 1.0;
    for (int k = 1; k <= jpm; ++k) binom *= static_cast<double>(two_j - jpm + k) / k;
    const double mag = std::sqrt(binom) * std::pow(c, jpm) * std::pow(s, two_j - jpm);
    const double m = 0.5 * two_m;
    comps(row) = mag * std::exp(Complex(0.0, -m * phi));
  }
  return SpinState(j, std::move(comps));
}

AmplitudeOperator amplitude_operator(const SpinState& psi, const SpinState& phi) {
  if (psi.j() != phi.j()) throw DimensionMismatch("dyad of states with different j");
  return AmplitudeOperator{psi.j(),
                           psi.components() * phi.components().adjoint()};
}

SpinOperator pauli(Axis axis) {
  Matrix m(2, 2);
  switch (axis) {
    case Axis::X:
      m << 0, 1, 1, 0;
      break;
    case Axis::Y:
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case Axis::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return SpinOperator{half(), std::move(m)};
}

SpinOperator identity_operator(HalfInt j) {
  return SpinOperator{j, Matrix::Identity(j.twice() + 1, j.twice() + 1)};
}

SpinOperator angular_momentum_z(HalfInt j) {
  const int d = j.twice() + 1;
  Matrix m = Matrix::Zero(d, d);
  for (int row = 0; row < d; ++row) m(row, row) = 0.5 * (j.twice() - 2 * row);
  return SpinOperator{j, std::move(m)};
}

SpinOperator angular_momentum_squared(HalfInt j) {
  const double jj = j.value();
  const int d = j.twice() + 1;
  return SpinOperator{j, jj * (jj + 1.0) * Matrix::Identity(d, d)};
}

SpinOperator angular_momentum(HalfInt j, Axis axis) {
  if (axis == Axis::Z) return angular_momentum_z(j);
  const int d = j.twice() + 1;
  const double jj = j.value();
  // J+ in the m = j..-j ordering: raises m, so it sits above the diagonal.
  Matrix jplus = Matrix::Zero(d, d);
  for (int row = 1; row < d; ++row) {
    const double m = 0.5 * (j.twice() - 2 * row);
    jplus(row - 1, row) = std::sqrt(jj * (jj + 1.0) - m * (m + 1.0));
  }
  Matrix m;
  if (axis == Axis::X) {
    m = 0.5 * (jplus + jplus.adjoint());
  } else {
    m = Complex(0.0, -0.5) * (jplus - jplus.adjoint());
  }
  return SpinOperator{j, std::move(m)};
}

Matrix expi_hermitian(const Matrix& h, double angle) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& vals = es.eigenvalues();
  const auto& vecs = es.eigenvectors();
  Vector phases(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, -angle * vals(i)));
  }
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

SpinOperator rotation_y(HalfInt j, double alpha) {
  if (j == half()) {
    Matrix m(2, 2);
    const double c = std::cos(0.5 * alpha), s = std::sin(0.5 * alpha);
    m << c, -s, s, c;
    return SpinOperator{j, std::move(m)};
  }
  return SpinOperator{j, expi_hermitian(angular_momentum(j, Axis::Y).matrix, alpha)};
}

SpinOperator rotation_zyz(HalfInt j, double gamma, double alpha, double beta) {
  const Matrix jz = angular_momentum_z(j).matrix;
  return SpinOperator{j, expi_hermitian(jz, gamma) * rotation_y(j, alpha).matrix *
                             expi_hermitian(jz, beta)};
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Matrix id = Matrix::Identity(u.rows(), u.cols());
  return (u * u.adjoint() - id).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace spinphase
