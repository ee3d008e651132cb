#include "spinphase/lattice.hpp"

#include <cmath>

#include "spinphase/errors.hpp"
#include "spinphase/parallel.hpp"

namespace spinphase {

namespace {

double axiom_error(int d, const std::vector<Matrix>& mats) {
  double worst = 0.0;
  Matrix total = Matrix::Zero(d, d);
  for (int p = 0; p < d * d; ++p) {
    const Matrix& m = mats[p];
    worst = std::max(worst, (m - m.adjoint().eval()).cwiseAbs().maxCoeff());
    worst = std::max(worst, std::abs(m.trace() - Complex(1.0)));
    total += m;
    for (int q = 0; q < d * d; ++q) {
      const Complex overlap = (m * mats[q]).trace();
      const double expected = (p == q) ? d : 0.0;
      worst = std::max(worst, std::abs(overlap - expected));
    }
  }
  worst = std::max(
      worst, (total - double(d) * Matrix::Identity(d, d)).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace

LatticeKernel::LatticeKernel(int d, std::vector<Matrix> matrices)
    : d_(d), matrices_(std::move(matrices)) {
  const double err = axiom_error(d_, matrices_);
  if (err > 1e-12) {
    throw ContractViolation("lattice kernel axioms violated by " + std::to_string(err));
  }
}

double LatticeKernel::max_axiom_error() const { return axiom_error(d_, matrices_); }

LatticeKernel LatticeKernel::half_spin() {
  const Complex h(0.5, 0.5), hb(0.5, -0.5);
  std::vector<Matrix> mats(4, Matrix(2, 2));
  mats[0 * 2 + 0] << 1, hb, h, 0;    // Delta(0,0)
  mats[0 * 2 + 1] << 0, h, hb, 1;    // Delta(0,1)
  mats[1 * 2 + 0] << 1, -hb, -h, 0;  // Delta(1,0)
  mats[1 * 2 + 1] << 0, -h, -hb, 1;  // Delta(1,1)
  return LatticeKernel(2, std::move(mats));
}

LatticeKernel LatticeKernel::odd(int d) {
  if (d < 3 || d % 2 == 0) {
    throw EvenDimension("modular lattice kernel needs odd d >= 3 (d = 2 has its own)");
  }
  // (beta' + beta'')/2 is realized through the inverse of 2 mod d, so the
  // kernel entry at (beta', beta'') is nonzero iff beta' + beta'' = -2 beta.
  std::vector<Matrix> mats(d * d, Matrix::Zero(d, d));
  const double step = 2.0 * M_PI / d;
  for (int alpha = 0; alpha < d; ++alpha) {
    for (int beta = 0; beta < d; ++beta) {
      Matrix& m = mats[alpha * d + beta];
      for (int bp = 0; bp < d; ++bp) {
        for (int bq = 0; bq < d; ++bq) {
          if ((bp + bq + 2 * beta) % d != 0) continue;
          m(bp, bq) = std::exp(Complex(0.0, step * alpha * (bq - bp)));
        }
      }
    }
  }
  return LatticeKernel(d, std::move(mats));
}

LatticeField::LatticeField(int dim, Eigen::MatrixXcd v) : d(dim), values(std::move(v)) {
  if (values.rows() != d || values.cols() != d) {
    throw DimensionMismatch("lattice field must be d x d");
  }
}

LatticeField operator+(const LatticeField& a, const LatticeField& b) {
  if (a.d != b.d) throw DimensionMismatch("lattice fields of different d");
  return LatticeField(a.d, a.values + b.values);
}

LatticeField operator*(Complex scale, const LatticeField& f) {
  return LatticeField(f.d, scale * f.values);
}

LatticeField conjugate(const LatticeField& f) {
  return LatticeField(f.d, f.values.conjugate());
}

double max_abs_difference(const LatticeField& a, const LatticeField& b) {
  if (a.d != b.d) throw DimensionMismatch("lattice fields of different d");
  return (a.values - b.values).cwiseAbs().maxCoeff();
}

LatticeField lattice_symbol(const SpinOperator& x, const LatticeKernel& kernel) {
  if (x.dim() != kernel.dim()) throw DimensionMismatch("operator dim != kernel dim");
  const int d = kernel.dim();
  Eigen::MatrixXcd values(d, d);
  for (int alpha = 0; alpha < d; ++alpha) {
    for (int beta = 0; beta < d; ++beta) {
      values(alpha, beta) = (x.matrix * kernel.at(alpha, beta)).trace();
    }
  }
  return LatticeField(d, std::move(values));
}

SpinOperator lattice_operator(const LatticeField& f, const LatticeKernel& kernel) {
  if (f.d != kernel.dim()) throw DimensionMismatch("field dim != kernel dim");
  const int d = kernel.dim();
  Matrix x = Matrix::Zero(d, d);
  for (int alpha = 0; alpha < d; ++alpha) {
    for (int beta = 0; beta < d; ++beta) {
      x += f.values(alpha, beta) * kernel.at(alpha, beta);
    }
  }
  x /= d;
  return SpinOperator{HalfInt::from_twice(d - 1), std::move(x)};
}

LatticeField lattice_star(const LatticeField& f, const LatticeField& g,
                          const LatticeKernel& kernel) {
  if (f.d != kernel.dim() || g.d != kernel.dim()) {
    throw DimensionMismatch("star product with mismatched dimensions");
  }
  const int d = kernel.dim();
  const int n = d * d;
  Eigen::MatrixXcd out(d, d);
#pragma omp parallel for schedule(static) num_threads(thread_count()) if (d > 3)
  for (int point = 0; point < n; ++point) {
    const int alpha = point / d, beta = point % d;
    Complex acc = 0.0;
    for (int p = 0; p < n; ++p) {
      const Matrix left = kernel.at(alpha, beta) * kernel.at(p / d, p % d);
      const Complex fp = f.values(p / d, p % d);
      for (int q = 0; q < n; ++q) {
        const Complex trace =
            (left.transpose().cwiseProduct(kernel.at(q / d, q % d))).sum();
        acc += fp * g.values(q / d, q % d) * trace;
      }
    }
    out(alpha, beta) = acc / static_cast<double>(n);
  }
  return LatticeField(d, std::move(out));
}

namespace {

void require_pair_dim(const SpinState& psi, const SpinState& phi, int d) {
  if (psi.dim() != d || phi.dim() != d) {
    throw DimensionMismatch("state dim != kernel dim");
  }
}

struct HalfComponents {
  Complex pu, pd;  // psi_{+1/2}, psi_{-1/2}
  Complex wu, wd;  // conj(phi_{+1/2}), conj(phi_{-1/2})
};

HalfComponents half_components(const SpinState& psi, const SpinState& phi) {
  if (psi.dim() != 2 || phi.dim() != 2) {
    throw DimensionMismatch("closed forms exist for d = 2");
  }
  return HalfComponents{psi.components()(0), psi.components()(1),
                        std::conj(phi.components()(0)),
                        std::conj(phi.components()(1))};
}

}  // namespace

LatticeField lattice_amplitude(const SpinState& psi, const SpinState& phi,
                               const LatticeKernel& kernel) {
  require_pair_dim(psi, phi, kernel.dim());
  if (!phi.is_normalized(1e-12)) throw NotNormalized("window state must be normalized");
  const AmplitudeOperator dyad = amplitude_operator(psi, phi);
  return lattice_symbol(SpinOperator{dyad.j, dyad.matrix}, kernel);
}

LatticeField lattice_amplitude_closed(const SpinState& psi, const SpinState& phi) {
  if (!phi.is_normalized(1e-12)) throw NotNormalized("window state must be normalized");
  const auto [pu, pd, wu, wd] = half_components(psi, phi);
  const Complex h(0.5, 0.5), hb(0.5, -0.5);
  const Complex cross = pu * wd - pd * wu;
  Eigen::MatrixXcd v(2, 2);
  v(0, 0) = wu * (pu + pd) + h * cross;
  v(0, 1) = pd * (wd + wu) + hb * cross;
  v(1, 0) = wu * (pu - pd) - h * cross;
  v(1, 1) = pd * (wd - wu) - hb * cross;
  return LatticeField(2, std::move(v));
}

LatticeField lattice_wigner(const SpinState& psi, const LatticeKernel& kernel,
                            bool require_normalized) {
  if (psi.dim() != kernel.dim()) throw DimensionMismatch("state dim != kernel dim");
  if (require_normalized && !psi.is_normalized(1e-12)) {
    throw NotNormalized("Wigner input must be normalized");
  }
  const Matrix rho = psi.components() * psi.components().adjoint();
  LatticeField symbol =
      lattice_symbol(SpinOperator{psi.j(), rho}, kernel);
  return (1.0 / kernel.dim()) * symbol;
}

LatticeField lattice_wigner_closed(const SpinState& psi, bool require_normalized) {
  if (psi.dim() != 2) throw DimensionMismatch("closed forms exist for d = 2");
  if (require_normalized && !psi.is_normalized(1e-12)) {
    throw NotNormalized("Wigner input must be normalized");
  }
  // Amplitude closed forms with psi as its own window, halved.
  const Complex pu = psi.components()(0), pd = psi.components()(1);
  const Complex wu = std::conj(pu), wd = std::conj(pd);
  const Complex h(0.5, 0.5), hb(0.5, -0.5);
  const Complex cross = pu * wd - pd * wu;
  Eigen::MatrixXcd v(2, 2);
  v(0, 0) = 0.5 * (wu * (pu + pd) + h * cross);
  v(0, 1) = 0.5 * (pd * (wd + wu) + hb * cross);
  v(1, 0) = 0.5 * (wu * (pu - pd) - h * cross);
  v(1, 1) = 0.5 * (pd * (wd - wu) - hb * cross);
  return LatticeField(2, std::move(v));
}

LatticeField lattice_husimi(const SpinState& psi, const SpinState& phi,
                            const LatticeKernel& kernel) {
  if (!psi.is_normalized(1e-12)) throw NotNormalized("Husimi needs normalized psi");
  LatticeField amp = lattice_amplitude(psi, phi, kernel);
  return LatticeField(amp.d, amp.values.cwiseAbs2().cast<Complex>());
}

std::vector<Matrix> symplectic_fourier(const LatticeKernel& kernel) {
  const int d = kernel.dim();
  std::vector<Matrix> displacement(d * d);
  if (d == 2) {
    // Specialized half-sum form.
    for (int alpha = 0; alpha < 2; ++alpha) {
      for (int beta = 0; beta < 2; ++beta) {
        Matrix m = kernel.at(0, 0);
        m += (alpha % 2 == 0 ? 1.0 : -1.0) * kernel.at(0, 1);
        m += (beta % 2 == 0 ? 1.0 : -1.0) * kernel.at(1, 0);
        m += ((alpha + beta) % 2 == 0 ? 1.0 : -1.0) * kernel.at(1, 1);
        displacement[alpha * 2 + beta] = 0.5 * m;
      }
    }
    return displacement;
  }
  const double step = 2.0 * M_PI / d;
  for (int alpha = 0; alpha < d; ++alpha) {
    for (int beta = 0; beta < d; ++beta) {
      Matrix m = Matrix::Zero(d, d);
      for (int ap = 0; ap < d; ++ap) {
        for (int bp = 0; bp < d; ++bp) {
          m += std::exp(Complex(0.0, step * (alpha * bp - ap * beta))) *
               kernel.at(ap, bp);
        }
      }
      displacement[alpha * d + beta] = m / static_cast<double>(d);
    }
  }
  return displacement;
}

LatticeField lattice_rotation_symbol(double alpha) {
  const Complex em = std::exp(Complex(0.0, -0.5 * alpha));
  const Complex ep = std::exp(Complex(0.0, +0.5 * alpha));
  Eigen::MatrixXcd v(2, 2);
  v(0, 0) = em;
  v(1, 1) = em;
  v(0, 1) = ep;
  v(1, 0) = ep;
  return LatticeField(2, std::move(v));
}

LatticeField lattice_rotate(const SpinState& psi, const SpinState& phi,
                            double alpha, const LatticeKernel& kernel) {
  if (kernel.dim() != 2) throw DimensionMismatch("lattice rotation is a d = 2 construction");
  const LatticeField amp = lattice_amplitude(psi, phi, kernel);
  return lattice_star(lattice_rotation_symbol(alpha), amp, kernel);
}

LatticeField lattice_rotate_closed(const SpinState& psi, const SpinState& phi,
                                   double alpha) {
  if (!phi.is_normalized(1e-12)) throw NotNormalized("window state must be normalized");
  const auto [pu, pd, wu, wd] = half_components(psi, phi);
  const Complex h(0.5, 0.5), hb(0.5, -0.5);
  const double c = std::cos(0.5 * alpha), s = std::sin(0.5 * alpha);
  const Complex bracket = (pu * wd - pd * wu) * c - (pu * wu + pd * wd) * s;
  Eigen::MatrixXcd v(2, 2);
  v(0, 0) = wu * (pu + pd) * c + wu * (pu - pd) * s + h * bracket;
  v(0, 1) = pd * (wd + wu) * c + pu * (wu + wd) * s + hb * bracket;
  v(1, 0) = wu * (pu - pd) * c - wu * (pu + pd) * s - h * bracket;
  v(1, 1) = pd * (wd - wu) * c + pu * (wd - wu) * s - hb * bracket;
  return LatticeField(2, std::move(v));
}

}  // namespace spinphase
