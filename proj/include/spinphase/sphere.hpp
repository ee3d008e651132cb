#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "spinphase/quadrature.hpp"
#include "spinphase/states.hpp"

namespace spinphase {

// Stratonovich-Weyl kernel on the sphere for spin j.  Matrix entries in the
// m-ordered basis (row a <-> m_a = j - a):
//   Delta(theta,phi)_{ab} = sqrt(4 pi / (2j+1))
//       * sum_l eps_l (-1)^(j - m_a) <j m_b; j -m_a | l, m_b - m_a>
//       * Y_{l, m_b - m_a}(theta, phi)
// For j = 1/2 and eps = +1 this is (I + sqrt(3) n.sigma)/2.
class SWKernel {
 public:
  // eps_signs[l] for l = 0..2j; must start with +1 and contain only +-1.
  SWKernel(HalfInt j, std::vector<int> eps_signs);

  // All-plus sign choice.
  static SWKernel standard(HalfInt j);

  HalfInt j() const { return j_; }
  int dim() const { return j_.twice() + 1; }
  const std::vector<int>& eps() const { return eps_; }

  Matrix evaluate(double theta, double phi) const;

  // Kernel matrices at every node of the grid, cached per grid instance.
  std::shared_ptr<const std::vector<Matrix>> table(const GridPtr& grid) const;

 private:
  HalfInt j_;
  std::vector<int> eps_;
  // coeff_[l](a, b) carries eps, the (-1)^(j-m_a) phase and the CG value.
  std::vector<Eigen::MatrixXd> coeff_;
  double prefactor_;

  // Cache keyed by grid address, validated through the weak_ptr so a new
  // grid reusing a freed address never picks up a stale table.
  struct CacheEntry {
    std::weak_ptr<const SphereGrid> grid;
    std::shared_ptr<const std::vector<Matrix>> table;
  };
  mutable std::mutex cache_mutex_;
  mutable std::map<const SphereGrid*, CacheEntry> cache_;
};

// Complex function sampled on a quadrature grid.
struct SphereField {
  GridPtr grid;
  Vector values;

  SphereField() = default;
  SphereField(GridPtr g, Vector v);
};

void require_same_grid(const SphereField& a, const SphereField& b);

SphereField operator+(const SphereField& a, const SphereField& b);
SphereField operator-(const SphereField& a, const SphereField& b);
SphereField operator*(Complex scale, const SphereField& f);
SphereField conjugate(const SphereField& f);
SphereField pointwise(const SphereField& a, const SphereField& b);
double max_abs_difference(const SphereField& a, const SphereField& b);

// Harmonic coefficients a_lm = integral F conj(Y_lm) dOmega for l <= lmax,
// by quadrature projection; index with HarmonicTable::lm_index.
std::vector<Complex> harmonic_coeffs(const SphereField& field, int lmax);

// Symbol X(theta,phi) = Tr(X Delta(theta,phi)) sampled on the grid.
SphereField symbol_of_operator(const SpinOperator& x, const SWKernel& kernel,
                               const GridPtr& grid);

// Inverse map X = ((2j+1)/4pi) integral F(Omega) Delta(Omega) dOmega.
// Requires grid band limit >= 2*(2j) so the projection is exact.
SpinOperator operator_of_symbol(const SphereField& f, const SWKernel& kernel);

// Spinor amplitude: symbol of |psi><phi| for a normalized window phi.
SphereField amplitude_field(const SpinState& psi, const SpinState& phi,
                            const SWKernel& kernel, const GridPtr& grid);

// j = 1/2 amplitude expansion Psi = sqrt(pi) sum_{l<=1} a_lm Y_lm.
struct HalfSpinCoeffs {
  Complex a00, a1m1, a10, a11;

  Complex evaluate(double theta, double phi) const;
  SphereField to_field(const GridPtr& grid) const;
  double max_abs_difference(const HalfSpinCoeffs& other) const;
};

HalfSpinCoeffs amplitude_coeffs_half(const SpinState& psi, const SpinState& phi);

// Wigner function: symbol of |psi><psi|; real, window independent.
SphereField wigner_field(const SpinState& psi, const SWKernel& kernel,
                         const GridPtr& grid);
HalfSpinCoeffs wigner_coeffs_half(const SpinState& psi);

// Amplitude coefficients after a rotation by alpha about the y-axis.
HalfSpinCoeffs rotated_coeffs_half(const SpinState& psi, const SpinState& phi,
                                   double alpha);

enum class StarRoute { Operator, Integral };

// Star product of two symbols.  The operator route maps both factors to
// operators, multiplies, and maps back (exact finite linear algebra).  The
// integral route evaluates the double quadrature
//   (F*G)(Omega) = ((2j+1)/4pi)^2 integral integral
//       Tr(Delta(Omega) Delta(Omega') Delta(Omega'')) F(Omega') G(Omega'')
//       dOmega' dOmega''
// literally; it is the independent cross-check of the operator route.
SphereField star_product(const SphereField& f, const SphereField& g,
                         const SWKernel& kernel,
                         StarRoute route = StarRoute::Operator);

// Husimi function |Psi|^2.  Also evaluated through the sandwich form
// <phi| Delta |psi><psi| Delta |phi>; the two routes must agree to 1e-12.
SphereField husimi_field(const SpinState& psi, const SpinState& phi,
                         const SWKernel& kernel, const GridPtr& grid);

// Rotated amplitude symbol(R) * Psi; equals the amplitude of (R psi, phi).
SphereField rotate_amplitude(const SpinState& psi, const SpinState& phi,
                             const SpinOperator& rotation, const SWKernel& kernel,
                             const GridPtr& grid);

struct SuperposedFields {
  SphereField amplitude;  // alpha Psi1 + beta Psi2
  SphereField wigner;     // |a|^2 W1 + |b|^2 W2 + cross star terms
  SphereField husimi;     // |Psi|^2 with cross terms
};

SuperposedFields superpose_and_reconstruct(const SpinState& psi1,
                                           const SpinState& psi2, Complex alpha,
                                           Complex beta, const SpinState& phi,
                                           const SWKernel& kernel,
                                           const GridPtr& grid);

// ((2j+1)/4pi) integral conj(Psi) (A_symbol * Psi) dOmega = <psi|A|psi>.
Complex expectation_phase_space(const SpinOperator& a, const SpinState& psi,
                                const SpinState& phi, const SWKernel& kernel,
                                const GridPtr& grid);

}  // namespace spinphase
